#include "qsa/serialize.hpp"

#include <sstream>

namespace qsa {

namespace {

void append_monomial(std::ostream& out, const Monomial& m, bool leading_one) {
    bool any = false;
    for (size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (any || !leading_one) out << "*";
        out << "x" << (i + 1);
        if (m.e[i] > 1) out << "^" << m.e[i];
        any = true;
    }
    if (!any && leading_one) out << "1";
}

std::string term_string(int N, bool neg, const std::string& scalar_body, const Monomial& m,
                        const std::optional<GroupElement>& g, const ExtIndex& dx) {
    (void)N;
    std::ostringstream out;
    if (neg) out << "-";
    bool mono_present = !m.is_constant();
    if (scalar_body == "1" && mono_present) {
        append_monomial(out, m, true);
    } else {
        out << scalar_body;
        append_monomial(out, m, false);
    }
    if (g) {
        bool nontrivial = false;
        for (int v : g->v) nontrivial |= (v != 0);
        if (nontrivial) {
            out << " # g(";
            for (size_t i = 0; i < g->v.size(); ++i) out << (i ? "," : "") << g->v[i];
            out << ")";
        }
    }
    if (dx.size() > 0) {
        out << " ^ dx(";
        auto idx = dx.indices();
        for (size_t i = 0; i < idx.size(); ++i) out << (i ? "," : "") << idx[i];
        out << ")";
    }
    return out.str();
}

std::string join_terms(const std::vector<std::string>& parts) {
    if (parts.empty()) return "0";
    std::ostringstream out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i == 0) {
            out << parts[i];
        } else if (!parts[i].empty() && parts[i][0] == '-') {
            out << " - " << parts[i].substr(1);
        } else {
            out << " + " << parts[i];
        }
    }
    return out.str();
}

Json int_array(const std::vector<int>& v) {
    Json a = Json::array();
    for (int x : v) a.push_back(x);
    return a;
}

} // namespace

std::string to_expression(const KoszulCochain& x) {
    const int N = x.context()->generators();
    std::vector<std::string> parts;
    for (const auto& [k, c] : x.terms())
        for (const auto& [neg, body] : c.atomic_pieces(N))
            parts.push_back(term_string(N, neg, body, k.first, std::nullopt, k.second));
    return join_terms(parts);
}

std::string to_expression(const SkewKoszulCochain& x) {
    const int N = x.group()->context()->generators();
    std::vector<std::string> parts;
    for (const auto& [k, c] : x.terms())
        for (const auto& [neg, body] : c.atomic_pieces(N))
            parts.push_back(
                term_string(N, neg, body, std::get<0>(k), std::get<1>(k), std::get<2>(k)));
    return join_terms(parts);
}

Json cochain_json(const KoszulCochain& x) {
    const int N = x.context()->generators();
    Json arr = Json::array();
    for (const auto& [k, c] : x.terms()) {
        Json t;
        t["coeff"] = c.to_string(N);
        t["monomial"] = int_array(k.first.e);
        t["dx"] = int_array(k.second.indices());
        arr.push_back(std::move(t));
    }
    return arr;
}

Json cochain_json(const SkewKoszulCochain& x) {
    const int N = x.group()->context()->generators();
    Json arr = Json::array();
    for (const auto& [k, c] : x.terms()) {
        Json t;
        t["coeff"] = c.to_string(N);
        t["monomial"] = int_array(std::get<0>(k).e);
        t["group"] = int_array(std::get<1>(k).v);
        t["dx"] = int_array(std::get<2>(k).indices());
        arr.push_back(std::move(t));
    }
    return arr;
}

Json algebra_json(const AlgebraElement& x) {
    const int N = x.context()->generators();
    Json arr = Json::array();
    for (const auto& [m, c] : x.terms()) {
        Json t;
        t["coeff"] = c.to_string(N);
        t["monomial"] = int_array(m.e);
        arr.push_back(std::move(t));
    }
    return arr;
}

Json env_json(const EnvElem& x) {
    const int N = x.context()->generators();
    Json arr = Json::array();
    for (const auto& [k, c] : x.terms()) {
        Json t;
        t["coeff"] = c.to_string(N);
        t["left"] = int_array(k.first.e);
        t["right"] = int_array(k.second.e);
        arr.push_back(std::move(t));
    }
    return arr;
}

Json koszul_json(const KoszulElem& x) {
    const int N = x.context()->generators();
    Json arr = Json::array();
    for (const auto& [k, c] : x.terms()) {
        Json t;
        t["coeff"] = c.to_string(N);
        t["left"] = int_array(k.left.e);
        t["dx"] = int_array(k.wedge.indices());
        t["right"] = int_array(k.right.e);
        arr.push_back(std::move(t));
    }
    return arr;
}

Json bar_json(const BarElem& x) {
    const int N = x.context()->generators();
    Json arr = Json::array();
    for (const auto& [k, c] : x.terms()) {
        Json t;
        t["coeff"] = c.to_string(N);
        t["left"] = int_array(k.left.e);
        Json word = Json::array();
        for (const auto& m : k.word) word.push_back(int_array(m.e));
        t["word"] = std::move(word);
        t["right"] = int_array(k.right.e);
        arr.push_back(std::move(t));
    }
    return arr;
}

} // namespace qsa
