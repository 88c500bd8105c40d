#include "qsa/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qsa/chainmaps.hpp"
#include "qsa/expr.hpp"

namespace qsa {

namespace {

std::pair<int, int> parse_q_key(const std::string& key, int N) {
    if (key.size() != 3 || key[0] != 'q' || !std::isdigit((unsigned char)key[1]) ||
        !std::isdigit((unsigned char)key[2]))
        throw ConfigError("bad q table key '" + key + "' (expected qIJ)");
    int i = key[1] - '0', j = key[2] - '0';
    if (i < 1 || j < 1 || i > N || j > N)
        throw ConfigError("q table key '" + key + "' out of range");
    return {i, j};
}

GCtx load_group(const Ctx& ctx, const Json& g) {
    if (!g.contains("orders") || !g["orders"].is_array())
        throw ConfigError("group.orders must be an array of cyclic orders");
    std::vector<int> orders;
    for (const auto& o : g["orders"]) orders.push_back(o.get<int>());
    for (int o : orders) {
        if (o < 1) throw ConfigError("group orders must be >= 1");
        if (ctx->cyclotomic_order() % o != 0)
            throw ConfigError("every cyclic order must divide the cyclotomic order");
    }
    if (!g.contains("action")) throw ConfigError("group.action is required");
    const Json& a = g["action"];
    std::string type = a.value("type", "");
    ActionSpec spec;
    const int N = ctx->generators();
    if (type == "diagonal") {
        if (!a.contains("characters")) throw ConfigError("diagonal action needs 'characters'");
        DiagonalAction d;
        for (const auto& row : a["characters"]) {
            std::vector<int> r;
            for (const auto& v : row) r.push_back(v.get<int>());
            d.chi_exp.push_back(std::move(r));
        }
        if (static_cast<int>(d.chi_exp.size()) != N)
            throw ConfigError("characters must have one row per generator x_i");
        for (const auto& row : d.chi_exp)
            if (row.size() != orders.size())
                throw ConfigError("characters rows must have one entry per group generator");
        spec = std::move(d);
    } else if (type == "monomial") {
        if (!a.contains("images")) throw ConfigError("monomial action needs 'images'");
        MonomialAction m;
        for (const auto& row : a["images"]) {
            std::vector<MonomialImage> imgs;
            for (const auto& v : row) {
                auto [coeff, target] = parse_generator_image(ctx, v.get<std::string>());
                imgs.push_back({coeff, target});
            }
            m.images.push_back(std::move(imgs));
        }
        if (m.images.size() != orders.size())
            throw ConfigError("images must have one row per group generator");
        for (const auto& row : m.images)
            if (static_cast<int>(row.size()) != N)
                throw ConfigError("each images row needs an entry per x_i");
        spec = std::move(m);
    } else {
        throw ConfigError("group.action.type must be 'diagonal' or 'monomial'");
    }
    GCtx grp = GroupData::make(ctx, std::move(orders), std::move(spec));
    if (auto v = validate_action(grp))
        throw ConfigError("invalid group action: " + v->message);
    return grp;
}

} // namespace

CliConfig load_config_json(const Json& j) {
    if (!j.contains("N")) throw ConfigError("config needs the generator count N");
    int N = j["N"].get<int>();
    if (N < 1) throw ConfigError("N must be >= 1");
    int cyc = j.value("cyclotomic_order", 1);
    if (cyc < 1) throw ConfigError("cyclotomic_order must be >= 1");

    Ctx ctx;
    if (!j.contains("q") || (j["q"].is_string() && j["q"].get<std::string>() == "symbolic")) {
        ctx = QContext::symbolic(N, cyc);
    } else if (j["q"].is_object()) {
        std::vector<CycNumber> vals(N * (N - 1) / 2, CycNumber::from_rational(1, cyc));
        std::vector<bool> seen(vals.size(), false);
        for (const auto& [key, value] : j["q"].items()) {
            auto [i, jj] = parse_q_key(key, N);
            CycNumber v;
            try {
                v = parse_cyc_value(cyc, value.get<std::string>());
            } catch (const ParseError& e) {
                throw ConfigError("bad value for " + key + ": " + e.what());
            }
            if (v.is_zero()) throw ConfigError(key + " must be nonzero");
            if (i == jj) {
                if (!v.is_one()) throw ConfigError("q_ii must be 1 (got " + key + ")");
                continue;
            }
            bool flip = i > jj;
            int a = std::min(i, jj), b = std::max(i, jj);
            CycNumber canonical = flip ? v.inverse() : v;
            int slot = qexp_slot(N, a, b);
            if (seen[slot] && !(vals[slot] == canonical))
                throw ConfigError("inconsistent values for q" + std::to_string(a) +
                                  std::to_string(b) + " and its inverse");
            vals[slot] = canonical;
            seen[slot] = true;
        }
        ctx = QContext::specialized(N, cyc, std::move(vals));
    } else {
        throw ConfigError("q must be \"symbolic\" or a table of values");
    }

    CliConfig cfg;
    cfg.ctx = ctx;
    if (j.contains("bounds")) {
        const Json& b = j["bounds"];
        cfg.bounds.degree_cap = b.value("degree_cap", cfg.bounds.degree_cap);
        cfg.bounds.max_p = b.value("max_p", cfg.bounds.max_p);
        cfg.bounds.max_entry_degree = b.value("max_entry_degree", cfg.bounds.max_entry_degree);
        if (cfg.bounds.degree_cap < 0 || cfg.bounds.max_p < 0 || cfg.bounds.max_entry_degree < 1)
            throw ConfigError("bad bounds");
    }
    if (j.contains("group")) cfg.grp = load_group(ctx, j["group"]);
    return cfg;
}

CliConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    return load_config_json(j);
}

namespace {

int worker_count() {
    if (const char* env = std::getenv("QSA_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    return 1;
}

void emit(std::ostream& out, bool as_json, const Json& payload,
          const std::string& human) {
    if (as_json)
        out << payload.dump(2) << "\n";
    else
        out << human;
}

int cmd_verify(const CliConfig& cfg, const std::string& suite, bool as_json,
               std::ostream& out) {
    VerifySetup setup{cfg.ctx, cfg.grp, cfg.bounds};
    auto results = run_suite(setup, suite, worker_count());
    bool all_pass = true;
    Json checks = Json::object();
    std::ostringstream human;
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        Json entry;
        entry["status"] = r.pass ? "pass" : "fail";
        if (!r.pass) entry["counterexample"] = r.counterexample;
        checks[r.suite + "/" + r.name] = std::move(entry);
        human << (r.pass ? "[pass] " : "[FAIL] ") << r.suite << "/" << r.name;
        if (!r.pass) human << "\n       " << r.counterexample;
        human << "\n";
    }
    Json payload;
    payload["status"] = all_pass ? "ok" : "fail";
    payload["checks"] = std::move(checks);
    emit(out, as_json, payload, human.str());
    return all_pass ? 0 : 1;
}

int cmd_basis(const CliConfig& cfg, int m, int cap, bool as_json, std::ostream& out) {
    Json payload;
    payload["status"] = "ok";
    if (cfg.grp) {
        auto basis = hh_skew_basis(cfg.grp, m, cap);
        Json result = Json::array();
        std::ostringstream human;
        for (const auto& b : basis) {
            for (auto& t : cochain_json(b)) result.push_back(t);
            human << to_expression(b) << "\n";
        }
        payload["result"] = std::move(result);
        emit(out, as_json, payload, human.str());
    } else {
        auto basis = hh_basis(cfg.ctx, m, cap);
        Json result = Json::array();
        std::ostringstream human;
        for (const auto& b : basis) {
            for (auto& t : cochain_json(b)) result.push_back(t);
            human << to_expression(b) << "\n";
        }
        payload["result"] = std::move(result);
        emit(out, as_json, payload, human.str());
    }
    return 0;
}

int cmd_bracket(const CliConfig& cfg, const std::string& alpha, const std::string& beta,
                const std::string& method, bool as_json, std::ostream& out) {
    Json payload;
    if (cfg.grp) {
        SkewKoszulCochain a = parse_skew_cochain(cfg.grp, alpha);
        SkewKoszulCochain b = parse_skew_cochain(cfg.grp, beta);
        std::optional<SkewKoszulCochain> closed, piped;
        if (method == "closed" || method == "both") {
            SkewKoszulCochain acc(cfg.grp, a.degree() + b.degree() - 1);
            for (const auto& [ka, ca] : a.terms())
                for (const auto& [kb, cb] : b.terms())
                    acc = acc + bracket_skew_closed(
                                    SkewKoszulCochain::basis(cfg.grp, std::get<0>(ka),
                                                             std::get<1>(ka), std::get<2>(ka),
                                                             ca),
                                    SkewKoszulCochain::basis(cfg.grp, std::get<0>(kb),
                                                             std::get<1>(kb), std::get<2>(kb),
                                                             cb));
            closed = acc;
        }
        if (method == "pipeline" || method == "both")
            piped = bracket_skew_pipeline(reynolds(a), reynolds(b));
        const SkewKoszulCochain& shown = closed ? *closed : *piped;
        payload["result"] = cochain_json(shown);
        std::ostringstream human;
        human << to_expression(shown) << "\n";
        if (closed && piped) {
            bool equal = *closed == *piped;
            payload["checks"] = Json{{"methods-agree", equal ? "pass" : "fail"}};
            payload["status"] = equal ? "ok" : "mismatch";
            human << (equal ? "methods agree\n" : "METHODS DISAGREE\n");
            emit(out, as_json, payload, human.str());
            return equal ? 0 : 1;
        }
        payload["status"] = "ok";
        emit(out, as_json, payload, human.str());
        return 0;
    }
    KoszulCochain a = parse_koszul_cochain(cfg.ctx, alpha);
    KoszulCochain b = parse_koszul_cochain(cfg.ctx, beta);
    std::optional<KoszulCochain> closed, piped;
    if (method == "closed" || method == "both") {
        KoszulCochain acc(cfg.ctx, a.degree() + b.degree() - 1);
        for (const auto& [ka, ca] : a.terms())
            for (const auto& [kb, cb] : b.terms())
                acc = acc + bracket_closed(
                                KoszulCochain::basis(cfg.ctx, ka.first, ka.second, ca),
                                KoszulCochain::basis(cfg.ctx, kb.first, kb.second, cb));
        closed = acc;
    }
    if (method == "pipeline" || method == "both") piped = bracket_pipeline(a, b);
    const KoszulCochain& shown = closed ? *closed : *piped;
    payload["result"] = cochain_json(shown);
    std::ostringstream human;
    human << to_expression(shown) << "\n";
    if (closed && piped) {
        bool equal = *closed == *piped;
        payload["checks"] = Json{{"methods-agree", equal ? "pass" : "fail"}};
        payload["status"] = equal ? "ok" : "mismatch";
        human << (equal ? "methods agree\n" : "METHODS DISAGREE\n");
        emit(out, as_json, payload, human.str());
        return equal ? 0 : 1;
    }
    payload["status"] = "ok";
    emit(out, as_json, payload, human.str());
    return 0;
}

int cmd_lift(const CliConfig& cfg, const std::string& map, int degree,
             const std::string& input, bool as_json, std::ostream& out) {
    Json payload;
    payload["status"] = "ok";
    std::ostringstream human;
    if (map == "phi") {
        std::string text = input;
        if (text.rfind("dx", 0) == 0) text = "1 ^ " + text; // bare wedge shorthand
        auto terms = parse_terms(cfg.ctx, text);
        if (terms.size() != 1 || !terms.front().monomial.is_constant() || terms.front().group)
            throw ConfigError("phi lift input must be a single scalar multiple of dx(...)");
        const auto& t = terms.front();
        if (degree >= 0 && degree != static_cast<int>(t.dx.size()))
            throw ConfigError("--degree disagrees with the dx length");
        KoszulToBarLift lift(cfg.ctx);
        BarElem img = lift.image(ExtIndex::of(t.dx)).scaled(t.coeff);
        payload["result"] = bar_json(img);
        human << img.debug_string() << "\n";
    } else if (map == "psi") {
        std::vector<Monomial> word;
        Scalar coeff = Scalar::one();
        std::string slot;
        std::istringstream feed(input);
        while (std::getline(feed, slot, '|')) {
            AlgebraElement e = parse_algebra_element(cfg.ctx, slot);
            if (e.size() != 1)
                throw ConfigError("each psi word slot must be a single monomial term");
            const auto& [m, c] = *e.terms().begin();
            if (m.is_constant()) throw ConfigError("psi word entries must be nonconstant");
            word.push_back(m);
            coeff *= c;
        }
        if (degree >= 0 && degree != static_cast<int>(word.size()))
            throw ConfigError("--degree disagrees with the word length");
        BarToKoszulLift lift(cfg.ctx);
        KoszulElem img = lift.image(word).scaled(coeff);
        payload["result"] = koszul_json(img);
        human << img.debug_string() << "\n";
    } else {
        throw ConfigError("--map must be phi or psi");
    }
    emit(out, as_json, payload, human.str());
    return 0;
}

int cmd_dq(const CliConfig& cfg, int i, const std::string& mono, bool as_json,
           std::ostream& out) {
    AlgebraElement a = parse_algebra_element(cfg.ctx, mono);
    EnvElem d = dq(i, a);
    Json payload;
    payload["status"] = "ok";
    payload["result"] = env_json(d);
    std::ostringstream human;
    for (const auto& [k, c] : d.terms()) {
        human << "(" << c.to_string(cfg.ctx->generators()) << ") * ";
        Json l = Json(k.first.e), r = Json(k.second.e);
        human << l.dump() << " (x) " << r.dump() << "\n";
    }
    emit(out, as_json, payload, human.str());
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Koszul/bar comparison morphisms and Gerstenhaber brackets for "
                 "quantum symmetric algebras"};
    app.name("qsa");
    std::string config_path;
    bool as_json = false;
    app.add_option("--config", config_path, "configuration file (JSON)")->required();
    app.add_flag("--json", as_json, "machine-readable JSON output");

    auto* verify = app.add_subcommand("verify", "run identity suites");
    std::string suite = "all";
    verify->add_option("--suite", suite, "koszul|homotopy|chainmaps|bracket|skew|all");
    std::string fault;
    verify->add_option("--inject-fault", fault, "perturb an internal coefficient (testing)")
        ->group("");

    auto* basis = app.add_subcommand("basis", "enumerate a cohomology basis");
    int m = 0, cap = -1;
    basis->add_option("-m", m, "cohomological degree")->required();
    basis->add_option("--cap", cap, "polynomial degree cap")->required();

    auto* bracket = app.add_subcommand("bracket", "Gerstenhaber bracket of two cocycles");
    std::string alpha, beta, method = "both";
    bracket->add_option("--alpha", alpha, "first cocycle expression")->required();
    bracket->add_option("--beta", beta, "second cocycle expression")->required();
    bracket->add_option("--method", method, "closed|pipeline|both");

    auto* lift = app.add_subcommand("lift", "recursively lifted comparison morphism");
    std::string map;
    int degree = -1;
    lift->add_option("--map", map, "phi|psi")->required();
    lift->add_option("--degree", degree, "expected degree (validated)");
    std::string input;
    lift->add_option("--input", input, "wedge (phi) or '|'-separated word (psi)")->required();

    auto* dqc = app.add_subcommand("dq", "quantum difference quotient");
    int dq_i = 0;
    std::string dq_mono;
    dqc->add_option("--i", dq_i, "operator index")->required();
    dqc->add_option("--mono", dq_mono, "algebra element expression")->required();

    app.require_subcommand(1);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        CliConfig cfg = load_config_file(config_path);
        if (verify->parsed()) {
            if (!fault.empty()) {
                if (fault != "mu") throw ConfigError("unknown fault name: " + fault);
                testing::set_psi_mu_fault(true);
            }
            int rc = cmd_verify(cfg, suite, as_json, out);
            testing::set_psi_mu_fault(false);
            return rc;
        }
        if (basis->parsed()) {
            if (m < 0 || m > cfg.ctx->generators())
                throw ConfigError("-m must lie in 0..N");
            if (cap < 0) throw ConfigError("--cap must be >= 0");
            return cmd_basis(cfg, m, cap, as_json, out);
        }
        if (bracket->parsed()) {
            if (method != "closed" && method != "pipeline" && method != "both")
                throw ConfigError("--method must be closed, pipeline or both");
            return cmd_bracket(cfg, alpha, beta, method, as_json, out);
        }
        if (lift->parsed()) return cmd_lift(cfg, map, degree, input, as_json, out);
        if (dqc->parsed()) return cmd_dq(cfg, dq_i, dq_mono, as_json, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const ConfigError& e) {
        testing::set_psi_mu_fault(false);
        err << "config error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        testing::set_psi_mu_fault(false);
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        testing::set_psi_mu_fault(false);
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace qsa
