#include "qsa/expr.hpp"

#include <cctype>

namespace qsa {

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, Hash, LParen, RParen, Comma, End };

struct Token {
    Tok kind;
    std::string text;
    size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }
    bool at(Tok k) const { return cur_.kind == k; }
    Token expect(Tok k, const char* what) {
        if (cur_.kind != k) throw ParseError(std::string("expected ") + what, cur_.pos);
        return take();
    }

private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        size_t start = i_;
        if (i_ >= src_.size()) {
            cur_ = {Tok::End, "", start};
            return;
        }
        char c = src_[i_];
        auto single = [&](Tok k) {
            ++i_;
            cur_ = {k, std::string(1, c), start};
        };
        switch (c) {
            case '+': return single(Tok::Plus);
            case '-': return single(Tok::Minus);
            case '*': return single(Tok::Star);
            case '/': return single(Tok::Slash);
            case '^': return single(Tok::Caret);
            case '#': return single(Tok::Hash);
            case '(': return single(Tok::LParen);
            case ')': return single(Tok::RParen);
            case ',': return single(Tok::Comma);
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) ++i_;
            cur_ = {Tok::Int, src_.substr(start, i_ - start), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[i_])))) ++i_;
            cur_ = {Tok::Ident, src_.substr(start, i_ - start), start};
            return;
        }
        throw ParseError("unexpected character", start);
    }

    const std::string& src_;
    size_t i_ = 0;
    Token cur_{Tok::End, "", 0};
};

long parse_signed_int(Lexer& lex) {
    bool neg = false;
    if (lex.at(Tok::Minus)) {
        lex.take();
        neg = true;
    }
    Token t = lex.expect(Tok::Int, "integer");
    long v = std::stol(t.text);
    return neg ? -v : v;
}

std::vector<int> parse_int_list(Lexer& lex) {
    lex.expect(Tok::LParen, "'('");
    std::vector<int> out;
    if (!lex.at(Tok::RParen)) {
        out.push_back(static_cast<int>(parse_signed_int(lex)));
        while (lex.at(Tok::Comma)) {
            lex.take();
            out.push_back(static_cast<int>(parse_signed_int(lex)));
        }
    }
    lex.expect(Tok::RParen, "')'");
    return out;
}

struct TermParser {
    const Ctx& ctx;
    Lexer& lex;
    bool allow_hash_dx;

    // exponent following a factor; '^' followed by dx belongs to the term
    std::optional<long> factor_exponent() {
        if (!lex.at(Tok::Caret)) return std::nullopt;
        // lookahead: '^' then dx means the wedge part
        Token caret = lex.take();
        if (lex.at(Tok::Ident) && lex.peek().text == "dx") {
            pending_dx_caret = caret;
            return std::nullopt;
        }
        return parse_signed_int(lex);
    }

    std::optional<Token> pending_dx_caret;

    ParsedTerm parse_term() {
        ParsedTerm term;
        term.coeff = Scalar::one();
        term.monomial = Monomial::unit(ctx->generators());
        pending_dx_caret.reset();
        bool first = true;
        while (true) {
            if (!first) {
                if (lex.at(Tok::Star)) {
                    lex.take();
                } else {
                    break;
                }
            }
            first = false;
            parse_factor(term);
            if (pending_dx_caret) break;
        }
        if (allow_hash_dx && lex.at(Tok::Hash)) {
            lex.take();
            Token g = lex.expect(Tok::Ident, "'g'");
            if (g.text != "g") throw ParseError("expected 'g'", g.pos);
            term.group = parse_int_list(lex);
        }
        if (!pending_dx_caret && lex.at(Tok::Caret)) {
            Token caret = lex.take();
            pending_dx_caret = caret;
        }
        if (pending_dx_caret) {
            if (!allow_hash_dx)
                throw ParseError("'^ dx' not allowed here", pending_dx_caret->pos);
            Token d = lex.expect(Tok::Ident, "'dx'");
            if (d.text != "dx") throw ParseError("expected 'dx'", d.pos);
            std::vector<int> idx = parse_int_list(lex);
            int prev = 0;
            for (int i : idx) {
                if (i < 1 || i > ctx->generators())
                    throw ParseError("dx index out of range", d.pos);
                if (i <= prev)
                    throw ParseError("dx indices must strictly increase", d.pos);
                prev = i;
            }
            term.dx = idx;
        }
        return term;
    }

    void parse_factor(ParsedTerm& term) {
        if (lex.at(Tok::Int)) {
            Token t = lex.take();
            Rational r(Integer(t.text));
            if (lex.at(Tok::Slash)) {
                lex.take();
                Token den = lex.expect(Tok::Int, "denominator");
                Integer d(den.text);
                if (d == 0) throw ParseError("zero denominator", den.pos);
                r /= Rational(d);
            }
            term.coeff *= Scalar::from_rational(r);
            return;
        }
        Token t = lex.expect(Tok::Ident, "factor");
        if (t.text == "zeta") {
            long e = 1;
            if (auto exp = factor_exponent()) e = *exp;
            term.coeff *= Scalar::from_cyc(ctx->zeta(e));
            return;
        }
        if (t.text.size() == 3 && t.text[0] == 'q' &&
            std::isdigit(static_cast<unsigned char>(t.text[1])) &&
            std::isdigit(static_cast<unsigned char>(t.text[2]))) {
            int i = t.text[1] - '0';
            int j = t.text[2] - '0';
            if (i < 1 || j < 1 || i > ctx->generators() || j > ctx->generators() || i == j)
                throw ParseError("unknown q parameter " + t.text, t.pos);
            long e = 1;
            if (auto exp = factor_exponent()) e = *exp;
            term.coeff *= ctx->q_power(i, j, e);
            return;
        }
        if (t.text.size() >= 2 && t.text[0] == 'x') {
            int idx = 0;
            for (size_t k = 1; k < t.text.size(); ++k) {
                if (!std::isdigit(static_cast<unsigned char>(t.text[k])))
                    throw ParseError("unknown token " + t.text, t.pos);
                idx = idx * 10 + (t.text[k] - '0');
            }
            if (idx < 1 || idx > ctx->generators())
                throw ParseError("generator index out of range in " + t.text, t.pos);
            long e = 1;
            if (auto exp = factor_exponent()) e = *exp;
            if (e < 0) throw ParseError("negative exponent on a generator", t.pos);
            term.monomial.e[idx - 1] += static_cast<int>(e);
            return;
        }
        throw ParseError("unknown token " + t.text, t.pos);
    }
};

std::vector<ParsedTerm> parse_impl(const Ctx& ctx, const std::string& text, bool allow_hash_dx) {
    Lexer lex(text);
    TermParser parser{ctx, lex, allow_hash_dx, std::nullopt};
    std::vector<ParsedTerm> terms;
    bool negate = false;
    if (lex.at(Tok::Minus)) {
        lex.take();
        negate = true;
    }
    while (true) {
        ParsedTerm t = parser.parse_term();
        if (negate) t.coeff = -t.coeff;
        terms.push_back(std::move(t));
        if (lex.at(Tok::End)) break;
        if (lex.at(Tok::Plus)) {
            lex.take();
            negate = false;
        } else if (lex.at(Tok::Minus)) {
            lex.take();
            negate = true;
        } else {
            throw ParseError("expected '+', '-' or end of input", lex.peek().pos);
        }
    }
    return terms;
}

} // namespace

std::vector<ParsedTerm> parse_terms(const Ctx& ctx, const std::string& text) {
    return parse_impl(ctx, text, true);
}

KoszulCochain parse_koszul_cochain(const Ctx& ctx, const std::string& text) {
    auto terms = parse_terms(ctx, text);
    if (terms.empty()) throw ParseError("empty expression", 0);
    int degree = static_cast<int>(terms.front().dx.size());
    KoszulCochain out(ctx, degree);
    for (const auto& t : terms) {
        if (t.group)
            throw ParseError("group component given but no group is configured", 0);
        if (static_cast<int>(t.dx.size()) != degree)
            throw ParseError("mixed dx lengths in one cochain", 0);
        out.add_term(t.monomial, ExtIndex::of(t.dx), t.coeff);
    }
    return out;
}

SkewKoszulCochain parse_skew_cochain(const GCtx& grp, const std::string& text) {
    const Ctx& ctx = grp->context();
    auto terms = parse_terms(ctx, text);
    if (terms.empty()) throw ParseError("empty expression", 0);
    int degree = static_cast<int>(terms.front().dx.size());
    SkewKoszulCochain out(grp, degree);
    for (const auto& t : terms) {
        if (static_cast<int>(t.dx.size()) != degree)
            throw ParseError("mixed dx lengths in one cochain", 0);
        GroupElement g = grp->identity();
        if (t.group) {
            if (t.group->size() != grp->orders().size())
                throw ParseError("group vector has wrong rank", 0);
            g = grp->reduce(GroupElement{*t.group});
        }
        out.add_term(t.monomial, g, ExtIndex::of(t.dx), t.coeff);
    }
    return out;
}

AlgebraElement parse_algebra_element(const Ctx& ctx, const std::string& text) {
    auto terms = parse_impl(ctx, text, false);
    AlgebraElement out(ctx);
    for (const auto& t : terms) out.add_term(t.monomial, t.coeff);
    return out;
}

CycNumber parse_cyc_value(int cyclotomic_order, const std::string& text) {
    Ctx scratch = QContext::symbolic(1, cyclotomic_order);
    auto terms = parse_impl(scratch, text, false);
    CycNumber acc = CycNumber::from_rational(0, cyclotomic_order);
    for (const auto& t : terms) {
        if (!t.monomial.is_constant())
            throw ParseError("generators not allowed in a scalar value", 0);
        acc = acc + t.coeff.constant_value();
    }
    return acc;
}

std::pair<Scalar, int> parse_generator_image(const Ctx& ctx, const std::string& text) {
    auto terms = parse_impl(ctx, text, false);
    if (terms.size() != 1)
        throw ParseError("generator image must be a single scalar multiple of one x_i", 0);
    const auto& t = terms.front();
    if (t.monomial.degree() != 1)
        throw ParseError("generator image must be a single scalar multiple of one x_i", 0);
    int target = 0;
    for (size_t i = 0; i < t.monomial.e.size(); ++i)
        if (t.monomial.e[i] == 1) target = static_cast<int>(i) + 1;
    return {t.coeff, target};
}

} // namespace qsa
