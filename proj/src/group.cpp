#include "qsa/group.hpp"

#include <sstream>
#include <stdexcept>

namespace qsa {

GroupData::GroupData(Ctx ctx, std::vector<int> orders, ActionSpec action)
    : ctx_(std::move(ctx)), orders_(std::move(orders)), action_(std::move(action)) {
    for (int n : orders_)
        if (n < 1) throw std::invalid_argument("GroupData: cyclic orders must be >= 1");
    const int N = ctx_->generators();
    const int k = static_cast<int>(orders_.size());
    if (const auto* d = std::get_if<DiagonalAction>(&action_)) {
        if (static_cast<int>(d->chi_exp.size()) != N)
            throw std::invalid_argument("DiagonalAction: character matrix needs N rows");
        for (const auto& row : d->chi_exp)
            if (static_cast<int>(row.size()) != k)
                throw std::invalid_argument("DiagonalAction: character matrix needs k columns");
    } else {
        const auto& m = std::get<MonomialAction>(action_);
        if (static_cast<int>(m.images.size()) != k)
            throw std::invalid_argument("MonomialAction: one image list per generator");
        for (const auto& imgs : m.images) {
            if (static_cast<int>(imgs.size()) != N)
                throw std::invalid_argument("MonomialAction: need an image for every x_i");
            for (const auto& img : imgs) {
                if (img.target < 1 || img.target > N)
                    throw std::invalid_argument("MonomialAction: image target out of range");
                if (!img.coeff.is_single_term())
                    throw std::invalid_argument("MonomialAction: image coefficient must be a unit");
            }
        }
    }
}

std::shared_ptr<const GroupData> GroupData::make(Ctx ctx, std::vector<int> orders,
                                                 ActionSpec action) {
    return std::shared_ptr<const GroupData>(
        new GroupData(std::move(ctx), std::move(orders), std::move(action)));
}

std::shared_ptr<const GroupData> GroupData::trivial(Ctx ctx) {
    int N = ctx->generators();
    DiagonalAction d;
    d.chi_exp.assign(N, {});
    return make(std::move(ctx), {}, d);
}

int GroupData::group_order() const {
    int n = 1;
    for (int o : orders_) n *= o;
    return n;
}

GroupElement GroupData::identity() const {
    return GroupElement{std::vector<int>(orders_.size(), 0)};
}

GroupElement GroupData::reduce(GroupElement g) const {
    if (g.v.size() != orders_.size())
        throw std::invalid_argument("GroupElement: wrong rank");
    for (size_t i = 0; i < orders_.size(); ++i) {
        g.v[i] %= orders_[i];
        if (g.v[i] < 0) g.v[i] += orders_[i];
    }
    return g;
}

GroupElement GroupData::compose(const GroupElement& a, const GroupElement& b) const {
    GroupElement r = a;
    for (size_t i = 0; i < r.v.size(); ++i) r.v[i] += b.v[i];
    return reduce(r);
}

GroupElement GroupData::inverse(const GroupElement& g) const {
    GroupElement r = g;
    for (auto& x : r.v) x = -x;
    return reduce(r);
}

std::vector<GroupElement> GroupData::elements() const {
    std::vector<GroupElement> out;
    out.push_back(identity());
    for (size_t i = 0; i < orders_.size(); ++i) {
        std::vector<GroupElement> next;
        for (const auto& g : out) {
            for (int k = 0; k < orders_[i]; ++k) {
                GroupElement h = g;
                h.v[i] = k;
                next.push_back(h);
            }
        }
        out = std::move(next);
    }
    return out;
}

CycNumber GroupData::chi(int i, const GroupElement& g) const {
    const auto* d = std::get_if<DiagonalAction>(&action_);
    if (!d) throw std::logic_error("chi: action is not diagonal");
    long e = 0;
    for (size_t j = 0; j < g.v.size(); ++j) e += static_cast<long>(d->chi_exp[i - 1][j]) * g.v[j];
    return ctx_->zeta(e);
}

CycNumber GroupData::chi_monomial(const Monomial& l, const GroupElement& g) const {
    const auto* d = std::get_if<DiagonalAction>(&action_);
    if (!d) throw std::logic_error("chi_monomial: action is not diagonal");
    long e = 0;
    for (size_t i = 0; i < l.e.size(); ++i) {
        if (l.e[i] == 0) continue;
        for (size_t j = 0; j < g.v.size(); ++j)
            e += static_cast<long>(d->chi_exp[i][j]) * g.v[j] * l.e[i];
    }
    return ctx_->zeta(e);
}

CycNumber GroupData::chi_index(const ExtIndex& I, const GroupElement& g) const {
    Monomial m = Monomial::unit(ctx_->generators());
    for (int i : I.indices()) m.e[i - 1] = 1;
    return chi_monomial(m, g);
}

MonomialImage GroupData::gen_image(int gen, int i) const {
    const auto& m = std::get<MonomialAction>(action_);
    return m.images[gen][i - 1];
}

std::pair<Scalar, Monomial> GroupData::act_monomial(const GroupElement& g,
                                                    const Monomial& m) const {
    if (diagonal()) return {ctx_->cyc(chi_monomial(m, g)), m};
    // Apply each generator's substitution the required number of times.
    Scalar coeff = Scalar::one();
    Monomial cur = m;
    GroupElement gr = reduce(g);
    for (size_t j = 0; j < orders_.size(); ++j) {
        for (int rep = 0; rep < gr.v[j]; ++rep) {
            // substitute x_i -> c_i x_{sigma(i)} position-wise in the word,
            // then normal-order
            Word w = word_of(cur);
            for (auto& letter : w) {
                MonomialImage img = gen_image(static_cast<int>(j), letter);
                coeff *= img.coeff;
                letter = img.target;
            }
            auto [c, nm] = twist_reorder(ctx_, w);
            coeff *= c;
            cur = nm;
        }
    }
    return {coeff, cur};
}

AlgebraElement GroupData::act(const GroupElement& g, const AlgebraElement& a) const {
    AlgebraElement out(ctx_);
    for (const auto& [m, c] : a.terms()) {
        auto [cg, mg] = act_monomial(g, m);
        out.add_term(mg, c * cg);
    }
    return out;
}

ExtResult GroupData::act_ext(const GroupElement& g, const ExtIndex& I) const {
    // g.dx_i = c_i^{-1} dx_{sigma(i)} when g.x_i = c_i x_{sigma(i)}
    Scalar coeff = Scalar::one();
    std::vector<int> targets;
    for (int i : I.indices()) {
        Monomial xi = Monomial::gen(ctx_->generators(), i);
        auto [c, img] = act_monomial(g, xi);
        coeff *= c.inverse_unit();
        int target = 0;
        for (size_t t = 0; t < img.e.size(); ++t)
            if (img.e[t] == 1) target = static_cast<int>(t) + 1;
        targets.push_back(target);
    }
    ExtResult sorted = ext_reorder(ctx_, targets);
    if (sorted.zero) return sorted;
    sorted.coeff *= coeff;
    return sorted;
}

SkewElement SkewElement::term(const GCtx& g, const Monomial& m, const GroupElement& h,
                              const Scalar& c) {
    SkewElement s(g);
    s.add_term(m, g->reduce(h), c);
    return s;
}

void SkewElement::add_term(const Monomial& m, const GroupElement& h, const Scalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(m, h);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SkewElement SkewElement::operator+(const SkewElement& o) const {
    SkewElement r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

SkewElement SkewElement::operator-(const SkewElement& o) const {
    return *this + o.scaled(-Scalar::one());
}

SkewElement SkewElement::scaled(const Scalar& c) const {
    SkewElement r(grp_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.add_term(k.first, k.second, v * c);
    return r;
}

SkewElement skew_multiply(const SkewElement& u, const SkewElement& v) {
    if (u.group().get() != v.group().get())
        throw std::invalid_argument("skew_multiply: different groups");
    const GCtx& grp = u.group();
    const Ctx& ctx = grp->context();
    SkewElement out(grp);
    for (const auto& [ku, cu] : u.terms()) {
        for (const auto& [kv, cv] : v.terms()) {
            auto [cg, mg] = grp->act_monomial(ku.second, kv.first);
            auto [cm, m] = multiply_monomials(ctx, ku.first, mg);
            out.add_term(m, grp->compose(ku.second, kv.second), cu * cv * cg * cm);
        }
    }
    return out;
}

std::optional<ActionViolation> validate_action(const GCtx& grp) {
    const Ctx& ctx = grp->context();
    const int N = ctx->generators();
    const auto& orders = grp->orders();
    for (size_t j = 0; j < orders.size(); ++j) {
        GroupElement gen = grp->identity();
        gen.v[j] = 1;
        // relations x_i x_j = q_ij x_j x_i
        for (int a = 1; a <= N; ++a) {
            for (int b = a + 1; b <= N; ++b) {
                AlgebraElement xa = AlgebraElement::monomial(ctx, Monomial::gen(N, a));
                AlgebraElement xb = AlgebraElement::monomial(ctx, Monomial::gen(N, b));
                AlgebraElement lhs = multiply(grp->act(gen, xa), grp->act(gen, xb));
                AlgebraElement rhs =
                    multiply(grp->act(gen, xb), grp->act(gen, xa)).scaled(ctx->q_power(a, b, 1));
                if (!(lhs == rhs)) {
                    std::ostringstream msg;
                    msg << "generator " << (j + 1) << " breaks the relation x" << a << "*x" << b
                        << " = q" << a << b << "*x" << b << "*x" << a;
                    return ActionViolation{msg.str()};
                }
            }
        }
        // declared order
        GroupElement power = grp->identity();
        for (int rep = 0; rep < orders[j]; ++rep) power = grp->compose(power, gen);
        for (int i = 1; i <= N; ++i) {
            Monomial xi = Monomial::gen(N, i);
            Scalar coeff = Scalar::one();
            Monomial cur = xi;
            for (int rep = 0; rep < orders[j]; ++rep) {
                auto [c, m] = grp->act_monomial(gen, cur);
                coeff *= c;
                cur = m;
            }
            if (!(cur == xi) || !coeff.is_one()) {
                std::ostringstream msg;
                msg << "generator " << (j + 1) << " does not have order " << orders[j]
                    << " on x" << i;
                return ActionViolation{msg.str()};
            }
        }
    }
    return std::nullopt;
}

} // namespace qsa
