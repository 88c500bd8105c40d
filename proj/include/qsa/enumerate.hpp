#pragma once

#include <functional>
#include <vector>

#include "qsa/algebra.hpp"

namespace qsa {

/// All exponent vectors in N variables with total degree exactly d.
inline void monomials_of_degree(int N, int d, const std::function<void(const Monomial&)>& fn) {
    Monomial m = Monomial::unit(N);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == N - 1) {
            m.e[pos] = left;
            fn(m);
            m.e[pos] = 0;
            return;
        }
        for (int k = 0; k <= left; ++k) {
            m.e[pos] = k;
            rec(pos + 1, left - k);
        }
        m.e[pos] = 0;
    };
    rec(0, d);
}

inline std::vector<Monomial> monomials_up_to(int N, int cap, int min_degree = 0) {
    std::vector<Monomial> out;
    for (int d = min_degree; d <= cap; ++d)
        monomials_of_degree(N, d, [&](const Monomial& m) { out.push_back(m); });
    return out;
}

/// All strictly increasing index tuples of length p in 1..N, as masks.
inline std::vector<ExtIndex> wedges_of_size(int N, int p) {
    std::vector<ExtIndex> out;
    for (uint32_t mask = 0; mask < (1u << N); ++mask) {
        ExtIndex idx{mask};
        if (idx.size() == p) out.push_back(idx);
    }
    return out;
}

/// All length-p tuples over the given entry list.
inline std::vector<std::vector<Monomial>> words_over(const std::vector<Monomial>& entries,
                                                     int p) {
    std::vector<std::vector<Monomial>> out{{}};
    for (int i = 0; i < p; ++i) {
        std::vector<std::vector<Monomial>> next;
        next.reserve(out.size() * entries.size());
        for (const auto& w : out) {
            for (const auto& e : entries) {
                auto w2 = w;
                w2.push_back(e);
                next.push_back(std::move(w2));
            }
        }
        out = std::move(next);
    }
    return out;
}

} // namespace qsa
