#include "qsa/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qsa {

namespace {

using Poly = std::vector<Rational>; // c[0] + c[1] x + ...

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient of a by monic b.
Poly divide_exact(Poly a, const Poly& b) {
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (a.size() >= b.size()) {
        Rational lead = a.back();
        size_t shift = a.size() - b.size();
        q[shift] = lead;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
        trim(a);
        if (a.empty()) break;
    }
    return q;
}

} // namespace

int euler_phi(int n) {
    if (n < 1) throw std::invalid_argument("euler_phi: order must be >= 1");
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

const std::vector<Rational>& cyclotomic_polynomial(int n) {
    static std::map<int, Poly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be >= 1");

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
    Poly num(n + 1, Rational(0));
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        // Recursive call without the lock would deadlock; compute inline.
        auto sub = cache.find(d);
        if (sub == cache.end()) {
            Poly numd(d + 1, Rational(0));
            numd[0] = -1;
            numd[d] = 1;
            for (int e = 1; e < d; ++e) {
                if (d % e != 0) continue;
                numd = divide_exact(numd, cache.at(e));
            }
            sub = cache.emplace(d, std::move(numd)).first;
        }
        num = divide_exact(num, sub->second);
    }
    return cache.emplace(n, std::move(num)).first->second;
}

CycNumber CycNumber::from_rational(const Rational& r, int order) {
    std::vector<Rational> c(euler_phi(order), Rational(0));
    c[0] = r;
    return CycNumber(order, std::move(c));
}

CycNumber CycNumber::zeta_power(int order, long k) {
    long n = order;
    long e = ((k % n) + n) % n;
    const auto& phi = cyclotomic_polynomial(order);
    int deg = static_cast<int>(phi.size()) - 1;
    std::vector<Rational> c(std::max<long>(e + 1, deg), Rational(0));
    c[e] = 1;
    // reduce x^e mod Phi_n
    for (long d = static_cast<long>(c.size()) - 1; d >= deg; --d) {
        if (c[d] == 0) continue;
        Rational lead = c[d];
        c[d] = 0;
        for (int i = 0; i < deg; ++i) c[d - deg + i] -= lead * phi[i];
    }
    c.resize(deg);
    return CycNumber(order, std::move(c));
}

bool CycNumber::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycNumber::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational CycNumber::rational_value() const {
    if (!is_rational()) throw std::logic_error("CycNumber: not a rational");
    return c_[0];
}

bool CycNumber::is_one() const { return is_rational() && c_[0] == 1; }

void CycNumber::align(CycNumber& a, CycNumber& b) {
    if (a.order_ == b.order_) return;
    if (a.order_ == 1 || (a.is_rational() && a.order_ != b.order_ && b.order_ != 1)) {
        a = from_rational(a.c_[0], b.order_);
        return;
    }
    if (b.order_ == 1 || b.is_rational()) {
        b = from_rational(b.c_[0], a.order_);
        return;
    }
    throw std::logic_error("CycNumber: mixed cyclotomic orders");
}

CycNumber CycNumber::operator+(const CycNumber& o) const {
    CycNumber a = *this, b = o;
    align(a, b);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

CycNumber CycNumber::operator-(const CycNumber& o) const {
    CycNumber a = *this, b = o;
    align(a, b);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
    return a;
}

CycNumber CycNumber::operator-() const {
    CycNumber a = *this;
    for (auto& x : a.c_) x = -x;
    return a;
}

CycNumber CycNumber::operator*(const CycNumber& o) const {
    CycNumber a = *this, b = o;
    align(a, b);
    int deg = static_cast<int>(a.c_.size());
    std::vector<Rational> prod(2 * deg, Rational(0));
    for (int i = 0; i < deg; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; j < deg; ++j) {
            if (b.c_[j] == 0) continue;
            prod[i + j] += a.c_[i] * b.c_[j];
        }
    }
    const auto& phi = cyclotomic_polynomial(a.order_);
    for (int d = static_cast<int>(prod.size()) - 1; d >= deg; --d) {
        if (prod[d] == 0) continue;
        Rational lead = prod[d];
        prod[d] = 0;
        for (int i = 0; i < deg; ++i) prod[d - deg + i] -= lead * phi[i];
    }
    prod.resize(deg);
    return CycNumber(a.order_, std::move(prod));
}

CycNumber CycNumber::inverse() const {
    if (is_zero()) throw std::domain_error("CycNumber: division by zero");
    if (is_rational()) {
        CycNumber r = *this;
        r.c_[0] = Rational(1) / r.c_[0];
        return r;
    }
    // extended Euclid in Q[x] between the residue and Phi_n
    const auto& phi = cyclotomic_polynomial(order_);
    Poly r0(phi), r1(c_);
    trim(r1);
    Poly s0{Rational(0)}, s1{Rational(1)}; // coefficients of this residue
    while (!r1.empty() && r1.size() > 1) {
        // quotient of r0 by r1 (r1 not monic: scale)
        Poly q;
        Poly rem = r0;
        trim(rem);
        while (rem.size() >= r1.size()) {
            Rational lead = rem.back() / r1.back();
            size_t shift = rem.size() - r1.size();
            if (q.size() < shift + 1) q.resize(shift + 1, Rational(0));
            q[shift] += lead;
            for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= lead * r1[i];
            trim(rem);
        }
        // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
        Poly qs(q.size() + s1.size(), Rational(0));
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
        Poly snew = s0;
        if (snew.size() < qs.size()) snew.resize(qs.size(), Rational(0));
        for (size_t i = 0; i < qs.size(); ++i) snew[i] -= qs[i];
        trim(snew);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = snew;
    }
    if (r1.empty()) throw std::domain_error("CycNumber: not invertible (unexpected)");
    Rational unit = r1[0];
    int deg = static_cast<int>(c_.size());
    std::vector<Rational> res(deg, Rational(0));
    for (size_t i = 0; i < s1.size() && i < res.size(); ++i) res[i] = s1[i] / unit;
    return CycNumber(order_, std::move(res));
}

CycNumber CycNumber::pow(long e) const {
    CycNumber base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? -(unsigned long)e : (unsigned long)e;
    CycNumber acc = from_rational(1, order_);
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool CycNumber::operator==(const CycNumber& o) const {
    CycNumber a = *this, b = o;
    align(a, b);
    return a.c_ == b.c_;
}

bool CycNumber::operator<(const CycNumber& o) const {
    CycNumber a = *this, b = o;
    align(a, b);
    return a.c_ < b.c_;
}

std::string CycNumber::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rational r = c_[i];
        if (first) {
            if (r < 0) { out << "-"; r = -r; }
        } else {
            out << (r < 0 ? "-" : "+");
            if (r < 0) r = -r;
        }
        first = false;
        bool unit_coeff = (r == 1) && i > 0;
        if (!unit_coeff) {
            out << numerator(r);
            if (denominator(r) != 1) out << "/" << denominator(r);
        }
        if (i > 0) {
            if (!unit_coeff) out << "*";
            out << "zeta";
            if (i > 1) out << "^" << i;
        }
    }
    if (first) out << "0";
    return out.str();
}

} // namespace qsa
