#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace qsa {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Monic minimal polynomial of a primitive n-th root of unity, as its
/// coefficient vector c[0] + c[1] x + ... + x^deg (integer coefficients).
const std::vector<Rational>& cyclotomic_polynomial(int n);

/// Euler totient; the degree of cyclotomic_polynomial(n).
int euler_phi(int n);

/// An element of Q(zeta_n), stored as a residue modulo the n-th cyclotomic
/// polynomial. Coefficient vector always has length phi(n). Orders 1 and 2
/// are plain rationals (zeta = 1 resp. -1).
///
/// A number of order 1 (a rational constant) mixes freely with any order;
/// any other order mismatch is a programming error.
class CycNumber {
public:
    CycNumber() : order_(1), c_(1, Rational(0)) {}

    static CycNumber from_rational(const Rational& r, int order = 1);
    static CycNumber zeta_power(int order, long k);

    int order() const { return order_; }
    const std::vector<Rational>& coefficients() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;           // only the constant coefficient is set
    Rational rational_value() const;    // requires is_rational()

    CycNumber operator+(const CycNumber& o) const;
    CycNumber operator-(const CycNumber& o) const;
    CycNumber operator*(const CycNumber& o) const;
    CycNumber operator-() const;
    CycNumber inverse() const;          // requires nonzero
    CycNumber pow(long e) const;

    bool operator==(const CycNumber& o) const;
    bool operator!=(const CycNumber& o) const { return !(*this == o); }
    bool operator<(const CycNumber& o) const;  // arbitrary total order, for map keys

    /// Text form over tokens accepted by the expression grammar,
    /// e.g. "1", "-2/3", "zeta^2", "1/2+1/2*zeta".
    std::string to_string() const;

private:
    CycNumber(int order, std::vector<Rational> c) : order_(order), c_(std::move(c)) {}
    static void align(CycNumber& a, CycNumber& b);

    int order_;
    std::vector<Rational> c_;
};

} // namespace qsa
