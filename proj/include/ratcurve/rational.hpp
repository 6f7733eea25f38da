#ifndef RATCURVE_RATIONAL_HPP
#define RATCURVE_RATIONAL_HPP

#include <gmpxx.h>

#include <array>
#include <string>
#include <vector>

namespace ratcurve {

// Exact scalars. mpq_class keeps the canonical form we require: positive
// denominator, reduced fraction, zero stored as 0/1.
using Int = mpz_class;
using Rational = mpq_class;

/// Parse "p", "-p" or "p/q" into a canonical rational. Throws InvalidInput.
Rational parse_rational(const std::string& text);

/// Render as "p/q", or plain "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Binomial coefficient C(n, k); zero for k < 0 or k > n.
long binomial(long n, long k);

/// All positive divisors of |n| (n != 0), ascending.
std::vector<Int> divisors(const Int& n);

/// Point of P^1(Q) as a coprime integer pair with positive first nonzero entry.
struct ProjPoint1 {
    Int a, b;
    bool operator==(const ProjPoint1&) const = default;
};

/// Point of P^2(Q), same normalization.
struct ProjPoint2 {
    Int x, y, z;
    bool operator==(const ProjPoint2&) const = default;
    bool operator<(const ProjPoint2& o) const;
    std::string str() const;
};

ProjPoint1 normalize_point(const Rational& a, const Rational& b);
ProjPoint2 normalize_point(const Rational& x, const Rational& y, const Rational& z);

} // namespace ratcurve

#endif
