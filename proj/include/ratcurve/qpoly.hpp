#ifndef RATCURVE_QPOLY_HPP
#define RATCURVE_QPOLY_HPP

#include <utility>
#include <vector>

#include "ratcurve/rational.hpp"

// Dense univariate polynomials over Q, ascending powers, trailing zeros
// stripped. Shared workhorse for binary-form cores and the dynamic-evaluation
// arithmetic.

namespace ratcurve::qp {

using QPoly = std::vector<Rational>;

inline bool is_zero(const QPoly& p) { return p.empty(); }
inline int deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly trim(QPoly p);
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const Rational& c);
QPoly derivative(const QPoly& a);
Rational eval(const QPoly& a, const Rational& x);

/// Quotient and remainder; divisor must be nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);

/// Monic gcd over Q (1 for coprime inputs, 0 only if both inputs are 0).
QPoly gcd(const QPoly& a, const QPoly& b);

/// g = gcd(a,b) monic together with u,v satisfying u*a + v*b = g.
struct ExtGcd {
    QPoly g, u, v;
};
ExtGcd ext_gcd(const QPoly& a, const QPoly& b);

QPoly monic(const QPoly& a);

/// Clear denominators and divide by integer content; leading coefficient > 0.
QPoly primitive(const QPoly& a);

/// Yun squarefree decomposition: list of (factor, multiplicity),
/// factors pairwise coprime, squarefree, product^mult = a up to constant.
std::vector<std::pair<QPoly, int>> squarefree(const QPoly& a);

/// All rational roots with multiplicities.
std::vector<std::pair<Rational, int>> rational_roots(const QPoly& a);

} // namespace ratcurve::qp

#endif
