#ifndef RATCURVE_MUSYZ_HPP
#define RATCURVE_MUSYZ_HPP

#include <array>
#include <vector>

#include "ratcurve/parametrization.hpp"
#include "ratcurve/ternary_form.hpp"

namespace ratcurve {

/// Basis of { (g0,g1,g2) in (R_mu)^3 : g0 f0 + g1 f1 + g2 f2 = 0 }, the
/// degree-mu slice of the syzygy module, in the deterministic kernel-basis
/// order. Empty when there are no syzygies in that degree.
std::vector<std::array<BinaryForm, 3>> syzygy_space(const Parametrization& phi, int mu);

/// Hilbert-Burch basis of the syzygy module with the canonical selection:
/// p is the first kernel vector in the least degree mu1 with syzygies, q is
/// the first degree-mu2 kernel vector with nonzero reduction against the
/// monomial multiples of p (the reduced form is returned).
struct MuBasis {
    int mu1, mu2;
    std::array<BinaryForm, 3> p, q;
};
MuBasis mu_basis(const Parametrization& phi);

/// Generic fiber cardinality e >= 1; phi is proper iff e = 1.
int properness_degree(const Parametrization& phi);

struct ImplicitCurve {
    TernaryForm F; // primitive-positive, degree d, F(f0,f1,f2) = 0
    int e;         // always 1 here
};

/// Implicit equation by the Sylvester resultant of the two moving lines of
/// the mu-basis. Throws ImproperParametrization when e > 1.
ImplicitCurve implicit_equation(const Parametrization& phi);

/// Moving line g . (x,y,z) of a syzygy, as coefficients in (s,t) with
/// ternary-form values: index k holds the linear form multiplying
/// s^(mu-k) t^k.
std::vector<TernaryForm> moving_line(const std::array<BinaryForm, 3>& g);

} // namespace ratcurve

#endif
