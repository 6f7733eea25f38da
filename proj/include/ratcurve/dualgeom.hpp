#ifndef RATCURVE_DUALGEOM_HPP
#define RATCURVE_DUALGEOM_HPP

#include <array>
#include <optional>
#include <vector>

#include "ratcurve/musyz.hpp"
#include "ratcurve/parametrization.hpp"
#include "ratcurve/ternary_form.hpp"

namespace ratcurve {

/// 2-minors (m01, m02, m12) of the Jacobian of phi, each of degree 2d-2:
/// m_ij = ds(f_i) dt(f_j) - ds(f_j) dt(f_i).
std::array<BinaryForm, 3> jacobian_minors(const Parametrization& phi);

struct DualParam {
    std::array<BinaryForm, 3> phi_dual; // coprime, jointly integer-primitive
    BinaryForm A;                       // gcd of the minors, primitive-positive
};

/// Dual parametrization (m12, -m02, m01) / gcd.
DualParam dual_parametrization(const Parametrization& phi);

struct GradientDual {
    std::array<BinaryForm, 3> psi; // gradient of F composed with phi, divided by h
    BinaryForm h;                  // the common factor, monic
};

/// Second route to the dual: grad F composed with phi. Checks deg h and the
/// projective equality psi ~ phi_dual; InternalError when either fails.
GradientDual dual_via_gradient(const Parametrization& phi, const TernaryForm& F);

/// Discriminant (up to constant) of u f0 + v f1 + w f2 with respect to (s,t):
/// primitive-positive ternary form in (u,v,w) of degree 2(d-1).
TernaryForm line_discriminant(const Parametrization& phi);

struct SingularPoint; // fibers.hpp

struct LineFactor {
    TernaryForm line; // a u + b v + c w for P = (a:b:c)
    int exponent;     // m_P - r_P
    ProjPoint2 point;
};

struct DualData {
    std::array<BinaryForm, 3> m;        // (m01, m02, m12)
    BinaryForm A;
    std::array<BinaryForm, 3> phi_dual;
    int d_dual;
    TernaryForm F_dual;
    TernaryForm D;                      // the line discriminant
    TernaryForm singular_lines;         // D / F_dual
    std::vector<LineFactor> lines;
    TernaryForm residual;               // unfactored non-rational part
};

/// Full dual pipeline: implicitize phi_dual, divide it out of the
/// discriminant, then peel the singular lines of the supplied rational
/// singular points at their maximal exponents (which the factorization
/// theorem pins to m_P - r_P).
DualData discriminant_factorization(const Parametrization& phi,
                                    const std::vector<SingularPoint>& singular_points);

} // namespace ratcurve

#endif
