#ifndef RATCURVE_DIFFORMS_HPP
#define RATCURVE_DIFFORMS_HPP

#include <array>
#include <vector>

#include "ratcurve/parametrization.hpp"
#include "ratcurve/qmatrix.hpp"
#include "ratcurve/ternary_form.hpp"

namespace ratcurve {

/// Matrices of the pull-back maps on 0-, 1- and 2-forms in homogeneous
/// degree q. Monomial bases are graded-lex (s > t, x > y > z); columns are
/// slot-major (dx block, dy block, dz block); m1 stacks the ds rows above
/// the dt rows.
struct FormMapMatrices {
    int q;
    QMatrix m0; // S_q -> R_{qd}
    QMatrix m1; // (S_{q-1})^3 -> (R_{qd-1})^2
    QMatrix m2; // (S_{q-2})^3 -> R_{qd-2}
};

FormMapMatrices form_matrices(const Parametrization& phi, int q);

/// (rows - rank) for the three matrices at degree q.
std::array<int, 3> coker_dims(const Parametrization& phi, int q);

/// (tau, delta) with delta from coker of the 0-form map and tau from the
/// 1-form map, both confirmed stable one degree higher (InternalError
/// otherwise).
std::pair<int, int> tjurina_delta(const Parametrization& phi);

/// a(q) = nullity of the 2-form map built at form degree q+2, q = 0..q_max.
std::vector<int> a_sequence(const Parametrization& phi, int q_max);

enum class Freeness { Free, NearlyFree, Neither };

struct InvariantReport {
    int tau = 0;
    int delta = 0;
    int mdr = 0;
    std::vector<int> a_seq;
    Freeness verdict = Freeness::Neither;
    int d1 = 0, d2 = 0; // exponents, meaningful for Free / NearlyFree
    int tau_dr = 0;     // (d-1)^2 - r(d-r-1)
};

/// Freeness test from the a(q) sequence, with the tau benchmark identity
/// enforced as a runtime consistency check.
InvariantReport freeness_verdict(const Parametrization& phi);

/// Kernel dimensions of the induced maps on 1- and 2-forms modulo the
/// F-trivial subspaces (S_{q-d} dF + F O^1 and F O^2 + dF ^ O^1).
std::pair<int, int> tilde_kernel_dims(const Parametrization& phi, const TernaryForm& F,
                                      int q);

const char* freeness_name(Freeness f);

} // namespace ratcurve

#endif
