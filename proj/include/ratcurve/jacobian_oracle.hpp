#ifndef RATCURVE_JACOBIAN_ORACLE_HPP
#define RATCURVE_JACOBIAN_ORACLE_HPP

#include <vector>

#include "ratcurve/difforms.hpp"
#include "ratcurve/ternary_form.hpp"

namespace ratcurve {

// Implicit-side reference computations from F alone. These cross-validate
// every parametrization-side result; the two routes never share a matrix.

/// dim AR(F)_q: nullity of (a,b,c) -> a F_x + b F_y + c F_z on (S_q)^3.
int ar_dim(const TernaryForm& F, int q);

/// dim M(F)_k for the Milnor algebra M(F) = S/J.
int milnor_hilbert(const TernaryForm& F, int k);

/// (tau, st): the stable Hilbert value of M(F) read off at k = 2d-3 and
/// confirmed at 2d-2 (InternalError on disagreement), and the least degree
/// from which the Hilbert function is constant.
std::pair<int, int> tjurina_stability(const TernaryForm& F);

/// dim N(F)_k via the Hilbert-function identity
/// dim N(F)_k = dim M(F)_k + dim M(F)_{D-k} - dim M(F_s)_k - tau, D = 3(d-2),
/// where M(F_s) is the smooth reference series ((1-t^{d-1})/(1-t))^3.
int n_dim(const TernaryForm& F, int k, int tau);

struct OracleReport {
    int tau = 0;
    int mdr = 0;
    int st = 0;
    std::vector<int> ar_dims;        // q = 0..d
    std::vector<int> milnor;         // k = 0..2d-2
    std::vector<int> n_dims;         // k = d-2..2d-4
    Freeness verdict = Freeness::Neither;
    int d1 = 0, d2 = 0;
};

/// Freeness from the saturation side: free iff N(F) vanishes on the scan
/// window [d-2, 2d-4], nearly free iff its maximal dimension there is 1.
OracleReport oracle_report(const TernaryForm& F);

/// Hilbert series coefficient of the smooth reference ((1-t^{d-1})/(1-t))^3.
int smooth_milnor_series(int d, int k);

} // namespace ratcurve

#endif
