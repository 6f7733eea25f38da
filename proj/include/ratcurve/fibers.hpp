#ifndef RATCURVE_FIBERS_HPP
#define RATCURVE_FIBERS_HPP

#include <optional>
#include <string>
#include <vector>

#include "ratcurve/biform.hpp"
#include "ratcurve/parametrization.hpp"

namespace ratcurve {

/// Off-diagonal identification data of a parametrization: the quotient
/// biforms Q_ij with (sv - tu) Q_ij = f_i(s,t) f_j(u,v) - f_j(s,t) f_i(u,v),
/// the squarefree support multiple T of every identification parameter, and
/// the fraction-field gcd G of the Q_ij (properness witness).
struct FiberData {
    BiForm q01, q02, q12;
    BinaryForm T;
    BiForm G;
};

FiberData qforms(const Parametrization& phi);

/// Pull-back polynomial of a point: the monic gcd of the compositions of two
/// deterministic independent lines through P with phi. Degree 0 iff P is not
/// on the curve; degree = multiplicity m_P otherwise.
BinaryForm pullback_polynomial(const Parametrization& phi, const ProjPoint2& p);

struct SingularPoint {
    ProjPoint2 point;
    BinaryForm H;                  // pull-back polynomial, monic
    int m;                         // deg H = multiplicity
    int r;                         // distinct roots of H = branches
    std::vector<int> branch_mults; // one entry per branch; conjugate branches
                                   // share the multiplicity of their factor
};

struct SingularLocus {
    std::vector<SingularPoint> points;
    bool complete; // all singular points rational and accounted for
    BinaryForm residual_support; // squarefree factors of T yielding no rational point
};

/// Rational singular points of the curve: parameters are taken from rational
/// roots of T, and whole conjugate fibers that land on a rational point are
/// resolved through the packet refinement over Q[x]/(w).
SingularLocus singular_points(const Parametrization& phi);

enum class Cuspidality { Cuspidal, NotCuspidal, Incomplete };

struct CuspidalWitness {
    BinaryForm factor;   // squarefree factor of T containing the parameter
    std::string partner; // description of the verified second preimage
};

struct CuspidalityVerdict {
    Cuspidality status;
    std::optional<CuspidalWitness> witness;
    std::string diagnostics;
};

/// Exact decision whether every singularity is unibranch; dynamic evaluation
/// over each squarefree factor of T, with (v theta - u)-powers as the
/// diagonal contribution. NotCuspidal always carries a verified witness.
CuspidalityVerdict cuspidality(const Parametrization& phi, int degree_cap = 64);

/// Pointwise membership test of the degeneracy locus: true iff the matrix
/// [shifts of H | f0 f1 f2] on R_d has nullity >= 2, i.e. H divides the
/// pull-back polynomial of a singular point of multiplicity >= deg H.
bool mk_rank_test(const Parametrization& phi, const BinaryForm& H);

} // namespace ratcurve

#endif
