#ifndef RATCURVE_REPORT_HPP
#define RATCURVE_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "ratcurve/difforms.hpp"
#include "ratcurve/dualgeom.hpp"
#include "ratcurve/fibers.hpp"
#include "ratcurve/jacobian_oracle.hpp"
#include "ratcurve/musyz.hpp"
#include "ratcurve/parametrization.hpp"

namespace ratcurve {

struct CrossCheck {
    std::string name;
    bool pass;
    std::string lhs, rhs;
};

struct AnalyzeOptions {
    bool deep = false;      // add tilde-kernel checks at q = 2d-2 and 2d
    bool skip_dual = false; // skip the dual / discriminant pipeline
    int max_q = -1;         // a-sequence length; default d
};

struct CurveReport {
    int d = 0;
    std::array<std::vector<std::string>, 3> input; // coefficient echo
    int e = 1;
    MuBasis mu;
    TernaryForm F;
    int tau = 0, delta = 0;
    std::optional<int> mdr;
    std::optional<InvariantReport> verdict; // absent for d = 2
    std::optional<OracleReport> oracle;     // absent for d = 2
    std::optional<DualData> dual;           // absent with skip_dual
    std::optional<GradientDual> gradient_dual;
    SingularLocus locus;
    CuspidalityVerdict cusp;
    std::vector<int> a_seq;
    std::optional<std::pair<int, int>> tilde_2dm2; // (k1, k2) at q = 2d-2
    std::optional<std::pair<int, int>> tilde_2d;   // (k1, k2) at q = 2d
    std::vector<CrossCheck> cross_checks;

    bool all_checks_pass() const;
};

/// Full pipeline: properness, mu-basis, implicitization, dual, fibers,
/// differential forms, oracle, cross-check ledger. Throws
/// ImproperParametrization for e > 1 and InvalidInput for bad input.
CurveReport analyze(const Parametrization& phi, const AnalyzeOptions& opts = {});

/// Canonical JSON (stable key order, round-trip safe) and a text rendering.
std::string report_to_json(const CurveReport& r);
std::string report_to_text(const CurveReport& r);

/// Parse the input file format: {"f0": [c0, ...], "f1": [...], "f2": [...]},
/// coefficients as "p/q" strings (or plain integers); index i holds the
/// coefficient of s^(d-i) t^i. Throws InvalidInput.
Parametrization parse_curve_file(const std::string& path);
Parametrization parse_curve_json(const std::string& text);

} // namespace ratcurve

#endif
