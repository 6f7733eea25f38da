#ifndef RATCURVE_PARAMETRIZATION_HPP
#define RATCURVE_PARAMETRIZATION_HPP

#include <array>

#include "ratcurve/binary_form.hpp"
#include "ratcurve/rational.hpp"

namespace ratcurve {

/// Validated triple (f0, f1, f2) of binary forms of common degree d >= 2 with
/// gcd(f0, f1, f2) = 1 and not all three proportional. Immutable.
class Parametrization {
public:
    Parametrization(BinaryForm f0, BinaryForm f1, BinaryForm f2);

    int degree() const { return d_; }
    const BinaryForm& f(int i) const { return fs_[i]; }
    const std::array<BinaryForm, 3>& forms() const { return fs_; }

    /// Image point of a parameter value, as a normalized rational point.
    ProjPoint2 image(const ProjPoint1& p) const;

private:
    std::array<BinaryForm, 3> fs_;
    int d_;
};

} // namespace ratcurve

#endif
