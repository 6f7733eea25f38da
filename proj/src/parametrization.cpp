#include "ratcurve/parametrization.hpp"

#include "ratcurve/errors.hpp"

namespace ratcurve {

Parametrization::Parametrization(BinaryForm f0, BinaryForm f1, BinaryForm f2)
    : fs_{std::move(f0), std::move(f1), std::move(f2)} {
    d_ = fs_[0].degree();
    if (fs_[1].degree() != d_ || fs_[2].degree() != d_)
        throw InvalidInput("component degrees disagree");
    if (d_ < 2) throw InvalidInput("degree must be at least 2");
    if (fs_[0].is_zero() && fs_[1].is_zero() && fs_[2].is_zero())
        throw InvalidInput("zero parametrization");
    BinaryForm g = gcd({fs_[0], fs_[1], fs_[2]});
    if (g.degree() > 0) throw InvalidInput("components share the factor " + g.str());
    // proportional components would parametrize a point, not a curve; cross
    // products of the coefficient vectors decide proportionality
    auto cross_zero = [&](int i, int j) {
        for (int a = 0; a <= d_; ++a)
            for (int b = a + 1; b <= d_; ++b)
                if (fs_[i].coeff(a) * fs_[j].coeff(b) != fs_[i].coeff(b) * fs_[j].coeff(a))
                    return false;
        return true;
    };
    if (cross_zero(0, 1) && cross_zero(0, 2) && cross_zero(1, 2))
        throw InvalidInput("components are proportional; the image is a point");
}

ProjPoint2 Parametrization::image(const ProjPoint1& p) const {
    Rational a(p.a), b(p.b);
    return normalize_point(fs_[0].eval(a, b), fs_[1].eval(a, b), fs_[2].eval(a, b));
}

} // namespace ratcurve
