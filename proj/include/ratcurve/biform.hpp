#ifndef RATCURVE_BIFORM_HPP
#define RATCURVE_BIFORM_HPP

#include <vector>

#include "ratcurve/binary_form.hpp"
#include "ratcurve/rational.hpp"

namespace ratcurve {

/// Bihomogeneous form in (s,t) x (u,v): entry (i,j) multiplies
/// s^(a-i) t^i u^(b-j) v^j for bidegree (a, b).
class BiForm {
public:
    BiForm(int sdeg, int udeg)
        : sdeg_(sdeg), udeg_(udeg),
          c_(static_cast<std::size_t>(sdeg + 1) * (udeg + 1), Rational(0)) {}

    int sdeg() const { return sdeg_; }
    int udeg() const { return udeg_; }
    const Rational& at(int i, int j) const { return c_[static_cast<std::size_t>(i) * (udeg_ + 1) + j]; }
    Rational& at(int i, int j) { return c_[static_cast<std::size_t>(i) * (udeg_ + 1) + j]; }
    bool is_zero() const;

    BiForm operator+(const BiForm& o) const;
    BiForm operator-(const BiForm& o) const;
    BiForm operator*(const Rational& c) const;
    bool operator==(const BiForm& o) const = default;

    /// Restriction to the diagonal (u,v) = (s,t): a binary form of degree
    /// sdeg + udeg.
    BinaryForm diagonal() const;

    /// Specialize (s,t) = (a,b): binary form of degree udeg in (u,v).
    BinaryForm specialize_st(const Rational& a, const Rational& b) const;

    /// The (u,v)-coefficient forms: index j holds the coefficient of
    /// u^(b-j) v^j, a binary form of degree sdeg in (s,t).
    std::vector<BinaryForm> uv_coefficients() const;
    static BiForm from_uv_coefficients(const std::vector<BinaryForm>& coeffs);

private:
    int sdeg_, udeg_;
    std::vector<Rational> c_;
};

/// The exact quotient (f(s,t) g(u,v) - g(s,t) f(u,v)) / (sv - tu) for two
/// binary forms of the same degree d; bidegree (d-1, d-1). The division is
/// re-multiplied as a consistency check (InternalError on failure).
BiForm cross_difference_quotient(const BinaryForm& f, const BinaryForm& g);

/// gcd in Q(s,t)[u,v] by a primitive pseudo-remainder sequence; the result is
/// content-free in (s,t). Degree in (u,v) is the quantity that matters.
BiForm gcd_over_st(const BiForm& a, const BiForm& b);

/// Resultant with respect to (u,v) on declared degrees; a binary form in
/// (s,t) of degree a1*n2 + a2*n1 for bidegrees (a1,n1), (a2,n2).
BinaryForm resultant_uv(const BiForm& a, const BiForm& b);

} // namespace ratcurve

#endif
