#ifndef RATCURVE_BINARY_FORM_HPP
#define RATCURVE_BINARY_FORM_HPP

#include <string>
#include <utility>
#include <vector>

#include "ratcurve/qpoly.hpp"
#include "ratcurve/rational.hpp"

namespace ratcurve {

/// Homogeneous polynomial in (s, t) over Q, dense coefficient vector.
/// coeff(i) multiplies s^(d-i) t^i. The zero form is representable at any
/// declared degree (all coefficients zero).
class BinaryForm {
public:
    BinaryForm() : degree_(0), coeffs_(1, Rational(0)) {}
    explicit BinaryForm(std::vector<Rational> coeffs);
    static BinaryForm zero(int degree);
    /// c * s^(degree - t_exp) * t^t_exp
    static BinaryForm monomial(int degree, int t_exp, Rational c = Rational(1));

    int degree() const { return degree_; }
    bool is_zero() const;
    const Rational& coeff(int i) const { return coeffs_[i]; }
    Rational& coeff(int i) { return coeffs_[i]; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    BinaryForm operator+(const BinaryForm& o) const;
    BinaryForm operator-(const BinaryForm& o) const;
    BinaryForm operator-() const;
    BinaryForm operator*(const BinaryForm& o) const;
    BinaryForm operator*(const Rational& c) const;
    bool operator==(const BinaryForm& o) const = default;

    Rational eval(const Rational& s, const Rational& t) const;
    BinaryForm ds() const;
    BinaryForm dt() const;

    /// Largest k with s^k | f (f nonzero).
    int s_order() const;
    int t_order() const;

    /// f = s^a t^b core, both end coefficients of the core nonzero.
    BinaryForm core(int& s_ord, int& t_ord) const;

    /// Dehomogenize the form at t = 1 (ascending powers of s).
    qp::QPoly at_t1() const;
    /// Inverse of at_t1 for a polynomial of known form degree.
    static BinaryForm homogenize(const qp::QPoly& p, int degree);

    std::string str(const char* s = "s", const char* t = "t") const;

private:
    int degree_;
    std::vector<Rational> coeffs_;
};

inline BinaryForm operator*(const Rational& c, const BinaryForm& f) { return f * c; }

/// Monic gcd in Q[s,t]: leading coefficient (first nonzero in s-descending
/// order) equals 1. gcd with the zero form returns the other input, monic.
BinaryForm gcd(const BinaryForm& f, const BinaryForm& g);

BinaryForm gcd(const std::vector<BinaryForm>& forms);

/// Sylvester resultant on the declared degrees (full coefficient vectors).
Rational resultant(const BinaryForm& f, const BinaryForm& g);

/// Yun-style squarefree decomposition; factors primitive-positive, pairwise
/// coprime, squarefree; product of factor^mult = input up to a constant.
std::vector<std::pair<BinaryForm, int>> squarefree_decomposition(const BinaryForm& f);

BinaryForm squarefree_part(const BinaryForm& f);

/// Roots in P^1(Q) with multiplicities, points normalized coprime with
/// positive first nonzero entry, ordered: (0:1) first, then (1:0), then
/// finite roots (a:b), b>0... deterministic.
std::vector<std::pair<ProjPoint1, int>> rational_roots(const BinaryForm& f);

/// Exact quotient f / g; throws NotDivisible.
BinaryForm divide_exact(const BinaryForm& f, const BinaryForm& g);

bool divides(const BinaryForm& g, const BinaryForm& f);

/// Integer-coprime coefficients, positive leading coefficient (graded-lex, s > t).
BinaryForm primitive_positive(const BinaryForm& f);

BinaryForm monic(const BinaryForm& f);

/// The linear form vanishing exactly at (a:b), i.e. b*s - a*t.
BinaryForm vanishing_line(const ProjPoint1& p);

} // namespace ratcurve

#endif
