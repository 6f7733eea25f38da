#ifndef RATCURVE_TERNARY_FORM_HPP
#define RATCURVE_TERNARY_FORM_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "ratcurve/binary_form.hpp"
#include "ratcurve/rational.hpp"

namespace ratcurve {

using Exponents = std::array<int, 3>; // (a, b, c) for x^a y^b z^c

/// Homogeneous polynomial in three variables over Q, sparse exponent map.
/// No zero coefficients are stored; every exponent triple sums to degree().
class TernaryForm {
public:
    explicit TernaryForm(int degree = 0) : degree_(degree) {}
    static TernaryForm monomial(Exponents e, Rational c = Rational(1));
    /// a*x + b*y + c*z
    static TernaryForm linear(const Rational& a, const Rational& b, const Rational& c);

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    Rational coeff(const Exponents& e) const;
    void set(const Exponents& e, const Rational& c);
    void add_term(const Exponents& e, const Rational& c);

    TernaryForm operator+(const TernaryForm& o) const;
    TernaryForm operator-(const TernaryForm& o) const;
    TernaryForm operator-() const;
    TernaryForm operator*(const TernaryForm& o) const;
    TernaryForm operator*(const Rational& c) const;
    bool operator==(const TernaryForm& o) const = default;

    /// Partial derivative in variable 0, 1 or 2.
    TernaryForm partial(int var) const;

    Rational eval(const Rational& x, const Rational& y, const Rational& z) const;

    /// Coefficient vector in the graded-lex monomial basis of its degree.
    std::vector<Rational> dense_coeffs() const;

    std::string str(const char* x = "x", const char* y = "y", const char* z = "z") const;

private:
    int degree_;
    std::map<Exponents, Rational> terms_;
};

/// Monomials of S_q in graded-lex order (x > y > z): x^q first, z^q last.
std::vector<Exponents> monomials_of_degree(int q);

/// dim S_q = C(q+2, 2), zero for q < 0.
long dim_forms(int q);

/// Substitute (x, y, z) -> (f0, f1, f2); exact, zero result has degree n*d.
BinaryForm compose(const TernaryForm& F, const BinaryForm& f0, const BinaryForm& f1,
                   const BinaryForm& f2);

/// Exact quotient F / G; throws NotDivisible.
TernaryForm divide_exact(const TernaryForm& F, const TernaryForm& G);

bool divides(const TernaryForm& G, const TernaryForm& F);

/// Integer-coprime coefficients, positive graded-lex leading coefficient.
TernaryForm primitive_positive(const TernaryForm& F);

} // namespace ratcurve

#endif
