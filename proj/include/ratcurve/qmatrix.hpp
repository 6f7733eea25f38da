#ifndef RATCURVE_QMATRIX_HPP
#define RATCURVE_QMATRIX_HPP

#include <vector>

#include "ratcurve/rational.hpp"

namespace ratcurve {

/// Dense exact-rational matrix with rank / kernel / determinant services.
/// All computations run fraction-free (Bareiss) after row-wise denominator
/// clearing, with deterministic pivoting: first nonzero entry scanning
/// columns left-to-right, rows top-to-bottom. No pivot-size heuristics, so
/// kernel bases are reproducible bit for bit.
class QMatrix {
public:
    QMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols, Rational(0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Rational& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    Rational& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    int rank() const;

    /// Reduced deterministic kernel basis: one vector per free column in
    /// increasing column order, each cleared to primitive integer form with
    /// positive first nonzero entry.
    std::vector<std::vector<Rational>> kernel_basis() const;

    Rational det() const; // throws NotSquare

    /// Unique solution of A x = b for square nonsingular A; throws NotSquare /
    /// InternalError on singular systems.
    std::vector<Rational> solve(const std::vector<Rational>& b) const;

    std::vector<Rational> apply(const std::vector<Rational>& v) const;

private:
    int rows_, cols_;
    std::vector<Rational> e_;
};

} // namespace ratcurve

#endif
