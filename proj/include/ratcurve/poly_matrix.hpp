#ifndef RATCURVE_POLY_MATRIX_HPP
#define RATCURVE_POLY_MATRIX_HPP

#include <vector>

#include "ratcurve/binary_form.hpp"
#include "ratcurve/qmatrix.hpp"
#include "ratcurve/ternary_form.hpp"

namespace ratcurve {

/// Square-ish matrix with ternary-form entries; the caller declares the total
/// degree of the determinant.
class PolyMatrix {
public:
    PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const TernaryForm& at(int i, int j) const { return e_[i * cols_ + j]; }
    TernaryForm& at(int i, int j) { return e_[i * cols_ + j]; }

private:
    int rows_, cols_;
    std::vector<TernaryForm> e_;
};

/// Determinant of a matrix of ternary forms, homogeneous of the declared
/// total degree: entries are evaluated on the triangular integer grid
/// {(i, j, 1) : i + j <= D}, one exact numeric determinant per node, then the
/// dehomogenized determinant is recovered by dense bivariate interpolation
/// and homogenized back to degree D. Deterministic; result primitive-positive.
/// Throws DegreeMismatch when control evaluations disagree with the declared
/// degree (a caller bug).
TernaryForm poly_matrix_det(const PolyMatrix& m, int total_degree);

/// Determinant of a matrix of binary forms with row-wise uniform entry
/// degrees (the Sylvester shape), via univariate evaluation-interpolation at
/// s = 0, 1, 2, ..., t = 1. The declared degree is the sum of row degrees.
BinaryForm bf_matrix_det(const std::vector<std::vector<BinaryForm>>& m, int total_degree);

} // namespace ratcurve

#endif
