#include "ratcurve/poly_matrix.hpp"

#include "ratcurve/errors.hpp"

namespace ratcurve {

namespace {

Rational det_at(const PolyMatrix& m, const Rational& u, const Rational& v,
                const Rational& w) {
    QMatrix q(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) q.at(i, j) = m.at(i, j).eval(u, v, w);
    return q.det();
}

} // namespace

TernaryForm poly_matrix_det(const PolyMatrix& m, int total_degree) {
    if (m.rows() != m.cols()) throw NotSquare("poly_matrix_det of non-square matrix");
    const int D = total_degree;
    // triangular grid and matching monomial list for the dehomogenization at w=1
    std::vector<std::pair<int, int>> nodes;
    for (int i = 0; i <= D; ++i)
        for (int j = 0; j + i <= D; ++j) nodes.emplace_back(i, j);
    const int n = static_cast<int>(nodes.size());
    std::vector<Rational> values(n);
    bool all_zero = true;
    for (int k = 0; k < n; ++k) {
        values[k] = det_at(m, Rational(nodes[k].first), Rational(nodes[k].second), Rational(1));
        if (values[k] != 0) all_zero = false;
    }
    TernaryForm det(D);
    if (!all_zero) {
        // Vandermonde system over the monomials u^a v^b, a+b <= D; the
        // triangular principal lattice is unisolvent, so the system is square
        // and nonsingular.
        QMatrix van(n, n);
        for (int k = 0; k < n; ++k) {
            int idx = 0;
            for (int a = 0; a <= D; ++a)
                for (int b = 0; a + b <= D; ++b) {
                    Rational entry(1);
                    for (int e = 0; e < a; ++e) entry *= nodes[k].first;
                    for (int e = 0; e < b; ++e) entry *= nodes[k].second;
                    van.at(k, idx++) = entry;
                }
        }
        std::vector<Rational> coeffs = van.solve(values);
        int idx = 0;
        for (int a = 0; a <= D; ++a)
            for (int b = 0; a + b <= D; ++b) {
                if (coeffs[idx] != 0) det.set({a, b, D - a - b}, coeffs[idx]);
                ++idx;
            }
    }
    // control nodes outside the grid catch determinants of higher degree
    // than declared
    const std::pair<int, int> control_nodes[] = {{D + 1, 1}, {1, D + 1}, {D + 1, D + 1}};
    for (const auto& [i, j] : control_nodes) {
        Rational expect = det.eval(Rational(i), Rational(j), Rational(1));
        Rational actual = det_at(m, Rational(i), Rational(j), Rational(1));
        if (expect != actual)
            throw DegreeMismatch("determinant disagrees with declared total degree");
    }
    return primitive_positive(det);
}

BinaryForm bf_matrix_det(const std::vector<std::vector<BinaryForm>>& m, int total_degree) {
    const int n = static_cast<int>(m.size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n) throw NotSquare("bf_matrix_det of non-square matrix");
    const int D = total_degree;
    std::vector<Rational> xs(D + 1), ys(D + 1);
    for (int k = 0; k <= D; ++k) {
        xs[k] = k;
        QMatrix q(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) q.at(i, j) = m[i][j].eval(Rational(k), Rational(1));
        ys[k] = q.det();
    }
    // Newton divided differences, then expand to the monomial basis
    std::vector<Rational> dd = ys;
    for (int level = 1; level <= D; ++level)
        for (int k = D; k >= level; --k)
            dd[k] = (dd[k] - dd[k - 1]) / (xs[k] - xs[k - level]);
    qp::QPoly p; // p(x) = det(m)(x, 1)
    for (int k = D; k >= 0; --k) {
        // p = p * (x - xs[k]) + dd[k]
        p = qp::add(qp::mul(p, {-xs[k], Rational(1)}), {dd[k]});
    }
    return BinaryForm::homogenize(p, D);
}

} // namespace ratcurve
