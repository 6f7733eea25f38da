#include "ratcurve/qmatrix.hpp"

#include <algorithm>

#include "ratcurve/errors.hpp"

namespace ratcurve {

namespace {

// Integer working form: the rational matrix with each row scaled by the lcm
// of its denominators. Row scaling preserves rank and kernel; det() corrects
// by the scale product.
struct ZWork {
    int rows, cols;
    std::vector<Int> e;
    std::vector<Int> row_scale;

    Int& at(int i, int j) { return e[static_cast<std::size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return e[static_cast<std::size_t>(i) * cols + j]; }
};

ZWork to_integer_rows(const QMatrix& m) {
    ZWork w;
    w.rows = m.rows();
    w.cols = m.cols();
    w.e.resize(static_cast<std::size_t>(w.rows) * w.cols);
    w.row_scale.assign(w.rows, Int(1));
    for (int i = 0; i < w.rows; ++i) {
        Int l = 1;
        for (int j = 0; j < w.cols; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        w.row_scale[i] = l;
        for (int j = 0; j < w.cols; ++j)
            w.at(i, j) = m.at(i, j).get_num() * (l / m.at(i, j).get_den());
    }
    return w;
}

struct Echelon {
    ZWork w;
    std::vector<int> pivot_cols; // ascending; pivot k sits in row k
    int swaps = 0;
};

// Fraction-free forward elimination with column skipping; entries stay
// minors of the scaled matrix, divisions are exact.
Echelon eliminate(ZWork w) {
    Echelon ech{std::move(w)};
    ZWork& m = ech.w;
    Int prev = 1;
    int r = 0;
    for (int col = 0; col < m.cols && r < m.rows; ++col) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
            ++ech.swaps;
        }
        const Int pivot = m.at(r, col);
        for (int i = r + 1; i < m.rows; ++i) {
            const Int head = m.at(i, col);
            for (int j = col + 1; j < m.cols; ++j) {
                Int v = m.at(i, j) * pivot - head * m.at(r, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m.at(i, j) = std::move(v);
            }
            m.at(i, col) = 0;
        }
        prev = pivot;
        ech.pivot_cols.push_back(col);
        ++r;
    }
    return ech;
}

std::vector<Rational> primitive_signed(std::vector<Rational> v) {
    Int l = 1;
    for (const auto& c : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    Int g = 0;
    for (const auto& c : v) {
        Int n = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    if (g == 0) return v;
    Rational f(l, g);
    f.canonicalize();
    for (auto& c : v) c *= f;
    for (const auto& c : v) {
        if (c != 0) {
            if (c < 0)
                for (auto& x : v) x = -x;
            break;
        }
    }
    return v;
}

} // namespace

int QMatrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    return static_cast<int>(eliminate(to_integer_rows(*this)).pivot_cols.size());
}

std::vector<std::vector<Rational>> QMatrix::kernel_basis() const {
    std::vector<std::vector<Rational>> basis;
    if (cols_ == 0) return basis;
    if (rows_ == 0) {
        for (int j = 0; j < cols_; ++j) {
            std::vector<Rational> v(cols_, Rational(0));
            v[j] = 1;
            basis.push_back(std::move(v));
        }
        return basis;
    }
    Echelon ech = eliminate(to_integer_rows(*this));
    const ZWork& m = ech.w;
    const auto& piv = ech.pivot_cols;
    std::vector<bool> is_pivot(cols_, false);
    for (int c : piv) is_pivot[c] = true;
    for (int fc = 0; fc < cols_; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rational> v(cols_, Rational(0));
        v[fc] = 1;
        // back-substitute pivot variables, bottom row up
        for (int k = static_cast<int>(piv.size()) - 1; k >= 0; --k) {
            int pc = piv[k];
            if (pc > fc) continue; // forced zero: that pivot row only touches columns > fc
            Rational acc(0);
            for (int j = pc + 1; j < cols_; ++j)
                if (v[j] != 0 && m.at(k, j) != 0) acc += Rational(m.at(k, j)) * v[j];
            v[pc] = -acc / Rational(m.at(k, pc));
        }
        basis.push_back(primitive_signed(std::move(v)));
    }
    return basis;
}

Rational QMatrix::det() const {
    if (rows_ != cols_) throw NotSquare("determinant of a non-square matrix");
    if (rows_ == 0) return Rational(1);
    Echelon ech = eliminate(to_integer_rows(*this));
    if (static_cast<int>(ech.pivot_cols.size()) < rows_) return Rational(0);
    Rational d(ech.w.at(rows_ - 1, cols_ - 1));
    if (ech.swaps % 2) d = -d;
    for (const Int& s : ech.w.row_scale) d /= Rational(s);
    return d;
}

std::vector<Rational> QMatrix::solve(const std::vector<Rational>& b) const {
    if (rows_ != cols_) throw NotSquare("solve needs a square system");
    if (static_cast<int>(b.size()) != rows_) throw InvalidInput("rhs size mismatch");
    // kernel of [A | -b]: a nonsingular A gives a one-dimensional kernel whose
    // last coordinate is nonzero
    QMatrix aug(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = -b[i];
    }
    auto k = aug.kernel_basis();
    if (k.size() != 1 || k[0][cols_] == 0) throw InternalError("singular linear system");
    std::vector<Rational> x(cols_);
    for (int j = 0; j < cols_; ++j) x[j] = k[0][j] / k[0][cols_];
    return x;
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw InvalidInput("vector size mismatch");
    std::vector<Rational> r(rows_, Rational(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
    return r;
}

} // namespace ratcurve
