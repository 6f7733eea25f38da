#include "ratcurve/musyz.hpp"

#include "ratcurve/biform.hpp"
#include "ratcurve/errors.hpp"
#include "ratcurve/poly_matrix.hpp"
#include "ratcurve/qmatrix.hpp"

namespace ratcurve {

namespace {

// columns are form-major: block j holds the monomial multiples
// s^mu, s^(mu-1) t, ..., t^mu of f_j
QMatrix syzygy_matrix(const Parametrization& phi, int mu) {
    const int d = phi.degree();
    QMatrix m(mu + d + 1, 3 * (mu + 1));
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i <= mu; ++i)
            for (int k = 0; k <= d; ++k)
                m.at(i + k, j * (mu + 1) + i) = phi.f(j).coeff(k);
    return m;
}

std::array<BinaryForm, 3> unpack_syzygy(const std::vector<Rational>& v, int mu) {
    std::array<BinaryForm, 3> g{BinaryForm::zero(mu), BinaryForm::zero(mu),
                                BinaryForm::zero(mu)};
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i <= mu; ++i) g[j].coeff(i) = v[j * (mu + 1) + i];
    return g;
}

std::vector<Rational> pack_syzygy(const std::array<BinaryForm, 3>& g) {
    const int mu = g[0].degree();
    std::vector<Rational> v(3 * (mu + 1));
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i <= mu; ++i) v[j * (mu + 1) + i] = g[j].coeff(i);
    return v;
}

std::vector<Rational> primitive_first_positive(std::vector<Rational> v) {
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
    for (const auto& c : v)
        if (c != 0) {
            if (c < 0)
                for (auto& x : v) x = -x;
            break;
        }
    return v;
}

} // namespace

std::vector<std::array<BinaryForm, 3>> syzygy_space(const Parametrization& phi, int mu) {
    if (mu < 0) throw InvalidInput("negative syzygy degree");
    std::vector<std::array<BinaryForm, 3>> out;
    for (const auto& v : syzygy_matrix(phi, mu).kernel_basis())
        out.push_back(unpack_syzygy(v, mu));
    return out;
}

MuBasis mu_basis(const Parametrization& phi) {
    const int d = phi.degree();
    int mu1 = -1;
    std::array<BinaryForm, 3> p;
    for (int mu = 0; mu <= d; ++mu) {
        auto basis = syzygy_space(phi, mu);
        if (!basis.empty()) {
            mu1 = mu;
            p = basis.front();
            break;
        }
    }
    if (mu1 < 0) throw InternalError("no syzygy up to degree d");
    const int mu2 = d - mu1;

    // echelonize the span of the monomial multiples of p once, then reduce
    // candidates against it
    std::vector<std::vector<Rational>> rows;
    for (int a = 0; a + mu1 <= mu2; ++a) {
        BinaryForm mono = BinaryForm::monomial(mu2 - mu1, a);
        rows.push_back(pack_syzygy({p[0] * mono, p[1] * mono, p[2] * mono}));
    }
    const int n = 3 * (mu2 + 1);
    std::vector<int> pivots;
    {
        int r = 0;
        for (int col = 0; col < n && r < static_cast<int>(rows.size()); ++col) {
            int piv = -1;
            for (int i = r; i < static_cast<int>(rows.size()); ++i)
                if (rows[i][col] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            std::swap(rows[piv], rows[r]);
            for (int i = r + 1; i < static_cast<int>(rows.size()); ++i)
                if (rows[i][col] != 0) {
                    Rational f = rows[i][col] / rows[r][col];
                    for (int j = col; j < n; ++j) rows[i][j] -= f * rows[r][j];
                }
            pivots.push_back(col);
            ++r;
        }
    }
    auto reduce = [&](std::vector<Rational> v) {
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            int col = pivots[k];
            if (v[col] != 0) {
                Rational f = v[col] / rows[k][col];
                for (int j = col; j < n; ++j) v[j] -= f * rows[k][j];
            }
        }
        return v;
    };

    auto candidates = syzygy_space(phi, mu2);
    std::array<BinaryForm, 3> q;
    bool found = false;
    for (const auto& cand : candidates) {
        auto red = reduce(pack_syzygy(cand));
        bool nonzero = false;
        for (const auto& c : red)
            if (c != 0) {
                nonzero = true;
                break;
            }
        if (nonzero) {
            q = unpack_syzygy(primitive_first_positive(std::move(red)), mu2);
            found = true;
            break;
        }
    }
    if (!found) throw InternalError("mu-basis second generator not found");

    // minors invariant: cross(p, q) = lambda * (f0, f1, f2) for one constant
    std::array<BinaryForm, 3> cross{p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2],
                                    p[0] * q[1] - p[1] * q[0]};
    Rational lambda(0);
    for (int i = 0; i < 3 && lambda == 0; ++i)
        for (int k = 0; k <= d && lambda == 0; ++k)
            if (phi.f(i).coeff(k) != 0) lambda = cross[i].coeff(k) / phi.f(i).coeff(k);
    if (lambda == 0) throw InternalError("mu-basis minors vanish");
    for (int i = 0; i < 3; ++i)
        if (!(cross[i] - phi.f(i) * lambda).is_zero())
            throw InternalError("mu-basis minors are not proportional to the parametrization");
    return {mu1, mu2, p, q};
}

int properness_degree(const Parametrization& phi) {
    BiForm q01 = cross_difference_quotient(phi.f(0), phi.f(1));
    BiForm q02 = cross_difference_quotient(phi.f(0), phi.f(2));
    BiForm q12 = cross_difference_quotient(phi.f(1), phi.f(2));
    // two of the three can share spurious factors; the triple gcd is what
    // counts
    BiForm g = gcd_over_st(gcd_over_st(q01, q02), q12);
    return g.udeg() + 1;
}

std::vector<TernaryForm> moving_line(const std::array<BinaryForm, 3>& g) {
    const int mu = g[0].degree();
    std::vector<TernaryForm> line;
    line.reserve(mu + 1);
    for (int k = 0; k <= mu; ++k)
        line.push_back(TernaryForm::linear(g[0].coeff(k), g[1].coeff(k), g[2].coeff(k)));
    return line;
}

ImplicitCurve implicit_equation(const Parametrization& phi) {
    int e = properness_degree(phi);
    if (e > 1) throw ImproperParametrization(e);
    MuBasis mb = mu_basis(phi);
    const int d = phi.degree();
    auto l1 = moving_line(mb.p);
    auto l2 = moving_line(mb.q);
    // Sylvester matrix in (s,t): mu2 shifted rows of L1, mu1 of L2
    PolyMatrix syl(d, d);
    for (int r = 0; r < mb.mu2; ++r)
        for (int k = 0; k <= mb.mu1; ++k) syl.at(r, r + k) = l1[k];
    for (int r = 0; r < mb.mu1; ++r)
        for (int k = 0; k <= mb.mu2; ++k) syl.at(mb.mu2 + r, r + k) = l2[k];
    TernaryForm F = poly_matrix_det(syl, d);
    if (static_cast<int>(F.degree()) != d || F.is_zero())
        throw InternalError("implicit equation has wrong degree");
    if (!compose(F, phi.f(0), phi.f(1), phi.f(2)).is_zero())
        throw InternalError("implicit equation does not vanish on the curve");
    return {F, e};
}

} // namespace ratcurve
