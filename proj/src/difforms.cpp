#include "ratcurve/difforms.hpp"

#include <map>

#include "ratcurve/dualgeom.hpp"
#include "ratcurve/errors.hpp"

namespace ratcurve {

namespace {

// all power products f0^a f1^b f2^c for a+b+c <= q, built incrementally
class PowerTable {
public:
    PowerTable(const Parametrization& phi, int q) : phi_(phi) {
        cache_[{0, 0, 0}] = BinaryForm::monomial(0, 0);
        for (int total = 1; total <= q; ++total)
            for (const auto& e : monomials_of_degree(total)) {
                Exponents prev = e;
                int var = e[0] > 0 ? 0 : (e[1] > 0 ? 1 : 2);
                prev[var] -= 1;
                cache_[e] = cache_.at(prev) * phi_.f(var);
            }
    }
    const BinaryForm& at(const Exponents& e) const { return cache_.at(e); }

private:
    const Parametrization& phi_;
    std::map<Exponents, BinaryForm> cache_;
};

void write_column(QMatrix& m, int col, const BinaryForm& f, int row_offset) {
    for (int i = 0; i <= f.degree(); ++i) m.at(row_offset + i, col) = f.coeff(i);
}

} // namespace

FormMapMatrices form_matrices(const Parametrization& phi, int q) {
    if (q < 1) throw InvalidInput("form_matrices needs q >= 1");
    const int d = phi.degree();
    PowerTable powers(phi, q);
    auto minors = jacobian_minors(phi); // (m01, m02, m12)

    auto sq = monomials_of_degree(q);
    QMatrix m0(q * d + 1, static_cast<int>(sq.size()));
    for (std::size_t c = 0; c < sq.size(); ++c) write_column(m0, static_cast<int>(c), powers.at(sq[c]), 0);

    auto sq1 = monomials_of_degree(q - 1);
    QMatrix m1(2 * q * d, 3 * static_cast<int>(sq1.size()));
    std::array<BinaryForm, 3> dsf{phi.f(0).ds(), phi.f(1).ds(), phi.f(2).ds()};
    std::array<BinaryForm, 3> dtf{phi.f(0).dt(), phi.f(1).dt(), phi.f(2).dt()};
    for (int slot = 0; slot < 3; ++slot)
        for (std::size_t c = 0; c < sq1.size(); ++c) {
            int col = slot * static_cast<int>(sq1.size()) + static_cast<int>(c);
            const BinaryForm& a = powers.at(sq1[c]);
            write_column(m1, col, a * dsf[slot], 0);
            write_column(m1, col, a * dtf[slot], q * d);
        }

    auto sq2 = monomials_of_degree(q - 2);
    QMatrix m2(q * d - 1, 3 * static_cast<int>(sq2.size()));
    // slot x multiplies m12, slot y multiplies m02, slot z multiplies m01
    std::array<const BinaryForm*, 3> mm{&minors[2], &minors[1], &minors[0]};
    for (int slot = 0; slot < 3; ++slot)
        for (std::size_t c = 0; c < sq2.size(); ++c) {
            int col = slot * static_cast<int>(sq2.size()) + static_cast<int>(c);
            write_column(m2, col, powers.at(sq2[c]) * (*mm[slot]), 0);
        }
    return {q, std::move(m0), std::move(m1), std::move(m2)};
}

std::array<int, 3> coker_dims(const Parametrization& phi, int q) {
    FormMapMatrices fm = form_matrices(phi, q);
    return {fm.m0.rows() - fm.m0.rank(), fm.m1.rows() - fm.m1.rank(),
            fm.m2.rows() - fm.m2.rank()};
}

std::pair<int, int> tjurina_delta(const Parametrization& phi) {
    const int d = phi.degree();
    if (d < 3) throw InvalidInput("tjurina_delta needs d >= 3");
    const int q_delta = std::max(d - 2, 2);
    FormMapMatrices low = form_matrices(phi, q_delta);
    int delta = low.m0.rows() - low.m0.rank();
    FormMapMatrices mid = form_matrices(phi, d);
    int tau = mid.m1.rows() - mid.m1.rank();
    FormMapMatrices high = form_matrices(phi, d + 1);
    int delta_high = high.m0.rows() - high.m0.rank();
    int tau_high = high.m1.rows() - high.m1.rank();
    if (delta != delta_high || tau != tau_high)
        throw InternalError("tau/delta did not stabilize at q = d + 1");
    return {tau, delta};
}

std::vector<int> a_sequence(const Parametrization& phi, int q_max) {
    if (q_max < 0) throw InvalidInput("a_sequence needs q_max >= 0");
    std::vector<int> a;
    a.reserve(q_max + 1);
    for (int q = 0; q <= q_max; ++q) {
        FormMapMatrices fm = form_matrices(phi, q + 2);
        a.push_back(fm.m2.cols() - fm.m2.rank());
    }
    return a;
}

InvariantReport freeness_verdict(const Parametrization& phi) {
    const int d = phi.degree();
    if (d < 3) throw InvalidInput("freeness_verdict needs d >= 3");
    InvariantReport rep;
    auto [tau, delta] = tjurina_delta(phi);
    rep.tau = tau;
    rep.delta = delta;
    rep.a_seq = a_sequence(phi, d);
    int r = -1;
    for (int q = 0; q <= d; ++q)
        if (rep.a_seq[q] > binomial(q + 1, 2)) {
            r = q;
            break;
        }
    if (r < 0) throw InternalError("no Jacobian syzygy up to degree d");
    rep.mdr = r;
    rep.tau_dr = (d - 1) * (d - 1) - r * (d - r - 1);

    auto a_at = [&](int q) { return rep.a_seq[q]; };
    bool is_free = 2 * r <= d - 1 &&
                   a_at(d - r - 1) == binomial(d - r, 2) + binomial(d - 2 * r + 1, 2) + 1;
    bool is_nearly = !is_free && 2 * r <= d &&
                     a_at(d - r) == binomial(d - r + 1, 2) + binomial(d - 2 * r + 2, 2) + 2;
    if (is_free) {
        rep.verdict = Freeness::Free;
        rep.d1 = r;
        rep.d2 = d - 1 - r;
        if (rep.tau != rep.tau_dr)
            throw InternalError("free verdict but tau != tau(d, r)");
    } else if (is_nearly) {
        rep.verdict = Freeness::NearlyFree;
        rep.d1 = r;
        rep.d2 = d - r;
        if (rep.tau != rep.tau_dr - 1)
            throw InternalError("nearly free verdict but tau != tau(d, r) - 1");
    } else {
        rep.verdict = Freeness::Neither;
        if (rep.tau >= rep.tau_dr - 1)
            throw InternalError("neither verdict but tau >= tau(d, r) - 1");
    }
    return rep;
}

namespace {

// columns of a subspace of (S_{q-1})^3 in the slot-major monomial coordinates
class SubspaceColumns {
public:
    SubspaceColumns(int q, int slots) : q_(q), basis_(monomials_of_degree(q)), slots_(slots) {
        for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = static_cast<int>(i);
    }
    int coord_dim() const { return slots_ * static_cast<int>(basis_.size()); }
    std::vector<Rational> pack(const std::vector<TernaryForm>& slot_forms) const {
        std::vector<Rational> v(coord_dim(), Rational(0));
        for (int s = 0; s < slots_; ++s)
            for (const auto& [e, c] : slot_forms[s].terms())
                v[s * basis_.size() + index_.at(e)] = c;
        return v;
    }

private:
    int q_;
    std::vector<Exponents> basis_;
    int slots_;
    std::map<Exponents, int> index_;
};

int rank_of_columns(const std::vector<std::vector<Rational>>& cols, int dim) {
    if (cols.empty()) return 0;
    QMatrix m(dim, static_cast<int>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (int i = 0; i < dim; ++i) m.at(i, static_cast<int>(c)) = cols[c][i];
    return m.rank();
}

} // namespace

std::pair<int, int> tilde_kernel_dims(const Parametrization& phi, const TernaryForm& F,
                                      int q) {
    const int d = phi.degree();
    if (q < d) throw InvalidInput("tilde_kernel_dims needs q >= d");
    FormMapMatrices fm = form_matrices(phi, q);
    int null1 = fm.m1.cols() - fm.m1.rank();
    int null2 = fm.m2.cols() - fm.m2.rank();

    TernaryForm fx = F.partial(0), fy = F.partial(1), fz = F.partial(2);

    // U1 = S_{q-d} dF + F * Omega^1_{q-d} inside (S_{q-1})^3
    SubspaceColumns c1(q - 1, 3);
    std::vector<std::vector<Rational>> u1;
    for (const auto& e : monomials_of_degree(q - d)) {
        TernaryForm mono = TernaryForm::monomial(e);
        u1.push_back(c1.pack({mono * fx, mono * fy, mono * fz}));
    }
    TernaryForm zero_q1(q - 1);
    for (const auto& e : monomials_of_degree(q - d - 1)) {
        TernaryForm mf = TernaryForm::monomial(e) * F;
        for (int slot = 0; slot < 3; ++slot) {
            std::vector<TernaryForm> forms(3, zero_q1);
            forms[slot] = mf;
            u1.push_back(c1.pack(forms));
        }
    }
    int dim_u1 = rank_of_columns(u1, c1.coord_dim());

    // U2 = F * Omega^2_{q-d} + dF ^ Omega^1_{q-d} inside (S_{q-2})^3, in the
    // coordinates (B_x, B_y, B_z) = coefficients of dy^dz, dx^dz, dx^dy
    SubspaceColumns c2(q - 2, 3);
    std::vector<std::vector<Rational>> u2;
    TernaryForm zero_q2(q - 2);
    for (const auto& e : monomials_of_degree(q - d - 2)) {
        TernaryForm mf = TernaryForm::monomial(e) * F;
        for (int slot = 0; slot < 3; ++slot) {
            std::vector<TernaryForm> forms(3, zero_q2);
            forms[slot] = mf;
            u2.push_back(c2.pack(forms));
        }
    }
    for (const auto& e : monomials_of_degree(q - d - 1)) {
        TernaryForm mono = TernaryForm::monomial(e);
        // dF ^ (A_x dx + A_y dy + A_z dz) in these coordinates:
        // B_x = F_y A_z - F_z A_y, B_y = F_x A_z - F_z A_x, B_z = F_x A_y - F_y A_x
        u2.push_back(c2.pack({zero_q2, -(fz * mono), -(fy * mono)})); // A_x = mono
        u2.push_back(c2.pack({-(fz * mono), zero_q2, fx * mono}));    // A_y = mono
        u2.push_back(c2.pack({fy * mono, fx * mono, zero_q2}));       // A_z = mono
    }
    int dim_u2 = rank_of_columns(u2, c2.coord_dim());

    return {null1 - dim_u1, null2 - dim_u2};
}

const char* freeness_name(Freeness f) {
    switch (f) {
        case Freeness::Free: return "free";
        case Freeness::NearlyFree: return "nearly_free";
        default: return "neither";
    }
}

} // namespace ratcurve
