#include "ratcurve/jacobian_oracle.hpp"

#include "ratcurve/errors.hpp"
#include "ratcurve/qmatrix.hpp"

namespace ratcurve {

namespace {

// rank of the multiplication map (S_q)^k -> S_{q + shift} by the given forms
int mult_rank(const std::vector<TernaryForm>& gens, int q, int target) {
    auto dom = monomials_of_degree(q);
    auto img = monomials_of_degree(target);
    if (dom.empty() || gens.empty()) return 0;
    std::map<Exponents, int> index;
    for (std::size_t i = 0; i < img.size(); ++i) index[img[i]] = static_cast<int>(i);
    QMatrix m(static_cast<int>(img.size()),
              static_cast<int>(dom.size() * gens.size()));
    int col = 0;
    for (const auto& g : gens)
        for (const auto& e : dom) {
            TernaryForm prod = TernaryForm::monomial(e) * g;
            for (const auto& [pe, c] : prod.terms()) m.at(index.at(pe), col) = c;
            ++col;
        }
    return m.rank();
}

std::vector<TernaryForm> gradient(const TernaryForm& F) {
    return {F.partial(0), F.partial(1), F.partial(2)};
}

} // namespace

int ar_dim(const TernaryForm& F, int q) {
    if (q < 0) return 0;
    const int d = F.degree();
    long cols = 3 * dim_forms(q);
    return static_cast<int>(cols) - mult_rank(gradient(F), q, q + d - 1);
}

int milnor_hilbert(const TernaryForm& F, int k) {
    if (k < 0) return 0;
    const int d = F.degree();
    return static_cast<int>(dim_forms(k)) - mult_rank(gradient(F), k - d + 1, k);
}

std::pair<int, int> tjurina_stability(const TernaryForm& F) {
    const int d = F.degree();
    if (d < 3) throw InvalidInput("tjurina_stability needs d >= 3");
    int tau = milnor_hilbert(F, 2 * d - 3);
    if (milnor_hilbert(F, 2 * d - 2) != tau)
        throw InternalError("Milnor Hilbert function not stable at 2d-3");
    int st = 2 * d - 3;
    while (st > 0 && milnor_hilbert(F, st - 1) == tau) --st;
    return {tau, st};
}

int smooth_milnor_series(int d, int k) {
    // coefficients of (1 + t + ... + t^(d-2))^3
    if (k < 0 || k > 3 * (d - 2)) return 0;
    long acc = 0;
    for (int i = 0; i <= 2; ++i) {
        long term = binomial(k - i * (d - 1) + 2, 2);
        if (k - i * (d - 1) < 0) term = 0;
        acc += (i % 2 ? -1 : 1) * binomial(3, i) * term;
    }
    return static_cast<int>(acc);
}

int n_dim(const TernaryForm& F, int k, int tau) {
    const int d = F.degree();
    const int D = 3 * (d - 2);
    if (k < 0 || k > D) throw InvalidInput("n_dim needs 0 <= k <= 3(d-2)");
    int v = milnor_hilbert(F, k) + milnor_hilbert(F, D - k) - smooth_milnor_series(d, k) - tau;
    if (v < 0) throw InternalError("negative N(F) dimension");
    return v;
}

OracleReport oracle_report(const TernaryForm& F) {
    const int d = F.degree();
    if (d < 3) throw InvalidInput("oracle_report needs d >= 3");
    OracleReport rep;
    auto [tau, st] = tjurina_stability(F);
    rep.tau = tau;
    rep.st = st;
    for (int k = 0; k <= 2 * d - 2; ++k) rep.milnor.push_back(milnor_hilbert(F, k));
    rep.mdr = -1;
    for (int q = 0; q <= d; ++q) {
        rep.ar_dims.push_back(ar_dim(F, q));
        if (rep.mdr < 0 && rep.ar_dims.back() > 0) rep.mdr = q;
    }
    if (rep.mdr < 0) throw InternalError("no Jacobian syzygy up to degree d");
    int max_n = 0;
    for (int k = d - 2; k <= 2 * d - 4; ++k) {
        rep.n_dims.push_back(n_dim(F, k, tau));
        max_n = std::max(max_n, rep.n_dims.back());
    }
    if (max_n == 0) {
        rep.verdict = Freeness::Free;
        rep.d1 = rep.mdr;
        rep.d2 = d - 1 - rep.mdr;
    } else if (max_n == 1) {
        rep.verdict = Freeness::NearlyFree;
        rep.d1 = rep.mdr;
        rep.d2 = d - rep.mdr;
    } else {
        rep.verdict = Freeness::Neither;
    }
    return rep;
}

} // namespace ratcurve
