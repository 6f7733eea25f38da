#include "ratcurve/biform.hpp"

#include <algorithm>

#include "ratcurve/errors.hpp"
#include "ratcurve/poly_matrix.hpp"

namespace ratcurve {

bool BiForm::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

BiForm BiForm::operator+(const BiForm& o) const {
    if (sdeg_ != o.sdeg_ || udeg_ != o.udeg_) throw InvalidInput("biform bidegree mismatch");
    BiForm r = *this;
    for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] += o.c_[k];
    return r;
}

BiForm BiForm::operator-(const BiForm& o) const {
    if (sdeg_ != o.sdeg_ || udeg_ != o.udeg_) throw InvalidInput("biform bidegree mismatch");
    BiForm r = *this;
    for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] -= o.c_[k];
    return r;
}

BiForm BiForm::operator*(const Rational& c) const {
    BiForm r = *this;
    for (auto& x : r.c_) x *= c;
    return r;
}

BinaryForm BiForm::diagonal() const {
    // s^(a-i) t^i s^(b-j) t^j -> index i+j at degree a+b
    BinaryForm f = BinaryForm::zero(sdeg_ + udeg_);
    for (int i = 0; i <= sdeg_; ++i)
        for (int j = 0; j <= udeg_; ++j)
            if (at(i, j) != 0) f.coeff(i + j) += at(i, j);
    return f;
}

BinaryForm BiForm::specialize_st(const Rational& a, const Rational& b) const {
    BinaryForm f = BinaryForm::zero(udeg_);
    // powers a^(sdeg-i) b^i
    std::vector<Rational> ap(sdeg_ + 1), bp(sdeg_ + 1);
    ap[0] = 1;
    bp[0] = 1;
    for (int i = 1; i <= sdeg_; ++i) {
        ap[i] = ap[i - 1] * a;
        bp[i] = bp[i - 1] * b;
    }
    for (int j = 0; j <= udeg_; ++j) {
        Rational acc(0);
        for (int i = 0; i <= sdeg_; ++i)
            if (at(i, j) != 0) acc += at(i, j) * ap[sdeg_ - i] * bp[i];
        f.coeff(j) = acc;
    }
    return f;
}

std::vector<BinaryForm> BiForm::uv_coefficients() const {
    std::vector<BinaryForm> out;
    out.reserve(udeg_ + 1);
    for (int j = 0; j <= udeg_; ++j) {
        BinaryForm f = BinaryForm::zero(sdeg_);
        for (int i = 0; i <= sdeg_; ++i) f.coeff(i) = at(i, j);
        out.push_back(std::move(f));
    }
    return out;
}

BiForm BiForm::from_uv_coefficients(const std::vector<BinaryForm>& coeffs) {
    if (coeffs.empty()) throw InvalidInput("empty coefficient list");
    int sdeg = coeffs[0].degree();
    BiForm r(sdeg, static_cast<int>(coeffs.size()) - 1);
    for (int j = 0; j <= r.udeg(); ++j) {
        if (coeffs[j].degree() != sdeg) throw InvalidInput("ragged coefficient degrees");
        for (int i = 0; i <= sdeg; ++i) r.at(i, j) = coeffs[j].coeff(i);
    }
    return r;
}

BiForm cross_difference_quotient(const BinaryForm& f, const BinaryForm& g) {
    const int d = f.degree();
    if (g.degree() != d) throw InvalidInput("cross difference needs equal degrees");
    // N(k, m) entries of f(s,t) g(u,v) - g(s,t) f(u,v), bidegree (d, d)
    BiForm num(d, d);
    for (int k = 0; k <= d; ++k)
        for (int m = 0; m <= d; ++m) num.at(k, m) = f.coeff(k) * g.coeff(m) - g.coeff(k) * f.coeff(m);
    // N = sv*Q - tu*Q gives N(k,m) = Q(k, m-1) - Q(k-1, m); solve row by row
    BiForm q(d - 1, d - 1);
    for (int k = 0; k <= d - 1; ++k)
        for (int m = d; m >= 1; --m) {
            // q(k, m-1) = N(k, m) + q(k-1, m), entries out of range are zero
            Rational v = num.at(k, m);
            if (k >= 1 && m <= d - 1) v += q.at(k - 1, m);
            if (m - 1 <= d - 1) q.at(k, m - 1) = v;
        }
    // re-multiply: exactness check
    BiForm check(d, d);
    for (int k = 0; k <= d - 1; ++k)
        for (int m = 0; m <= d - 1; ++m) {
            if (q.at(k, m) == 0) continue;
            check.at(k, m + 1) += q.at(k, m); // sv * q
            check.at(k + 1, m) -= q.at(k, m); // -tu * q
        }
    if (!(check == num)) throw InternalError("cross difference not divisible by sv - tu");
    return q;
}

namespace {

// polynomial in u with binary-form coefficients, ascending u-powers,
// coefficient k of u^k; used only inside the (s,t)-fraction-field gcd
using FPoly = std::vector<BinaryForm>;

FPoly trim_f(FPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

FPoly content_free(FPoly p) {
    std::vector<BinaryForm> nz;
    for (const auto& c : p)
        if (!c.is_zero()) nz.push_back(c);
    if (nz.empty()) return p;
    BinaryForm cont = gcd(nz);
    for (auto& c : p)
        if (!c.is_zero()) c = divide_exact(c, cont);
    return p;
}

// pseudo-remainder of a by b (deg a >= deg b >= 0, b nonzero)
FPoly pseudo_rem(FPoly a, const FPoly& b) {
    const int db = static_cast<int>(b.size()) - 1;
    const BinaryForm& lb = b.back();
    while (true) {
        a = trim_f(std::move(a));
        int da = static_cast<int>(a.size()) - 1;
        if (da < db) return a;
        BinaryForm head = a.back();
        // a = lb * a - head * u^(da-db) * b
        for (auto& c : a) c = c * lb;
        for (int i = 0; i <= db; ++i)
            a[da - db + i] = a[da - db + i] - head * b[i];
    }
}

} // namespace

BiForm gcd_over_st(const BiForm& a, const BiForm& b) {
    if (a.is_zero() || b.is_zero()) throw InvalidInput("gcd_over_st with zero biform");
    // split off u- and v-monomial content first
    auto ends = [](const BiForm& q, int& vord, int& uord) {
        auto coeffs = q.uv_coefficients();
        vord = 0;
        while (vord <= q.udeg() && coeffs[vord].is_zero()) ++vord;
        uord = 0;
        while (uord <= q.udeg() && coeffs[q.udeg() - uord].is_zero()) ++uord;
    };
    int av, au, bv, bu;
    ends(a, av, au);
    ends(b, bv, bu);
    auto core = [](const BiForm& q, int vord, int uord) {
        auto coeffs = q.uv_coefficients();
        FPoly p;
        // coefficient of u^k in the v=1 dehomogenization of the core
        for (int j = q.udeg() - uord; j >= vord; --j) p.push_back(coeffs[j]);
        return content_free(trim_f(std::move(p)));
    };
    FPoly x = core(a, av, au), y = core(b, bv, bu);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        FPoly r = content_free(pseudo_rem(x, y));
        x = std::move(y);
        y = trim_f(std::move(r));
    }
    // homogenize the core gcd and restore the shared monomial content
    int coredeg = static_cast<int>(x.size()) - 1;
    int vord = std::min(av, bv), uord = std::min(au, bu);
    int sdeg = 0;
    for (const auto& c : x)
        if (!c.is_zero()) sdeg = std::max(sdeg, c.degree());
    std::vector<BinaryForm> coeffs(coredeg + 1 + vord + uord,
                                   BinaryForm::zero(sdeg));
    for (int k = 0; k <= coredeg; ++k) {
        // u^k core coefficient lands at v-index (coredeg - k) + vord
        BinaryForm c = x[k];
        if (c.degree() != sdeg) {
            if (!c.is_zero()) throw InternalError("inhomogeneous gcd core");
            c = BinaryForm::zero(sdeg);
        }
        coeffs[coredeg - k + vord] = c;
    }
    return BiForm::from_uv_coefficients(coeffs);
}

BinaryForm resultant_uv(const BiForm& a, const BiForm& b) {
    const int n1 = a.udeg(), n2 = b.udeg();
    if (n1 < 1 || n2 < 1) throw InvalidInput("resultant needs positive degrees");
    // Sylvester rows: n2 shifted copies of a's (u,v)-coefficients, then n1 of b's
    auto ac = a.uv_coefficients();
    auto bc = b.uv_coefficients();
    const int n = n1 + n2;
    std::vector<std::vector<BinaryForm>> syl(n, std::vector<BinaryForm>(n, BinaryForm::zero(0)));
    for (int r = 0; r < n2; ++r)
        for (int j = 0; j <= n1; ++j) syl[r][r + j] = ac[j];
    for (int r = 0; r < n1; ++r)
        for (int j = 0; j <= n2; ++j) syl[n2 + r][r + j] = bc[j];
    return bf_matrix_det(syl, a.sdeg() * n2 + b.sdeg() * n1);
}

} // namespace ratcurve
