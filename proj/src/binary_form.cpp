#include "ratcurve/binary_form.hpp"

#include <algorithm>
#include <sstream>

#include "ratcurve/errors.hpp"

namespace ratcurve {

BinaryForm::BinaryForm(std::vector<Rational> coeffs)
    : degree_(static_cast<int>(coeffs.size()) - 1), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw InvalidInput("empty coefficient vector");
}

BinaryForm BinaryForm::zero(int degree) {
    BinaryForm f;
    f.degree_ = degree;
    f.coeffs_.assign(degree + 1, Rational(0));
    return f;
}

BinaryForm BinaryForm::monomial(int degree, int t_exp, Rational c) {
    BinaryForm f = zero(degree);
    f.coeffs_[t_exp] = std::move(c);
    return f;
}

bool BinaryForm::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c == 0; });
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
    if (degree_ != o.degree_) {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        throw InvalidInput("degree mismatch in binary form addition");
    }
    BinaryForm r = *this;
    for (int i = 0; i <= degree_; ++i) r.coeffs_[i] += o.coeffs_[i];
    return r;
}

BinaryForm BinaryForm::operator-(const BinaryForm& o) const { return *this + (-o); }

BinaryForm BinaryForm::operator-() const {
    BinaryForm r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
    BinaryForm r = zero(degree_ + o.degree_);
    for (int i = 0; i <= degree_; ++i) {
        if (coeffs_[i] == 0) continue;
        for (int j = 0; j <= o.degree_; ++j)
            if (o.coeffs_[j] != 0) r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return r;
}

BinaryForm BinaryForm::operator*(const Rational& c) const {
    BinaryForm r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

Rational BinaryForm::eval(const Rational& s, const Rational& t) const {
    Rational v(0), sp(1);
    std::vector<Rational> tp(degree_ + 1);
    tp[degree_] = 1;
    for (int i = degree_ - 1; i >= 0; --i) tp[i] = tp[i + 1] * t;
    // coeff(i) s^(d-i) t^i; accumulate with s-powers ascending over reversed index
    for (int i = degree_; i >= 0; --i) {
        if (coeffs_[i] != 0) v += coeffs_[i] * sp * tp[degree_ - i];
        sp *= s;
    }
    return v;
}

BinaryForm BinaryForm::ds() const {
    if (degree_ == 0) return zero(0);
    BinaryForm r = zero(degree_ - 1);
    for (int i = 0; i < degree_; ++i) r.coeffs_[i] = coeffs_[i] * (degree_ - i);
    return r;
}

BinaryForm BinaryForm::dt() const {
    if (degree_ == 0) return zero(0);
    BinaryForm r = zero(degree_ - 1);
    for (int i = 1; i <= degree_; ++i) r.coeffs_[i - 1] = coeffs_[i] * i;
    return r;
}

int BinaryForm::s_order() const {
    // s^k | f iff the last k coefficient slots vanish
    int k = 0;
    for (int i = degree_; i >= 0 && coeffs_[i] == 0; --i) ++k;
    return std::min(k, degree_);
}

int BinaryForm::t_order() const {
    int k = 0;
    for (int i = 0; i <= degree_ && coeffs_[i] == 0; ++i) ++k;
    return std::min(k, degree_);
}

BinaryForm BinaryForm::core(int& s_ord, int& t_ord) const {
    if (is_zero()) throw InvalidInput("core of the zero form");
    s_ord = s_order();
    t_ord = t_order();
    int m = degree_ - s_ord - t_ord;
    BinaryForm r = zero(m);
    for (int i = 0; i <= m; ++i) r.coeffs_[i] = coeffs_[i + t_ord];
    return r;
}

qp::QPoly BinaryForm::at_t1() const {
    // coeff of s^k in f(s,1) is coeffs_[d-k]
    qp::QPoly p(degree_ + 1);
    for (int k = 0; k <= degree_; ++k) p[k] = coeffs_[degree_ - k];
    return qp::trim(std::move(p));
}

BinaryForm BinaryForm::homogenize(const qp::QPoly& p, int degree) {
    BinaryForm f = zero(degree);
    for (int k = 0; k < static_cast<int>(p.size()); ++k) f.coeffs_[degree - k] = p[k];
    return f;
}

std::string BinaryForm::str(const char* s, const char* t) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= degree_; ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        int se = degree_ - i, te = i;
        bool unit = (a == 1) && (se + te > 0);
        if (!unit) os << to_string(a);
        if (se > 0) {
            if (!unit) os << "*";
            os << s;
            if (se > 1) os << "^" << se;
        }
        if (te > 0) {
            if (se > 0 || !unit) os << "*";
            os << t;
            if (te > 1) os << "^" << te;
        }
    }
    return os.str();
}

BinaryForm monic(const BinaryForm& f) {
    for (int i = 0; i <= f.degree(); ++i)
        if (f.coeff(i) != 0) return f * (Rational(1) / f.coeff(i));
    return f;
}

BinaryForm primitive_positive(const BinaryForm& f) {
    if (f.is_zero()) return f;
    Int l = 1;
    for (const auto& c : f.coeffs())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    Int g = 0;
    for (const auto& c : f.coeffs()) {
        Int n = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    Rational scale(l, g);
    scale.canonicalize();
    BinaryForm r = f * scale;
    for (int i = 0; i <= r.degree(); ++i)
        if (r.coeff(i) != 0) {
            if (r.coeff(i) < 0) r = -r;
            break;
        }
    return r;
}

BinaryForm gcd(const BinaryForm& f, const BinaryForm& g) {
    if (f.is_zero() && g.is_zero()) throw InvalidInput("gcd of two zero forms");
    if (f.is_zero()) return monic(g);
    if (g.is_zero()) return monic(f);
    int fs, ft, gs, gt;
    BinaryForm fc = f.core(fs, ft);
    BinaryForm gc = g.core(gs, gt);
    qp::QPoly h = qp::gcd(fc.at_t1(), gc.at_t1());
    // both cores have nonzero constant term, hence so does h: its own degree
    // is the right homogenization degree
    BinaryForm hf = BinaryForm::homogenize(h, qp::deg(h));
    BinaryForm mono = BinaryForm::monomial(std::min(fs, gs) + std::min(ft, gt),
                                           std::min(ft, gt));
    return monic(hf * mono);
}

BinaryForm gcd(const std::vector<BinaryForm>& forms) {
    BinaryForm g = BinaryForm::zero(0);
    bool seeded = false;
    for (const auto& f : forms) {
        if (f.is_zero()) continue;
        g = seeded ? gcd(g, f) : monic(f);
        seeded = true;
    }
    if (!seeded) throw InvalidInput("gcd of all-zero family");
    return g;
}

std::vector<std::pair<BinaryForm, int>> squarefree_decomposition(const BinaryForm& f) {
    if (f.is_zero()) throw InvalidInput("squarefree decomposition of zero");
    std::vector<std::pair<BinaryForm, int>> out;
    int so, to;
    BinaryForm c = f.core(so, to);
    if (to > 0) out.emplace_back(BinaryForm::monomial(1, 1), to); // t^to
    if (so > 0) out.emplace_back(BinaryForm::monomial(1, 0), so); // s^so
    for (const auto& [p, m] : qp::squarefree(c.at_t1()))
        out.emplace_back(primitive_positive(BinaryForm::homogenize(p, qp::deg(p))), m);
    return out;
}

BinaryForm squarefree_part(const BinaryForm& f) {
    BinaryForm r = BinaryForm::monomial(0, 0);
    for (const auto& [p, m] : squarefree_decomposition(f)) r = r * p;
    return primitive_positive(r);
}

std::vector<std::pair<ProjPoint1, int>> rational_roots(const BinaryForm& f) {
    if (f.is_zero()) throw InvalidInput("roots of the zero form");
    std::vector<std::pair<ProjPoint1, int>> out;
    int so, to;
    BinaryForm c = f.core(so, to);
    if (so > 0) out.push_back({ProjPoint1{0, 1}, so}); // s | f vanishes at (0:1)
    if (to > 0) out.push_back({ProjPoint1{1, 0}, to}); // t | f vanishes at (1:0)
    for (const auto& [r, m] : qp::rational_roots(c.at_t1()))
        out.push_back({normalize_point(r, Rational(1)), m});
    return out;
}

BinaryForm divide_exact(const BinaryForm& f, const BinaryForm& g) {
    if (g.is_zero()) throw NotDivisible("division by zero form");
    if (f.is_zero()) {
        int d = f.degree() - g.degree();
        return BinaryForm::zero(std::max(d, 0));
    }
    if (f.degree() < g.degree()) throw NotDivisible("degree of divisor exceeds dividend");
    int fs, ft, gs, gt;
    BinaryForm fc = f.core(fs, ft);
    BinaryForm gc = g.core(gs, gt);
    if (gs > fs || gt > ft) throw NotDivisible("monomial content not divisible");
    auto [q, r] = qp::divmod(fc.at_t1(), gc.at_t1());
    if (!r.empty()) throw NotDivisible("nonzero remainder");
    BinaryForm qf = BinaryForm::homogenize(q, fc.degree() - gc.degree());
    return qf * BinaryForm::monomial(fs - gs + ft - gt, ft - gt);
}

bool divides(const BinaryForm& g, const BinaryForm& f) {
    try {
        divide_exact(f, g);
        return true;
    } catch (const NotDivisible&) {
        return false;
    }
}

BinaryForm vanishing_line(const ProjPoint1& p) {
    BinaryForm l = BinaryForm::zero(1);
    l.coeff(0) = Rational(p.b);
    l.coeff(1) = -Rational(p.a);
    return l;
}

} // namespace ratcurve
