#include "ratcurve/ternary_form.hpp"

#include <functional>
#include <sstream>

#include "ratcurve/errors.hpp"

namespace ratcurve {

TernaryForm TernaryForm::monomial(Exponents e, Rational c) {
    TernaryForm f(e[0] + e[1] + e[2]);
    if (c != 0) f.terms_[e] = std::move(c);
    return f;
}

TernaryForm TernaryForm::linear(const Rational& a, const Rational& b, const Rational& c) {
    TernaryForm f(1);
    if (a != 0) f.terms_[{1, 0, 0}] = a;
    if (b != 0) f.terms_[{0, 1, 0}] = b;
    if (c != 0) f.terms_[{0, 0, 1}] = c;
    return f;
}

Rational TernaryForm::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TernaryForm::set(const Exponents& e, const Rational& c) {
    if (e[0] + e[1] + e[2] != degree_) throw InvalidInput("exponent sum != degree");
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = c;
}

void TernaryForm::add_term(const Exponents& e, const Rational& c) {
    if (e[0] + e[1] + e[2] != degree_) throw InvalidInput("exponent sum != degree");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0) terms_[e] = c;
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

TernaryForm TernaryForm::operator+(const TernaryForm& o) const {
    if (degree_ != o.degree_) {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        throw InvalidInput("degree mismatch in ternary form addition");
    }
    TernaryForm r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

TernaryForm TernaryForm::operator-(const TernaryForm& o) const { return *this + (-o); }

TernaryForm TernaryForm::operator-() const {
    TernaryForm r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

TernaryForm TernaryForm::operator*(const TernaryForm& o) const {
    TernaryForm r(degree_ + o.degree_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
    return r;
}

TernaryForm TernaryForm::operator*(const Rational& c) const {
    TernaryForm r(degree_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

TernaryForm TernaryForm::partial(int var) const {
    TernaryForm r(degree_ > 0 ? degree_ - 1 : 0);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents f = e;
        f[var] -= 1;
        r.add_term(f, c * e[var]);
    }
    return r;
}

Rational TernaryForm::eval(const Rational& x, const Rational& y, const Rational& z) const {
    Rational v(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < e[0]; ++i) t *= x;
        for (int i = 0; i < e[1]; ++i) t *= y;
        for (int i = 0; i < e[2]; ++i) t *= z;
        v += t;
    }
    return v;
}

std::vector<Exponents> monomials_of_degree(int q) {
    std::vector<Exponents> out;
    if (q < 0) return out;
    out.reserve(dim_forms(q));
    for (int a = q; a >= 0; --a)
        for (int b = q - a; b >= 0; --b) out.push_back({a, b, q - a - b});
    return out;
}

long dim_forms(int q) { return q < 0 ? 0 : static_cast<long>(q + 2) * (q + 1) / 2; }

std::vector<Rational> TernaryForm::dense_coeffs() const {
    auto basis = monomials_of_degree(degree_);
    std::vector<Rational> v(basis.size(), Rational(0));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        auto it = terms_.find(basis[i]);
        if (it != terms_.end()) v[i] = it->second;
    }
    return v;
}

std::string TernaryForm::str(const char* x, const char* y, const char* z) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const char* names[3] = {x, y, z};
    for (const auto& e : monomials_of_degree(degree_)) {
        auto it = terms_.find(e);
        if (it == terms_.end()) continue;
        const Rational& c = it->second;
        Rational a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (a == 1) && (e[0] + e[1] + e[2] > 0);
        if (!unit) os << to_string(a);
        bool lead = unit;
        for (int v = 0; v < 3; ++v) {
            if (e[v] == 0) continue;
            if (!lead) os << "*";
            lead = false;
            os << names[v];
            if (e[v] > 1) os << "^" << e[v];
        }
    }
    return os.str();
}

BinaryForm compose(const TernaryForm& F, const BinaryForm& f0, const BinaryForm& f1,
                   const BinaryForm& f2) {
    int d = f0.degree();
    BinaryForm acc = BinaryForm::zero(F.degree() * d);
    if (F.is_zero()) return acc;
    // share the power products between terms
    std::map<Exponents, BinaryForm> cache;
    cache[{0, 0, 0}] = BinaryForm::monomial(0, 0);
    std::function<const BinaryForm&(const Exponents&)> power =
        [&](const Exponents& e) -> const BinaryForm& {
        auto it = cache.find(e);
        if (it != cache.end()) return it->second;
        Exponents f = e;
        const BinaryForm* factor;
        if (e[0] > 0) {
            f[0] -= 1;
            factor = &f0;
        } else if (e[1] > 0) {
            f[1] -= 1;
            factor = &f1;
        } else {
            f[2] -= 1;
            factor = &f2;
        }
        BinaryForm val = power(f) * (*factor);
        return cache.emplace(e, std::move(val)).first->second;
    };
    for (const auto& [e, c] : F.terms()) acc = acc + power(e) * c;
    return acc;
}

TernaryForm divide_exact(const TernaryForm& F, const TernaryForm& G) {
    if (G.is_zero()) throw NotDivisible("division by zero form");
    if (F.is_zero()) return TernaryForm(std::max(F.degree() - G.degree(), 0));
    if (F.degree() < G.degree()) throw NotDivisible("degree of divisor exceeds dividend");
    // top reduction by the single divisor; for an exact multiple the leading
    // term is divisible at every step
    TernaryForm rem = F;
    TernaryForm quot(F.degree() - G.degree());
    const auto& [ge, gc] = *G.terms().rbegin(); // graded-lex leading term
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms().rbegin();
        Exponents q{re[0] - ge[0], re[1] - ge[1], re[2] - ge[2]};
        if (q[0] < 0 || q[1] < 0 || q[2] < 0)
            throw NotDivisible("leading term not divisible");
        Rational qc = rc / gc;
        quot.add_term(q, qc);
        TernaryForm qterm = TernaryForm::monomial(q, qc);
        rem = rem - qterm * G;
    }
    return quot;
}

bool divides(const TernaryForm& G, const TernaryForm& F) {
    try {
        divide_exact(F, G);
        return true;
    } catch (const NotDivisible&) {
        return false;
    }
}

TernaryForm primitive_positive(const TernaryForm& F) {
    if (F.is_zero()) return F;
    Int l = 1;
    for (const auto& [e, c] : F.terms())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    Int g = 0;
    for (const auto& [e, c] : F.terms()) {
        Int n = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    Rational scale(l, g);
    scale.canonicalize();
    TernaryForm r = F * scale;
    if (r.terms().rbegin()->second < 0) r = -r;
    return r;
}

} // namespace ratcurve
