#include "ratcurve/d5.hpp"

#include "ratcurve/errors.hpp"

namespace ratcurve::d5 {

Field::Field(qp::QPoly modulus) : m_(qp::monic(qp::trim(std::move(modulus)))) {
    if (qp::deg(m_) < 1) throw InvalidInput("modulus must have positive degree");
}

qp::QPoly Field::reduce(const qp::QPoly& a) const { return qp::divmod(a, m_).second; }

qp::QPoly Field::mul(const qp::QPoly& a, const qp::QPoly& b) const {
    return reduce(qp::mul(a, b));
}

qp::QPoly Field::inv(const qp::QPoly& a) const {
    qp::QPoly r = reduce(a);
    if (qp::is_zero(r)) throw InvalidInput("inverse of zero");
    auto eg = qp::ext_gcd(r, m_);
    if (qp::deg(eg.g) == 0) return reduce(eg.u); // ext_gcd normalizes g to 1
    // proper common factor: a is a zero divisor, split the branch
    throw Split{eg.g};
}

qp::QPoly Field::generator() const {
    if (degree() == 1) return reduce({Rational(0), Rational(1)});
    return {Rational(0), Rational(1)};
}

bool kform_is_zero(const KForm& f) {
    for (const auto& c : f)
        if (!qp::is_zero(c)) return false;
    return true;
}

int kform_degree(const KForm& f) { return static_cast<int>(f.size()) - 1; }

namespace {

// true degree in u after dropping leading zero coefficients; the dropped
// leading coefficients are exact zeros (representatives are reduced)
KForm trim_leading(KForm f) {
    // coefficient 0 multiplies u^n; drop zero entries from the front
    std::size_t lead = 0;
    while (lead < f.size() && qp::is_zero(f[lead])) ++lead;
    f.erase(f.begin(), f.begin() + lead);
    return f;
}

} // namespace

KForm kform_gcd(const Field& k, const KForm& a, const KForm& b) {
    // handle monomial content in u and v: v-order = leading zero count was
    // dropped by trim_leading; u-order = trailing zeros
    auto strip = [&](const KForm& f, int& vord, int& uord) {
        KForm g = trim_leading(f);
        vord = static_cast<int>(f.size() - g.size());
        uord = 0;
        while (!g.empty() && qp::is_zero(g.back())) {
            g.pop_back();
            ++uord;
        }
        // a zero-divisor end coefficient hides branch-dependent content:
        // force the split now so each branch sees exact zeros or units
        if (!g.empty()) {
            k.inv(g.front());
            k.inv(g.back());
        }
        return g;
    };
    int av, au, bv, bu;
    KForm x = strip(a, av, au);
    KForm y = strip(b, bv, bu);
    if (x.empty() || y.empty()) throw InvalidInput("kform_gcd with zero form");
    // x, y are now plain polynomials in u (descending coefficient order);
    // Euclid with monic normalization, splitting on zero-divisor leads
    auto make_monic = [&](KForm f) {
        f = trim_leading(std::move(f));
        if (f.empty()) return f;
        qp::QPoly li = k.inv(f.front());
        for (auto& c : f) c = k.mul(c, li);
        return f;
    };
    x = make_monic(std::move(x));
    y = make_monic(std::move(y));
    while (!y.empty()) {
        // x mod y with monic y: subtract shifted multiples
        while (x.size() >= y.size()) {
            qp::QPoly lead = x.front();
            if (!qp::is_zero(lead)) {
                std::size_t off = 0;
                for (std::size_t i = 0; i < y.size(); ++i)
                    x[off + i] = k.sub(x[off + i], k.mul(lead, y[i]));
            }
            x.erase(x.begin());
            x = trim_leading(std::move(x));
            if (x.empty()) break;
        }
        std::swap(x, y);
        y = make_monic(std::move(y));
    }
    x = make_monic(std::move(x));
    // restore the shared monomial content: u^min(au,bu) v^min(av,bv)
    int uord = std::min(au, bu), vord = std::min(av, bv);
    KForm out;
    out.insert(out.end(), vord, qp::QPoly{});
    out.insert(out.end(), x.begin(), x.end());
    out.insert(out.end(), uord, qp::QPoly{});
    return out;
}

std::pair<KForm, int> strip_linear_factor(const Field& k, KForm f, const qp::QPoly& theta) {
    // division of sum c_j u^(n-j) v^j by (u - theta v): synthetic division;
    // the remainder is the evaluation at (u,v) = (theta,1). Leading zero
    // coefficients are v-powers and must stay (they are roots distinct from
    // theta), so no trimming here.
    int power = 0;
    while (static_cast<int>(f.size()) - 1 >= 1) {
        std::vector<qp::QPoly> q(f.size() - 1);
        qp::QPoly acc{}; // running coefficient
        for (std::size_t j = 0; j + 1 < f.size(); ++j) {
            acc = qp::is_zero(acc) ? f[j] : k.add(f[j], k.mul(acc, theta));
            q[j] = acc;
        }
        qp::QPoly rem = k.add(f.back(), k.mul(acc, theta));
        if (!qp::is_zero(rem)) {
            // distinguish exact nonzero from zero divisor: invertible remainder
            // means genuinely not divisible; a zero divisor splits the branch
            k.inv(rem);
            break;
        }
        f = std::move(q);
        ++power;
    }
    return {std::move(f), power};
}

} // namespace ratcurve::d5
