#include "ratcurve/qpoly.hpp"

#include <algorithm>

#include "ratcurve/errors.hpp"

namespace ratcurve::qp {

QPoly trim(QPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

QPoly add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return trim(std::move(r));
}

QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return trim(std::move(r));
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return trim(std::move(r));
}

QPoly scale(const QPoly& a, const Rational& c) {
    if (c == 0) return {};
    QPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

QPoly derivative(const QPoly& a) {
    if (a.size() <= 1) return {};
    QPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * int(i);
    return trim(std::move(r));
}

Rational eval(const QPoly& a, const Rational& x) {
    Rational v(0);
    for (auto it = a.rbegin(); it != a.rend(); ++it) v = v * x + *it;
    return v;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.empty()) throw NotDivisible("division by zero polynomial");
    QPoly r = trim(a);
    if (deg(r) < deg(b)) return {{}, r};
    QPoly q(r.size() - b.size() + 1, Rational(0));
    const Rational& lb = b.back();
    while (!r.empty() && deg(r) >= deg(b)) {
        int k = deg(r) - deg(b);
        Rational c = r.back() / lb;
        q[k] = c;
        for (std::size_t i = 0; i < b.size(); ++i) r[i + k] -= c * b[i];
        r = trim(std::move(r));
    }
    return {trim(std::move(q)), std::move(r)};
}

QPoly monic(const QPoly& a) {
    if (a.empty()) return a;
    return scale(a, Rational(1) / a.back());
}

QPoly gcd(const QPoly& a, const QPoly& b) {
    QPoly x = a, y = b;
    while (!y.empty()) {
        QPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

ExtGcd ext_gcd(const QPoly& a, const QPoly& b) {
    QPoly r0 = a, r1 = b;
    QPoly u0 = {Rational(1)}, u1 = {};
    QPoly v0 = {}, v1 = {Rational(1)};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        QPoly u2 = sub(u0, mul(q, u1));
        QPoly v2 = sub(v0, mul(q, v1));
        r0 = std::move(r1); r1 = std::move(r);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    if (r0.empty()) return {r0, u0, v0};
    Rational lc = r0.back();
    return {monic(r0), scale(u0, 1 / lc), scale(v0, 1 / lc)};
}

QPoly primitive(const QPoly& a) {
    if (a.empty()) return a;
    Int l = 1;
    for (const auto& c : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    Int g = 0;
    for (const auto& c : a) {
        Int n = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    Rational f(l, g);
    f.canonicalize();
    QPoly r = scale(a, f);
    if (r.back() < 0) r = scale(r, Rational(-1));
    return r;
}

std::vector<std::pair<QPoly, int>> squarefree(const QPoly& a) {
    std::vector<std::pair<QPoly, int>> out;
    if (deg(a) < 1) return out;
    QPoly g = gcd(a, derivative(a));
    QPoly c = divmod(a, g).first;          // product of distinct factors
    QPoly d = sub(divmod(derivative(a), g).first, derivative(c));
    int mult = 1;
    while (deg(c) > 0) {
        QPoly p = gcd(c, d);
        if (deg(p) > 0) out.emplace_back(primitive(p), mult);
        c = divmod(c, p).first;
        d = sub(divmod(d, p).first, derivative(c));
        ++mult;
    }
    return out;
}

std::vector<std::pair<Rational, int>> rational_roots(const QPoly& a) {
    std::vector<std::pair<Rational, int>> out;
    if (deg(a) < 1) return out;
    QPoly p = primitive(a);
    // strip the root at zero first
    int zero_mult = 0;
    while (!p.empty() && p.front() == 0) {
        p.erase(p.begin());
        ++zero_mult;
    }
    if (zero_mult) out.emplace_back(Rational(0), zero_mult);
    if (deg(p) < 1) return out;
    Int tc = p.front().get_num();
    Int lc = p.back().get_num();
    std::vector<Rational> candidates;
    for (const Int& n : divisors(tc))
        for (const Int& d : divisors(lc)) {
            Rational c(n, d);
            c.canonicalize();
            if (c.get_num() == n && c.get_den() == d) {
                candidates.push_back(c);
                candidates.push_back(-c);
            }
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& c : candidates) {
        if (eval(p, c) != 0) continue;
        QPoly lin = {-c, Rational(1)};
        int m = 0;
        while (true) {
            auto [q, r] = divmod(p, lin);
            if (!r.empty()) break;
            p = q;
            ++m;
        }
        out.emplace_back(c, m);
    }
    return out;
}

} // namespace ratcurve::qp
