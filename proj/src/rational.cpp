#include "ratcurve/rational.hpp"

#include <algorithm>
#include <cctype>

#include "ratcurve/errors.hpp"

namespace ratcurve {

namespace {

bool valid_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(),
                           [](unsigned char c) { return std::isspace(c); }),
            s.end());
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!valid_integer_token(s)) throw InvalidInput("bad rational: '" + text + "'");
        return Rational(Int(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den))
        throw InvalidInput("bad rational: '" + text + "'");
    Int d(den);
    if (d == 0) throw InvalidInput("zero denominator: '" + text + "'");
    Rational r(Int(num), d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace {

// Pollard-Brent with GMP's probabilistic primality test; enough for the
// coefficient sizes this library ever sees at rational-root extraction.
Int pollard_brent(const Int& n) {
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xC0FFEEul);
    while (true) {
        Int y = rng.get_z_range(n - 1) + 1;
        Int c = rng.get_z_range(n - 1) + 1;
        Int m = 128, g = 1, r = 1, q = 1, x, ys;
        while (g == 1) {
            x = y;
            for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
            Int k = 0;
            while (k < r && g == 1) {
                ys = y;
                Int lim = std::min(m, Int(r - k));
                for (Int i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                Int d = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g != n) return g;
    }
}

void factor_into(Int n, std::vector<std::pair<Int, int>>& out) {
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        if (e) out.emplace_back(p, e);
    }
    for (long p = 17; p < (1L << 20) && Int(p) * p <= n; p += 2) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    // recurse on what is left with rho
    std::vector<Int> stack;
    if (n > 1) stack.push_back(n);
    while (!stack.empty()) {
        Int m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (mpz_probab_prime_p(m.get_mpz_t(), 40)) {
            bool merged = false;
            for (auto& [p, e] : out)
                if (p == m) { ++e; merged = true; break; }
            if (!merged) out.emplace_back(m, 1);
            continue;
        }
        Int f = pollard_brent(m);
        stack.push_back(f);
        stack.push_back(m / f);
    }
}

} // namespace

std::vector<Int> divisors(const Int& n) {
    Int m = abs(n);
    if (m == 0) throw InvalidInput("divisors of zero");
    std::vector<std::pair<Int, int>> fac;
    if (m > 1) factor_into(m, fac);
    std::vector<Int> out{1};
    for (const auto& [p, e] : fac) {
        std::size_t base = out.size();
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// scale a rational tuple to coprime integers, first nonzero entry positive
std::vector<Int> normalize_tuple(const std::vector<Rational>& v) {
    Int l = 1;
    for (const auto& r : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den().get_mpz_t());
    std::vector<Int> w;
    w.reserve(v.size());
    Int g = 0;
    for (const auto& r : v) {
        Int n = r.get_num() * (l / r.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        w.push_back(n);
    }
    if (g == 0) throw InvalidInput("zero projective point");
    for (auto& n : w) n /= g;
    for (const auto& n : w) {
        if (n != 0) {
            if (n < 0)
                for (auto& m : w) m = -m;
            break;
        }
    }
    return w;
}

} // namespace

ProjPoint1 normalize_point(const Rational& a, const Rational& b) {
    auto w = normalize_tuple({a, b});
    return {w[0], w[1]};
}

ProjPoint2 normalize_point(const Rational& x, const Rational& y, const Rational& z) {
    auto w = normalize_tuple({x, y, z});
    return {w[0], w[1], w[2]};
}

bool ProjPoint2::operator<(const ProjPoint2& o) const {
    if (x != o.x) return x < o.x;
    if (y != o.y) return y < o.y;
    return z < o.z;
}

std::string ProjPoint2::str() const {
    return "(" + x.get_str() + ":" + y.get_str() + ":" + z.get_str() + ")";
}

} // namespace ratcurve
