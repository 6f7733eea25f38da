#ifndef RATCURVE_TEST_SUPPORT_HPP
#define RATCURVE_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include "ratcurve/binary_form.hpp"
#include "ratcurve/musyz.hpp"
#include "ratcurve/parametrization.hpp"
#include "ratcurve/qmatrix.hpp"

namespace rctest {

using namespace ratcurve;

// s^a t^b shorthand
inline BinaryForm st(int a, int b, long c = 1) {
    return BinaryForm::monomial(a + b, b, Rational(c));
}

inline BinaryForm bf(std::vector<long> coeffs) {
    std::vector<Rational> v;
    for (long c : coeffs) v.emplace_back(c);
    return BinaryForm(v);
}

// brute-force determinant by Laplace expansion: the independent oracle for
// everything Bareiss computes in these tests
inline Rational laplace_det(const QMatrix& m) {
    const int n = m.rows();
    if (n == 0) return Rational(1);
    if (n == 1) return m.at(0, 0);
    Rational acc(0);
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        QMatrix sub(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int k = 0; k < n; ++k) {
                if (k == j) continue;
                sub.at(i - 1, cc++) = m.at(i, k);
            }
        }
        Rational term = m.at(0, j) * laplace_det(sub);
        acc += (j % 2 ? -term : term);
    }
    return acc;
}

// deterministic random binary forms with coefficients in [-5, 5]
class FormGen {
public:
    explicit FormGen(unsigned seed) : rng_(seed) {}

    BinaryForm form(int degree) {
        std::uniform_int_distribution<long> dist(-5, 5);
        std::vector<Rational> c(degree + 1);
        bool nz = false;
        for (auto& x : c) {
            x = Rational(dist(rng_));
            if (x != 0) nz = true;
        }
        if (!nz) c[0] = 1;
        return BinaryForm(c);
    }

    // proper parametrization of the requested degree
    Parametrization proper(int degree) {
        while (true) {
            try {
                Parametrization phi(form(degree), form(degree), form(degree));
                if (properness_degree(phi) == 1) return phi;
            } catch (const InvalidInput&) {
            }
        }
    }

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace rctest

#endif
