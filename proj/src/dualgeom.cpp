#include "ratcurve/dualgeom.hpp"

#include "ratcurve/errors.hpp"
#include "ratcurve/fibers.hpp"
#include "ratcurve/poly_matrix.hpp"

namespace ratcurve {

std::array<BinaryForm, 3> jacobian_minors(const Parametrization& phi) {
    std::array<BinaryForm, 3> ds{phi.f(0).ds(), phi.f(1).ds(), phi.f(2).ds()};
    std::array<BinaryForm, 3> dt{phi.f(0).dt(), phi.f(1).dt(), phi.f(2).dt()};
    auto minor = [&](int i, int j) { return ds[i] * dt[j] - ds[j] * dt[i]; };
    return {minor(0, 1), minor(0, 2), minor(1, 2)};
}

namespace {

// scale a form triple by one constant so all entries are integer and jointly
// coprime; sign fixed by the first nonzero coefficient of the first nonzero
// component
std::array<BinaryForm, 3> joint_primitive(std::array<BinaryForm, 3> g) {
    Int l = 1, gc = 0;
    for (const auto& f : g)
        for (const auto& c : f.coeffs())
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto& f : g)
        for (const auto& c : f.coeffs()) {
            Int n = c.get_num() * (l / c.get_den());
            mpz_gcd(gc.get_mpz_t(), gc.get_mpz_t(), n.get_mpz_t());
        }
    if (gc == 0) throw InvalidInput("zero triple");
    Rational scale(l, gc);
    scale.canonicalize();
    for (auto& f : g) f = f * scale;
    for (const auto& f : g) {
        if (f.is_zero()) continue;
        for (int i = 0; i <= f.degree(); ++i)
            if (f.coeff(i) != 0) {
                if (f.coeff(i) < 0)
                    for (auto& h : g) h = -h;
                return g;
            }
    }
    return g;
}

} // namespace

DualParam dual_parametrization(const Parametrization& phi) {
    auto m = jacobian_minors(phi);
    BinaryForm A = gcd({m[0], m[1], m[2]});
    std::array<BinaryForm, 3> dual{divide_exact(m[2], A), -divide_exact(m[1], A),
                                   divide_exact(m[0], A)};
    return {joint_primitive(std::move(dual)), primitive_positive(A)};
}

GradientDual dual_via_gradient(const Parametrization& phi, const TernaryForm& F) {
    const int d = phi.degree();
    std::array<BinaryForm, 3> g;
    for (int i = 0; i < 3; ++i)
        g[i] = compose(F.partial(i), phi.f(0), phi.f(1), phi.f(2));
    BinaryForm h = gcd({g[0], g[1], g[2]});
    std::array<BinaryForm, 3> psi;
    for (int i = 0; i < 3; ++i) psi[i] = divide_exact(g[i], h);
    psi = joint_primitive(std::move(psi));

    DualParam dp = dual_parametrization(phi);
    if (h.degree() != (d - 1) * (d - 2) + dp.A.degree())
        throw InternalError("gradient-dual common factor has unexpected degree");
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!(psi[i] * dp.phi_dual[j] - psi[j] * dp.phi_dual[i]).is_zero())
                throw InternalError("gradient dual and minor dual disagree");
    return {psi, h};
}

TernaryForm line_discriminant(const Parametrization& phi) {
    const int d = phi.degree();
    // g = u f0 + v f1 + w f2; Sylvester of (ds g, dt g) in (s,t) with linear
    // ternary entries: rows of coefficients of ds g (degree d-1), d-1 shifts
    // each
    std::vector<TernaryForm> dsg(d), dtg(d);
    for (int k = 0; k <= d - 1; ++k) {
        dsg[k] = TernaryForm::linear(phi.f(0).ds().coeff(k), phi.f(1).ds().coeff(k),
                                     phi.f(2).ds().coeff(k));
        dtg[k] = TernaryForm::linear(phi.f(0).dt().coeff(k), phi.f(1).dt().coeff(k),
                                     phi.f(2).dt().coeff(k));
    }
    const int n = 2 * (d - 1);
    PolyMatrix syl(n, n);
    for (int r = 0; r < d - 1; ++r)
        for (int k = 0; k <= d - 1; ++k) {
            syl.at(r, r + k) = dsg[k];
            syl.at(d - 1 + r, r + k) = dtg[k];
        }
    return poly_matrix_det(syl, 2 * (d - 1));
}

DualData discriminant_factorization(const Parametrization& phi,
                                    const std::vector<SingularPoint>& singular_points) {
    DualData out;
    out.m = jacobian_minors(phi);
    DualParam dp = dual_parametrization(phi);
    out.A = dp.A;
    out.phi_dual = dp.phi_dual;
    out.d_dual = dp.phi_dual[0].degree();

    Parametrization dual(dp.phi_dual[0], dp.phi_dual[1], dp.phi_dual[2]);
    ImplicitCurve ic = [&] {
        try {
            return implicit_equation(dual);
        } catch (const ImproperParametrization& e) {
            throw InternalError(std::string("dual parametrization is improper: ") + e.what());
        }
    }();
    out.F_dual = ic.F;

    out.D = line_discriminant(phi);
    TernaryForm rest = [&] {
        try {
            return divide_exact(out.D, out.F_dual);
        } catch (const NotDivisible&) {
            throw InternalError("dual equation does not divide the discriminant");
        }
    }();
    out.singular_lines = rest;

    for (const auto& sp : singular_points) {
        if (sp.m <= sp.r) continue;
        TernaryForm line = TernaryForm::linear(Rational(sp.point.x), Rational(sp.point.y),
                                               Rational(sp.point.z));
        int exponent = 0;
        while (divides(line, rest)) {
            rest = divide_exact(rest, line);
            ++exponent;
        }
        if (exponent != sp.m - sp.r)
            throw InternalError("singular line exponent differs from m_P - r_P at " +
                                sp.point.str());
        out.lines.push_back({line, exponent, sp.point});
    }
    out.residual = primitive_positive(rest);
    return out;
}

} // namespace ratcurve
