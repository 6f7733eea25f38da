#include "ratcurve/fibers.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ratcurve/d5.hpp"
#include "ratcurve/dualgeom.hpp"
#include "ratcurve/errors.hpp"
#include "ratcurve/qmatrix.hpp"

namespace ratcurve {

namespace {

BiForm add_scaled(const BiForm& a, const BiForm& b, int k) {
    return a + b * Rational(k);
}

// deterministic combination schedule; correctness does not depend on it
// (every identification parameter divides every nonzero resultant), the
// schedule only tightens T
std::vector<std::pair<BiForm, BiForm>> combination_schedule(const BiForm& q01,
                                                            const BiForm& q02,
                                                            const BiForm& q12) {
    std::vector<std::pair<BiForm, BiForm>> out;
    out.emplace_back(q01, q02);
    out.emplace_back(q01, q12);
    out.emplace_back(q02, q12);
    out.emplace_back(add_scaled(q01, q02, 1), add_scaled(q01, q12, 1));
    out.emplace_back(add_scaled(q01, q02, 2), add_scaled(q01, q12, 3));
    return out;
}

} // namespace

FiberData qforms(const Parametrization& phi) {
    BiForm q01 = cross_difference_quotient(phi.f(0), phi.f(1));
    BiForm q02 = cross_difference_quotient(phi.f(0), phi.f(2));
    BiForm q12 = cross_difference_quotient(phi.f(1), phi.f(2));

    BinaryForm res_gcd = BinaryForm::zero(0);
    bool have = false;
    auto take = [&](const BiForm& a, const BiForm& b) {
        if (a.is_zero() || b.is_zero()) return;
        BinaryForm r = resultant_uv(a, b);
        if (r.is_zero()) return;
        res_gcd = have ? gcd(res_gcd, r) : monic(r);
        have = true;
    };
    for (const auto& [a, b] : combination_schedule(q01, q02, q12)) take(a, b);
    for (int k = 4; !have && k < 64; ++k)
        take(add_scaled(q01, q02, k), add_scaled(q01, q12, k + 1));
    if (!have) throw InternalError("all combination resultants vanish");

    BinaryForm A = gcd({phi.f(0).ds() * phi.f(1).dt() - phi.f(1).ds() * phi.f(0).dt(),
                        phi.f(0).ds() * phi.f(2).dt() - phi.f(2).ds() * phi.f(0).dt(),
                        phi.f(1).ds() * phi.f(2).dt() - phi.f(2).ds() * phi.f(1).dt()});
    BinaryForm T = res_gcd.degree() > 0 ? squarefree_part(res_gcd)
                                        : BinaryForm::monomial(0, 0);
    if (A.degree() > 0) T = squarefree_part(T * squarefree_part(A));

    BiForm g = gcd_over_st(gcd_over_st(q01, q02), q12);
    return {std::move(q01), std::move(q02), std::move(q12), std::move(T), std::move(g)};
}

BinaryForm pullback_polynomial(const Parametrization& phi, const ProjPoint2& p) {
    // the three forms c_y x - c_x y, c_z x - c_x z, c_z y - c_y z through P;
    // first two nonzero independent ones, composed with phi
    Rational cx(p.x), cy(p.y), cz(p.z);
    struct Line {
        Rational a, b, c;
    };
    std::vector<Line> lines = {{cy, -cx, Rational(0)},
                               {cz, Rational(0), -cx},
                               {Rational(0), cz, -cy}};
    std::vector<Line> nz;
    for (const auto& l : lines)
        if (l.a != 0 || l.b != 0 || l.c != 0) nz.push_back(l);
    auto independent = [](const Line& l1, const Line& l2) {
        return l1.a * l2.b != l1.b * l2.a || l1.a * l2.c != l1.c * l2.a ||
               l1.b * l2.c != l1.c * l2.b;
    };
    for (std::size_t i = 0; i < nz.size(); ++i)
        for (std::size_t j = i + 1; j < nz.size(); ++j) {
            if (!independent(nz[i], nz[j])) continue;
            BinaryForm c1 = phi.f(0) * nz[i].a + phi.f(1) * nz[i].b + phi.f(2) * nz[i].c;
            BinaryForm c2 = phi.f(0) * nz[j].a + phi.f(1) * nz[j].b + phi.f(2) * nz[j].c;
            if (c1.is_zero() || c2.is_zero())
                throw InternalError("line composition vanished identically");
            return gcd(c1, c2);
        }
    throw InternalError("no independent line pair through " + p.str());
}

namespace {

// ------------------------------------------------------------------
// shared fiber scanning helpers

qp::QPoly newton_interpolate(const std::vector<Rational>& xs, std::vector<Rational> vals) {
    const int n = static_cast<int>(xs.size()) - 1;
    for (int level = 1; level <= n; ++level)
        for (int k = n; k >= level; --k)
            vals[k] = (vals[k] - vals[k - 1]) / (xs[k] - xs[k - level]);
    qp::QPoly p;
    for (int k = n; k >= 0; --k) p = qp::add(qp::mul(p, {-xs[k], Rational(1)}), {vals[k]});
    return p;
}

// characteristic values of y on the packet: Res_x(m, lambda - y(x)) as a
// polynomial in lambda, by interpolation on lambda = 0..deg m
qp::QPoly char_values(const qp::QPoly& m, const qp::QPoly& y) {
    const int n = qp::deg(m);
    const int dy = qp::deg(y);
    std::vector<Rational> xs(n + 1), vals(n + 1);
    for (int i = 0; i <= n; ++i) {
        xs[i] = i;
        qp::QPoly g = qp::sub({Rational(i)}, y);
        QMatrix syl(n + dy, n + dy);
        for (int r = 0; r < dy; ++r)
            for (int j = 0; j <= n; ++j) syl.at(r, r + j) = m[n - j];
        for (int r = 0; r < n; ++r)
            for (int j = 0; j <= dy; ++j)
                syl.at(dy + r, r + j) =
                    (dy - j) < static_cast<int>(g.size()) ? g[dy - j] : Rational(0);
        vals[i] = syl.det();
    }
    return newton_interpolate(xs, std::move(vals));
}

// Extract the rational points reached by the parameters of the squarefree
// modulus w (t = 1 chart, no rational roots). Splits w as needed; pieces that
// land on non-rational points are collected into residual.
void refine_packet(const Parametrization& phi, const qp::QPoly& w,
                   std::vector<ProjPoint2>& points, std::vector<qp::QPoly>& residual) {
    std::vector<qp::QPoly> work{qp::monic(w)};
    while (!work.empty()) {
        qp::QPoly m = std::move(work.back());
        work.pop_back();
        try {
            d5::Field K(m);
            std::array<qp::QPoly, 3> y;
            int pivot = -1;
            qp::QPoly pivinv;
            for (int i = 0; i < 3 && pivot < 0; ++i) {
                qp::QPoly c = K.reduce(phi.f(i).at_t1());
                if (!qp::is_zero(c)) {
                    pivinv = K.inv(c); // may split
                    pivot = i;
                }
            }
            if (pivot < 0) throw InternalError("all coordinates vanish on a fiber packet");
            bool rational_point = true;
            for (int i = 0; i < 3; ++i) {
                y[i] = (i == pivot) ? qp::QPoly{Rational(1)}
                                    : K.mul(K.reduce(phi.f(i).at_t1()), pivinv);
                if (qp::deg(y[i]) > 0) rational_point = false;
            }
            if (rational_point) {
                points.push_back(normalize_point(qp::is_zero(y[0]) ? Rational(0) : y[0][0],
                                                 qp::is_zero(y[1]) ? Rational(0) : y[1][0],
                                                 qp::is_zero(y[2]) ? Rational(0) : y[2][0]));
                continue;
            }
            // split at the rational characteristic values of the first
            // algebraic coordinate, if any
            qp::QPoly yv;
            for (int i = 0; i < 3; ++i)
                if (qp::deg(y[i]) > 0) {
                    yv = y[i];
                    break;
                }
            bool split_found = false;
            for (const auto& [c, mult] : qp::rational_roots(char_values(K.modulus(), yv))) {
                qp::QPoly g = qp::gcd(K.modulus(), qp::sub(yv, {c}));
                if (qp::deg(g) >= 1 && qp::deg(g) < K.degree()) {
                    work.push_back(g);
                    work.push_back(qp::divmod(K.modulus(), g).first);
                    split_found = true;
                    break;
                }
            }
            if (!split_found) residual.push_back(K.modulus());
        } catch (const d5::Split& s) {
            qp::QPoly mm = qp::monic(m);
            work.push_back(s.factor);
            work.push_back(qp::divmod(mm, s.factor).first);
        }
    }
}

std::string kform_str(const d5::KForm& f) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) os << ", ";
        if (qp::is_zero(f[i])) {
            os << "0";
        } else {
            os << "(";
            for (std::size_t j = 0; j < f[i].size(); ++j) {
                if (j) os << " + ";
                os << to_string(f[i][j]);
                if (j == 1) os << "*th";
                if (j > 1) os << "*th^" << j;
            }
            os << ")";
        }
    }
    os << "]";
    return os.str();
}

// partner detection at a rational parameter (a:b): gcd over Q of the three
// specializations, diagonal factor removed, positive leftover degree means
// another point of the fiber exists
std::optional<std::string> rational_partner(const Parametrization& phi, const FiberData& fd,
                                            const ProjPoint1& par) {
    Rational a(par.a), b(par.b);
    std::vector<BinaryForm> spec = {fd.q01.specialize_st(a, b), fd.q02.specialize_st(a, b),
                                    fd.q12.specialize_st(a, b)};
    std::vector<BinaryForm> nz;
    for (auto& f : spec)
        if (!f.is_zero()) nz.push_back(f);
    if (nz.empty()) throw InternalError("all identification forms vanish at a parameter");
    BinaryForm g = gcd(nz);
    BinaryForm diag = vanishing_line(par);
    while (divides(diag, g)) g = divide_exact(g, diag);
    if (g.degree() < 1) return std::nullopt;
    // a verified witness: prefer an explicit rational second parameter
    for (const auto& [q, mult] : rational_roots(g)) {
        if (q == par) continue;
        ProjPoint2 p1 = phi.image(par);
        ProjPoint2 p2 = phi.image(q);
        if (!(p1 == p2)) throw InternalError("partner fails phi(a) = phi(b)");
        std::ostringstream os;
        os << "phi(" << par.a.get_str() << ":" << par.b.get_str() << ") = phi("
           << q.a.get_str() << ":" << q.b.get_str() << ") = " << p1.str();
        return os.str();
    }
    std::ostringstream os;
    os << "parameter (" << par.a.get_str() << ":" << par.b.get_str()
       << ") shares its image with the roots of " << g.str("u", "v");
    return os.str();
}

// partner detection over a conjugate packet w (t = 1 chart): returns a
// description when some root of w has a second preimage
std::optional<std::string> packet_partner(const FiberData& fd, const qp::QPoly& w) {
    std::optional<std::string> found;
    d5::for_each_branch(qp::monic(w), [&](const d5::Field& K) {
        if (found) return;
        qp::QPoly theta = K.generator();
        auto spec = [&](const BiForm& q) {
            d5::KForm f;
            auto coeffs = q.uv_coefficients();
            f.reserve(coeffs.size());
            for (int j = 0; j <= q.udeg(); ++j) f.push_back(K.reduce(coeffs[j].at_t1()));
            return f;
        };
        d5::KForm g01 = spec(fd.q01), g02 = spec(fd.q02), g12 = spec(fd.q12);
        std::vector<d5::KForm> nz;
        for (auto* f : {&g01, &g02, &g12})
            if (!d5::kform_is_zero(*f)) nz.push_back(*f);
        if (nz.empty()) throw InternalError("all identification forms vanish on a packet");
        d5::KForm g = nz[0];
        for (std::size_t i = 1; i < nz.size(); ++i) g = d5::kform_gcd(K, g, nz[i]);
        auto [rest, diag_power] = d5::strip_linear_factor(K, g, theta);
        if (d5::kform_degree(rest) >= 1 && !d5::kform_is_zero(rest)) {
            std::ostringstream os;
            os << "on a degree-" << K.degree()
               << " branch: residual identification form " << kform_str(rest)
               << " in (u, v) after removing (u - th*v)^" << diag_power;
            found = os.str();
        }
    });
    return found;
}

struct TSplit {
    std::vector<ProjPoint1> rational_parameters;
    std::vector<std::pair<BinaryForm, qp::QPoly>> conjugate_factors; // form and t=1 chart
};

TSplit split_support(const BinaryForm& T) {
    TSplit out;
    if (T.degree() == 0) return out;
    BinaryForm rest = T;
    for (const auto& [par, mult] : rational_roots(T)) {
        out.rational_parameters.push_back(par);
        rest = divide_exact(rest, vanishing_line(par));
    }
    if (rest.degree() > 0)
        for (const auto& [w, mult] : squarefree_decomposition(rest))
            out.conjugate_factors.emplace_back(w, qp::monic(w.at_t1()));
    return out;
}

} // namespace

SingularLocus singular_points(const Parametrization& phi) {
    FiberData fd = qforms(phi);
    SingularLocus out;
    out.residual_support = BinaryForm::monomial(0, 0);

    TSplit ts = split_support(fd.T);
    std::vector<ProjPoint2> candidates;
    for (const auto& par : ts.rational_parameters) candidates.push_back(phi.image(par));

    std::vector<qp::QPoly> residual_packets;
    for (const auto& [w, chart] : ts.conjugate_factors)
        refine_packet(phi, chart, candidates, residual_packets);

    std::map<ProjPoint2, bool> seen;
    for (const auto& p : candidates) {
        if (seen.count(p)) continue;
        seen[p] = true;
        BinaryForm h = pullback_polynomial(phi, p);
        if (h.degree() < 2) continue;
        SingularPoint sp;
        sp.point = p;
        sp.H = h;
        sp.m = h.degree();
        auto sqf = squarefree_decomposition(h);
        sp.r = 0;
        for (const auto& [f, mult] : sqf) sp.r += f.degree();
        for (const auto& [f, mult] : sqf)
            for (int i = 0; i < f.degree(); ++i) sp.branch_mults.push_back(mult);
        std::sort(sp.branch_mults.begin(), sp.branch_mults.end());
        out.points.push_back(std::move(sp));
    }
    std::sort(out.points.begin(), out.points.end(),
              [](const SingularPoint& a, const SingularPoint& b) { return a.point < b.point; });

    for (const auto& w : residual_packets) {
        BinaryForm f = primitive_positive(BinaryForm::homogenize(w, qp::deg(w)));
        out.residual_support = out.residual_support * f;
    }
    out.residual_support = primitive_positive(out.residual_support);

    // completeness: the ramification ledger must balance, and no residual
    // packet may hide an identification at a non-rational point
    auto minors = jacobian_minors(phi);
    int degA = gcd({minors[0], minors[1], minors[2]}).degree();
    int found = 0;
    for (const auto& sp : out.points) found += sp.m - sp.r;
    bool hidden = false;
    for (const auto& w : residual_packets)
        if (packet_partner(fd, w)) {
            hidden = true;
            break;
        }
    out.complete = (found == degA) && !hidden;
    return out;
}

CuspidalityVerdict cuspidality(const Parametrization& phi, int degree_cap) {
    FiberData fd = qforms(phi);
    CuspidalityVerdict verdict{Cuspidality::Cuspidal, std::nullopt, ""};
    if (fd.T.degree() == 0) {
        verdict.diagnostics = "no identification parameters; every fiber is a single point";
        return verdict;
    }
    TSplit ts = split_support(fd.T);
    for (const auto& par : ts.rational_parameters) {
        auto partner = rational_partner(phi, fd, par);
        if (partner) {
            verdict.status = Cuspidality::NotCuspidal;
            verdict.witness = CuspidalWitness{vanishing_line(par), *partner};
            verdict.diagnostics = "off-diagonal identification at a rational parameter";
            return verdict;
        }
    }
    for (const auto& [w, chart] : ts.conjugate_factors) {
        if (w.degree() > degree_cap) {
            verdict.status = Cuspidality::Incomplete;
            verdict.diagnostics =
                "factor " + w.str() + " exceeds the degree cap " + std::to_string(degree_cap);
            return verdict;
        }
        auto partner = packet_partner(fd, chart);
        if (partner) {
            verdict.status = Cuspidality::NotCuspidal;
            verdict.witness = CuspidalWitness{w, *partner};
            verdict.diagnostics = "off-diagonal identification inside a conjugate packet";
            return verdict;
        }
    }
    verdict.diagnostics = "every identification factor contributes only diagonal fibers";
    return verdict;
}

bool mk_rank_test(const Parametrization& phi, const BinaryForm& H) {
    const int d = phi.degree();
    const int k = H.degree();
    if (H.is_zero()) throw InvalidInput("mk_rank_test with zero form");
    if (k < 1 || k > d - 1) throw InvalidInput("mk_rank_test needs 1 <= deg H <= d-1");
    QMatrix m(d + 1, d - k + 4);
    for (int c = 0; c <= d - k; ++c)
        for (int i = 0; i <= k; ++i) m.at(c + i, c) = H.coeff(i);
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i <= d; ++i) m.at(i, d - k + 1 + j) = phi.f(j).coeff(i);
    return (d - k + 4) - m.rank() >= 2;
}

} // namespace ratcurve
