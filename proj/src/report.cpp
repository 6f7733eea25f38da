#include "ratcurve/report.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ratcurve/errors.hpp"

namespace ratcurve {

using ordered_json = nlohmann::ordered_json;

bool CurveReport::all_checks_pass() const {
    for (const auto& c : cross_checks)
        if (!c.pass) return false;
    return true;
}

namespace {

std::string istr(long v) { return std::to_string(v); }

void check_eq(std::vector<CrossCheck>& out, const std::string& name, const std::string& lhs,
              const std::string& rhs) {
    out.push_back({name, lhs == rhs, lhs, rhs});
}

void check_eq(std::vector<CrossCheck>& out, const std::string& name, long lhs, long rhs) {
    out.push_back({name, lhs == rhs, istr(lhs), istr(rhs)});
}

void check_true(std::vector<CrossCheck>& out, const std::string& name, bool ok,
                const std::string& lhs, const std::string& rhs) {
    out.push_back({name, ok, lhs, rhs});
}

} // namespace

CurveReport analyze(const Parametrization& phi, const AnalyzeOptions& opts) {
    CurveReport rep;
    const int d = phi.degree();
    rep.d = d;
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i <= d; ++i) rep.input[j].push_back(to_string(phi.f(j).coeff(i)));

    rep.e = properness_degree(phi);
    if (rep.e > 1) throw ImproperParametrization(rep.e);

    rep.mu = mu_basis(phi);
    ImplicitCurve ic = implicit_equation(phi);
    rep.F = ic.F;

    auto& checks = rep.cross_checks;
    check_eq(checks, "mu1 + mu2 = d", rep.mu.mu1 + rep.mu.mu2, d);
    check_eq(checks, "e * deg F = d", rep.e * rep.F.degree(), d);
    check_true(checks, "F(f0, f1, f2) = 0",
               compose(rep.F, phi.f(0), phi.f(1), phi.f(2)).is_zero(), "composition", "0");

    FiberData fd = qforms(phi);
    auto minors = jacobian_minors(phi);
    {
        bool diag_ok = true;
        const BiForm* qs[3] = {&fd.q01, &fd.q02, &fd.q12};
        for (int i = 0; i < 3; ++i) {
            BinaryForm lhs = qs[i]->diagonal() * Rational(d);
            if (!(lhs - minors[i]).is_zero()) diag_ok = false;
        }
        check_true(checks, "d * Q_ij(s,t;s,t) = m_ij", diag_ok, "diagonal restriction",
                   "jacobian minors");
    }

    rep.locus = singular_points(phi);
    rep.cusp = cuspidality(phi);

    int degA = 0;
    if (!opts.skip_dual) {
        rep.dual = discriminant_factorization(phi, rep.locus.points);
        degA = rep.dual->A.degree();
        check_eq(checks, "deg phi_dual = 2(d-1) - deg A", rep.dual->d_dual,
                 2 * (d - 1) - degA);
        check_true(checks, "F_dual(phi_dual) = 0",
                   compose(rep.dual->F_dual, rep.dual->phi_dual[0], rep.dual->phi_dual[1],
                           rep.dual->phi_dual[2])
                       .is_zero(),
                   "composition", "0");
        rep.gradient_dual = dual_via_gradient(phi, rep.F); // internally checks psi ~ phi_dual
        check_eq(checks, "deg h = (d-1)(d-2) + deg A", rep.gradient_dual->h.degree(),
                 (d - 1) * (d - 2) + degA);
        // D = c * F_dual * singular_lines with the lines already peeled off
        TernaryForm rebuilt = rep.dual->F_dual * rep.dual->residual;
        for (const auto& lf : rep.dual->lines)
            for (int k = 0; k < lf.exponent; ++k) rebuilt = rebuilt * lf.line;
        check_true(checks, "D = c * F_dual * singular_lines",
                   primitive_positive(rebuilt) == rep.dual->D, "rebuilt product",
                   "discriminant");
        int found = 0;
        for (const auto& sp : rep.locus.points) found += sp.m - sp.r;
        check_true(checks, "sum(m_P - r_P) <= deg A", found <= degA, istr(found), istr(degA));
        if (rep.locus.complete)
            check_eq(checks, "sum(m_P - r_P) = deg A (complete locus)", found, degA);
    }

    const int max_q = opts.max_q >= 0 ? opts.max_q : d;
    if (d >= 3) {
        auto [tau, delta] = tjurina_delta(phi);
        rep.tau = tau;
        rep.delta = delta;
        rep.a_seq = a_sequence(phi, max_q);
        InvariantReport iv = freeness_verdict(phi);
        rep.mdr = iv.mdr;
        rep.verdict = iv;
        rep.oracle = oracle_report(rep.F);

        check_eq(checks, "delta = (d-1)(d-2)/2", delta, (d - 1) * (d - 2) / 2);
        check_eq(checks, "tau (pull-back) = tau (Jacobian oracle)", tau, rep.oracle->tau);
        check_eq(checks, "mdr (pull-back) = mdr (Jacobian oracle)", iv.mdr, rep.oracle->mdr);
        check_eq(checks, "verdict (pull-back) = verdict (Jacobian oracle)",
                 freeness_name(iv.verdict), freeness_name(rep.oracle->verdict));
        if (iv.verdict != Freeness::Neither) {
            check_eq(checks, "exponent d1 agrees", iv.d1, rep.oracle->d1);
            check_eq(checks, "exponent d2 agrees", iv.d2, rep.oracle->d2);
        }
        {
            bool ok = true;
            std::ostringstream lhs, rhs;
            for (int q = 0; q <= std::min(max_q, d); ++q) {
                int want = static_cast<int>(binomial(q + 1, 2)) + ar_dim(rep.F, q);
                if (q) {
                    lhs << ",";
                    rhs << ",";
                }
                lhs << rep.a_seq[q];
                rhs << want;
                if (rep.a_seq[q] != want) ok = false;
            }
            check_true(checks, "a(q) = C(q+1,2) + dim AR(F)_q", ok, lhs.str(), rhs.str());
        }
        {
            bool ok = true;
            for (int k = 0; k <= d - 3; ++k)
                if (n_dim(rep.F, k, rep.oracle->tau) != 0) ok = false;
            check_true(checks, "N(F)_k = 0 for k <= d-3", ok, "N values", "0");
        }
        check_true(checks, "st(F) <= 2d-3", rep.oracle->st <= 2 * d - 3, istr(rep.oracle->st),
                   istr(2 * d - 3));

        if (opts.deep) {
            rep.tilde_2dm2 = tilde_kernel_dims(phi, rep.F, 2 * d - 2);
            rep.tilde_2d = tilde_kernel_dims(phi, rep.F, 2 * d);
            check_eq(checks, "tilde ker^1 at q = 2d-2 equals tau", rep.tilde_2dm2->first, tau);
            check_eq(checks, "tilde ker^2 at q = 2d equals 2 tau", rep.tilde_2d->second,
                     2 * tau);
        }
    } else {
        // smooth conic: tau = delta = 0, no verdict machinery
        rep.tau = 0;
        rep.delta = 0;
        if (max_q >= 2) rep.a_seq = a_sequence(phi, max_q);
        check_true(checks, "smooth conic is cuspidal vacuously",
                   rep.cusp.status == Cuspidality::Cuspidal, "status", "cuspidal");
    }
    return rep;
}

namespace {

ordered_json coeffs_json(const BinaryForm& f) {
    ordered_json a = ordered_json::array();
    for (const auto& c : f.coeffs()) a.push_back(to_string(c));
    return a;
}

ordered_json ternary_json(const TernaryForm& f) {
    ordered_json o;
    o["degree"] = f.degree();
    ordered_json terms = ordered_json::array();
    for (const auto& e : monomials_of_degree(f.degree())) {
        Rational c = f.coeff(e);
        if (c == 0) continue;
        terms.push_back(ordered_json::array({e[0], e[1], e[2], to_string(c)}));
    }
    o["terms"] = terms;
    o["text"] = f.str();
    return o;
}

ordered_json point_json(const ProjPoint2& p) {
    return ordered_json::array({p.x.get_str(), p.y.get_str(), p.z.get_str()});
}

const char* cusp_name(Cuspidality c) {
    switch (c) {
        case Cuspidality::Cuspidal: return "cuspidal";
        case Cuspidality::NotCuspidal: return "not_cuspidal";
        default: return "incomplete";
    }
}

} // namespace

std::string report_to_json(const CurveReport& r) {
    ordered_json o;
    o["input"] = {{"d", r.d},
                  {"f0", r.input[0]},
                  {"f1", r.input[1]},
                  {"f2", r.input[2]}};
    o["e"] = r.e;
    o["mu"] = ordered_json::array({r.mu.mu1, r.mu.mu2});
    o["F"] = ternary_json(r.F);
    o["tau"] = r.tau;
    o["delta"] = r.delta;
    if (r.mdr)
        o["mdr"] = *r.mdr;
    else
        o["mdr"] = nullptr;
    if (r.verdict) {
        ordered_json v;
        v["type"] = freeness_name(r.verdict->verdict);
        if (r.verdict->verdict != Freeness::Neither) {
            v["d1"] = r.verdict->d1;
            v["d2"] = r.verdict->d2;
        }
        v["tau_dr"] = r.verdict->tau_dr;
        v["mdr"] = r.verdict->mdr;
        o["verdict"] = v;
    } else {
        o["verdict"] = nullptr;
    }
    if (!r.a_seq.empty()) o["a_seq"] = r.a_seq;
    if (r.dual) {
        ordered_json dv;
        dv["deg_A"] = r.dual->A.degree();
        dv["A"] = coeffs_json(r.dual->A);
        dv["phi_dual"] = ordered_json::array({coeffs_json(r.dual->phi_dual[0]),
                                              coeffs_json(r.dual->phi_dual[1]),
                                              coeffs_json(r.dual->phi_dual[2])});
        dv["deg_F_dual"] = r.dual->F_dual.degree();
        dv["F_dual"] = ternary_json(r.dual->F_dual);
        ordered_json lines = ordered_json::array();
        for (const auto& lf : r.dual->lines) {
            ordered_json lo;
            lo["point"] = point_json(lf.point);
            lo["line"] = ternary_json(lf.line);
            lo["exponent"] = lf.exponent;
            lines.push_back(lo);
        }
        dv["lines"] = lines;
        dv["residual"] = ternary_json(r.dual->residual);
        o["dual"] = dv;
    }
    ordered_json pts = ordered_json::array();
    for (const auto& sp : r.locus.points) {
        ordered_json po;
        po["point"] = point_json(sp.point);
        po["H"] = coeffs_json(sp.H);
        po["H_text"] = sp.H.str();
        po["m"] = sp.m;
        po["r"] = sp.r;
        po["branch_mults"] = sp.branch_mults;
        pts.push_back(po);
    }
    o["singular_points"] = pts;
    o["singular_locus_complete"] = r.locus.complete;
    o["residual_support"] = coeffs_json(r.locus.residual_support);
    {
        ordered_json c;
        c["status"] = cusp_name(r.cusp.status);
        if (r.cusp.witness) {
            c["witness"] = {{"factor", r.cusp.witness->factor.str()},
                            {"partner", r.cusp.witness->partner}};
        } else {
            c["witness"] = nullptr;
        }
        c["diagnostics"] = r.cusp.diagnostics;
        o["cuspidality"] = c;
    }
    if (r.tilde_2dm2)
        o["tilde_kernels_2d_minus_2"] = ordered_json::array({r.tilde_2dm2->first, r.tilde_2dm2->second});
    if (r.tilde_2d)
        o["tilde_kernels_2d"] = ordered_json::array({r.tilde_2d->first, r.tilde_2d->second});
    ordered_json cc = ordered_json::array();
    for (const auto& c : r.cross_checks) {
        ordered_json co;
        co["name"] = c.name;
        co["pass"] = c.pass;
        co["lhs"] = c.lhs;
        co["rhs"] = c.rhs;
        cc.push_back(co);
    }
    o["cross_checks"] = cc;
    return o.dump(2) + "\n";
}

std::string report_to_text(const CurveReport& r) {
    std::ostringstream os;
    os << "degree d = " << r.d << ", properness e = " << r.e << "\n";
    os << "mu = (" << r.mu.mu1 << ", " << r.mu.mu2 << ")\n";
    os << "F = " << r.F.str() << "\n";
    os << "tau = " << r.tau << ", delta = " << r.delta;
    if (r.mdr) os << ", mdr = " << *r.mdr;
    os << "\n";
    if (r.verdict) {
        os << "verdict: " << freeness_name(r.verdict->verdict);
        if (r.verdict->verdict != Freeness::Neither)
            os << " (" << r.verdict->d1 << ", " << r.verdict->d2 << ")";
        os << ", tau(d, r) = " << r.verdict->tau_dr << "\n";
    } else {
        os << "verdict: smooth conic, freeness machinery skipped\n";
    }
    if (r.dual) {
        os << "dual: deg A = " << r.dual->A.degree() << ", phi_dual = ("
           << r.dual->phi_dual[0].str() << ", " << r.dual->phi_dual[1].str() << ", "
           << r.dual->phi_dual[2].str() << ")\n";
        os << "      F_dual (deg " << r.dual->F_dual.degree()
           << ") = " << r.dual->F_dual.str("u", "v") << "\n";
        for (const auto& lf : r.dual->lines)
            os << "      line " << lf.line.str("u", "v") << " ^ " << lf.exponent << " at "
               << lf.point.str() << "\n";
        if (r.dual->residual.degree() > 0)
            os << "      residual = " << r.dual->residual.str("u", "v") << "\n";
    }
    os << "singular points (" << (r.locus.complete ? "complete" : "incomplete") << "):\n";
    for (const auto& sp : r.locus.points) {
        os << "  " << sp.point.str() << ": H = " << sp.H.str() << ", m = " << sp.m
           << ", r = " << sp.r << ", branches (";
        for (std::size_t i = 0; i < sp.branch_mults.size(); ++i) {
            if (i) os << ", ";
            os << sp.branch_mults[i];
        }
        os << ")\n";
    }
    os << "cuspidality: " << cusp_name(r.cusp.status);
    if (r.cusp.witness) os << " [" << r.cusp.witness->partner << "]";
    os << "\n";
    if (!r.a_seq.empty()) {
        os << "a(q) = ";
        for (std::size_t i = 0; i < r.a_seq.size(); ++i) {
            if (i) os << ", ";
            os << r.a_seq[i];
        }
        os << "\n";
    }
    if (r.tilde_2dm2)
        os << "tilde kernels at 2d-2: (" << r.tilde_2dm2->first << ", " << r.tilde_2dm2->second
           << ")\n";
    if (r.tilde_2d)
        os << "tilde kernels at 2d: (" << r.tilde_2d->first << ", " << r.tilde_2d->second
           << ")\n";
    os << "cross checks:\n";
    for (const auto& c : r.cross_checks)
        os << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name << " (" << c.lhs << " vs "
           << c.rhs << ")\n";
    return os.str();
}

Parametrization parse_curve_json(const std::string& text) {
    ordered_json o;
    try {
        o = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw InvalidInput(std::string("bad JSON: ") + e.what());
    }
    std::array<std::vector<Rational>, 3> cs;
    const char* keys[3] = {"f0", "f1", "f2"};
    for (int j = 0; j < 3; ++j) {
        if (!o.contains(keys[j]) || !o[keys[j]].is_array())
            throw InvalidInput(std::string("missing coefficient array ") + keys[j]);
        for (const auto& v : o[keys[j]]) {
            if (v.is_string())
                cs[j].push_back(parse_rational(v.get<std::string>()));
            else if (v.is_number_integer())
                cs[j].push_back(Rational(v.get<long>()));
            else
                throw InvalidInput("coefficients must be strings or integers");
        }
        if (cs[j].empty()) throw InvalidInput(std::string("empty coefficient array ") + keys[j]);
    }
    if (cs[0].size() != cs[1].size() || cs[0].size() != cs[2].size())
        throw InvalidInput("coefficient arrays have different lengths");
    return Parametrization(BinaryForm(cs[0]), BinaryForm(cs[1]), BinaryForm(cs[2]));
}

Parametrization parse_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_curve_json(buf.str());
}

} // namespace ratcurve
