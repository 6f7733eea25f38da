#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ratcurve/errors.hpp"
#include "ratcurve/report.hpp"

using namespace ratcurve;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitImproper = 3;
constexpr int kExitInconsistent = 4;

struct CommonOpts {
    std::string input;
    bool text = false;
    bool deep = false;
    bool skip_dual = false;
    int max_q = -1;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("input", o.input, "curve file (JSON with f0, f1, f2 coefficient arrays)")
        ->required();
    cmd->add_flag("--text", o.text, "human-readable output instead of JSON");
    bool ignored = false;
    cmd->add_flag("--json", ignored, "JSON output (default)");
    cmd->add_flag("--deep", o.deep, "add tilde-kernel checks at q = 2d-2 and 2d");
    cmd->add_flag("--skip-dual", o.skip_dual, "skip the dual / discriminant pipeline");
    cmd->add_option("--max-q", o.max_q, "length of the reported a(q) sequence");
}

void emit(const ordered_json& o, bool text_requested, const std::string& text) {
    if (text_requested)
        std::cout << text;
    else
        std::cout << o.dump(2) << "\n";
}

ordered_json bf_json(const BinaryForm& f) {
    ordered_json a = ordered_json::array();
    for (const auto& c : f.coeffs()) a.push_back(to_string(c));
    return a;
}

int run(int argc, char** argv) {
    CLI::App app{"invariants of rational plane curves from a parametrization"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string point_arg;
    int forms_q = -1;

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "full pipeline with cross-checks");
    add_common(analyze_cmd, o);
    CLI::App* implicitize_cmd = app.add_subcommand("implicitize", "implicit equation F");
    add_common(implicitize_cmd, o);
    CLI::App* dual_cmd = app.add_subcommand("dual", "dual curve data");
    add_common(dual_cmd, o);
    CLI::App* tjurina_cmd = app.add_subcommand("tjurina", "global Tjurina number and delta");
    add_common(tjurina_cmd, o);
    CLI::App* freeness_cmd = app.add_subcommand("freeness", "free / nearly free verdict");
    add_common(freeness_cmd, o);
    CLI::App* pullback_cmd = app.add_subcommand("pullback", "pull-back polynomial of a point");
    add_common(pullback_cmd, o);
    pullback_cmd->add_option("--point", point_arg, "point a,b,c in P^2")->required();
    CLI::App* mubasis_cmd = app.add_subcommand("mubasis", "mu-basis of the parametrization");
    add_common(mubasis_cmd, o);
    CLI::App* cuspidal_cmd = app.add_subcommand("cuspidal", "cuspidality decision");
    add_common(cuspidal_cmd, o);
    CLI::App* forms_cmd = app.add_subcommand("forms", "cokernel dimensions and a(q) at one q");
    add_common(forms_cmd, o);
    forms_cmd->add_option("--q", forms_q, "form degree")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitInvalidInput : kExitOk;
    }

    try {
        Parametrization phi = parse_curve_file(o.input);
        const int d = phi.degree();

        if (analyze_cmd->parsed()) {
            AnalyzeOptions ao{o.deep, o.skip_dual, o.max_q};
            CurveReport rep = analyze(phi, ao);
            if (o.text)
                std::cout << report_to_text(rep);
            else
                std::cout << report_to_json(rep);
            return rep.all_checks_pass() ? kExitOk : kExitInconsistent;
        }
        if (implicitize_cmd->parsed()) {
            ImplicitCurve ic = implicit_equation(phi);
            ordered_json j;
            j["degree"] = ic.F.degree();
            j["F"] = ic.F.str();
            emit(j, o.text, "F = " + ic.F.str() + "\n");
            return kExitOk;
        }
        if (dual_cmd->parsed()) {
            int e = properness_degree(phi);
            if (e > 1) throw ImproperParametrization(e);
            SingularLocus locus = singular_points(phi);
            DualData dd = discriminant_factorization(phi, locus.points);
            ordered_json j;
            j["deg_A"] = dd.A.degree();
            j["A"] = dd.A.str();
            j["phi_dual"] = ordered_json::array(
                {dd.phi_dual[0].str(), dd.phi_dual[1].str(), dd.phi_dual[2].str()});
            j["deg_F_dual"] = dd.F_dual.degree();
            j["F_dual"] = dd.F_dual.str("u", "v");
            ordered_json lines = ordered_json::array();
            for (const auto& lf : dd.lines)
                lines.push_back({{"line", lf.line.str("u", "v")},
                                 {"exponent", lf.exponent},
                                 {"point", lf.point.str()}});
            j["lines"] = lines;
            j["residual"] = dd.residual.str("u", "v");
            std::ostringstream text;
            text << "phi_dual = (" << dd.phi_dual[0].str() << ", " << dd.phi_dual[1].str()
                 << ", " << dd.phi_dual[2].str() << ")\nF_dual = " << dd.F_dual.str("u", "v")
                 << "\n";
            emit(j, o.text, text.str());
            return kExitOk;
        }
        if (tjurina_cmd->parsed()) {
            int e = properness_degree(phi);
            if (e > 1) throw ImproperParametrization(e);
            ordered_json j;
            if (d >= 3) {
                auto [tau, delta] = tjurina_delta(phi);
                j["tau"] = tau;
                j["delta"] = delta;
                emit(j, o.text,
                     "tau = " + std::to_string(tau) + ", delta = " + std::to_string(delta) + "\n");
            } else {
                j["tau"] = 0;
                j["delta"] = 0;
                emit(j, o.text, "tau = 0, delta = 0 (smooth conic)\n");
            }
            return kExitOk;
        }
        if (freeness_cmd->parsed()) {
            int e = properness_degree(phi);
            if (e > 1) throw ImproperParametrization(e);
            if (d < 3) throw InvalidInput("freeness verdict needs d >= 3");
            InvariantReport iv = freeness_verdict(phi);
            ordered_json j;
            j["verdict"] = freeness_name(iv.verdict);
            j["mdr"] = iv.mdr;
            if (iv.verdict != Freeness::Neither) {
                j["d1"] = iv.d1;
                j["d2"] = iv.d2;
            }
            j["tau"] = iv.tau;
            j["tau_dr"] = iv.tau_dr;
            std::ostringstream text;
            text << freeness_name(iv.verdict);
            if (iv.verdict != Freeness::Neither) text << "(" << iv.d1 << ", " << iv.d2 << ")";
            text << ", mdr = " << iv.mdr << "\n";
            emit(j, o.text, text.str());
            return kExitOk;
        }
        if (pullback_cmd->parsed()) {
            auto comma1 = point_arg.find(',');
            auto comma2 = point_arg.find(',', comma1 + 1);
            if (comma1 == std::string::npos || comma2 == std::string::npos)
                throw InvalidInput("--point expects a,b,c");
            ProjPoint2 p = normalize_point(parse_rational(point_arg.substr(0, comma1)),
                                           parse_rational(point_arg.substr(comma1 + 1, comma2 - comma1 - 1)),
                                           parse_rational(point_arg.substr(comma2 + 1)));
            BinaryForm h = pullback_polynomial(phi, p);
            ordered_json j;
            j["point"] = p.str();
            j["pullback"] = h.str();
            j["degree"] = h.degree();
            j["on_curve"] = h.degree() > 0;
            emit(j, o.text, h.str() + "\n");
            return kExitOk;
        }
        if (mubasis_cmd->parsed()) {
            MuBasis mb = mu_basis(phi);
            ordered_json j;
            j["mu"] = ordered_json::array({mb.mu1, mb.mu2});
            j["p"] = ordered_json::array({bf_json(mb.p[0]), bf_json(mb.p[1]), bf_json(mb.p[2])});
            j["q"] = ordered_json::array({bf_json(mb.q[0]), bf_json(mb.q[1]), bf_json(mb.q[2])});
            std::ostringstream text;
            text << "mu = (" << mb.mu1 << ", " << mb.mu2 << ")\n"
                 << "p = (" << mb.p[0].str() << ", " << mb.p[1].str() << ", " << mb.p[2].str()
                 << ")\n"
                 << "q = (" << mb.q[0].str() << ", " << mb.q[1].str() << ", " << mb.q[2].str()
                 << ")\n";
            emit(j, o.text, text.str());
            return kExitOk;
        }
        if (cuspidal_cmd->parsed()) {
            int e = properness_degree(phi);
            if (e > 1) throw ImproperParametrization(e);
            CuspidalityVerdict cv = cuspidality(phi);
            ordered_json j;
            j["status"] = cv.status == Cuspidality::Cuspidal
                              ? "cuspidal"
                              : (cv.status == Cuspidality::NotCuspidal ? "not_cuspidal"
                                                                       : "incomplete");
            if (cv.witness)
                j["witness"] = {{"factor", cv.witness->factor.str()},
                                {"partner", cv.witness->partner}};
            else
                j["witness"] = nullptr;
            j["diagnostics"] = cv.diagnostics;
            emit(j, o.text, std::string(j["status"].get<std::string>()) + "\n");
            return kExitOk;
        }
        if (forms_cmd->parsed()) {
            int e = properness_degree(phi);
            if (e > 1) throw ImproperParametrization(e);
            if (forms_q < 2) throw InvalidInput("forms needs --q >= 2");
            auto c = coker_dims(phi, forms_q);
            FormMapMatrices fm = form_matrices(phi, forms_q + 2);
            int aq = fm.m2.cols() - fm.m2.rank();
            ordered_json j;
            j["q"] = forms_q;
            j["coker"] = ordered_json::array({c[0], c[1], c[2]});
            j["a"] = aq;
            std::ostringstream text;
            text << "q = " << forms_q << ": coker = (" << c[0] << ", " << c[1] << ", " << c[2]
                 << "), a(" << forms_q << ") = " << aq << "\n";
            emit(j, o.text, text.str());
            return kExitOk;
        }
        throw InvalidInput("no subcommand");
    } catch (const ImproperParametrization& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitImproper;
    } catch (const InvalidInput& e) {
        std::cerr << "error: invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const InternalError& e) {
        std::cerr << "error: internal inconsistency: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInconsistent;
    }
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
