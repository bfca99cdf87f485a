#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "p2omega/p2omega.hpp"

using namespace p2omega;

namespace {

enum Exit { kPass = 0, kCheckFailed = 1, kInputError = 2, kInvariantViolated = 3 };

struct RunConfig {
    std::string gv_path;
    std::string golden_path;
    std::string refined_path;
    int dmax = 0;
    std::string method = "functional";
    std::string checks = "all";
    int trunc = 40;
    std::string format = "text";
    std::string out;
};

const std::vector<std::string> kAllChecks = {"structure", "3d-divisibility", "leading", "next-to-leading", "hilbert-range",
                                             "xy-bounds", "gv-leading", "recursion", "routes", "refined"};

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw InputError("cannot write " + cfg.out);
    f << text;
}

std::vector<OmegaRecord> forward(const GVTable& gv, int dmax, const std::string& method) {
    if (method == "functional") return solve_omegas(gv, dmax, RhsMethod::Functional);
    if (method == "trees") return solve_omegas(gv, dmax, RhsMethod::Trees);
    if (method != "both") throw InputError("unknown method '" + method + "'");
    auto a = solve_omegas(gv, dmax, RhsMethod::Functional);
    auto b = solve_omegas(gv, dmax, RhsMethod::Trees);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i].omega == b[i].omega))
            throw NonPolynomialContribution("tree and functional routes disagree at d=" + std::to_string(a[i].d));
    return a;
}

int cmd_compute(const RunConfig& cfg) {
    if (cfg.gv_path.empty()) throw InputError("compute needs --gv");
    GVTable gv = io::load_gv(cfg.gv_path);
    const int dmax = cfg.dmax > 0 ? cfg.dmax : gv.max_degree();
    emit(cfg, io::render_records(forward(gv, dmax, cfg.method), io::parse_format(cfg.format)));
    return kPass;
}

int cmd_invert(const RunConfig& cfg) {
    if (cfg.golden_path.empty()) throw InputError("invert needs --golden");
    auto hats = io::load_golden(cfg.golden_path);
    if (cfg.dmax > 0) {
        if (cfg.dmax > static_cast<int>(hats.size())) throw InputError("golden file has fewer rows than --dmax");
        hats.resize(static_cast<std::size_t>(cfg.dmax));
    }
    GVTable gv = invert_to_gv(hats, cfg.method == "trees" ? RhsMethod::Trees : RhsMethod::Functional);
    const io::Format f = io::parse_format(cfg.format);
    std::ostringstream os;
    if (f == io::Format::Json) {
        os << io::gv_to_json(gv).dump(1) << "\n";
    } else {
        if (f == io::Format::Csv) os << "d,g,n\n";
        for (int d = 1; d <= gv.max_degree(); ++d)
            for (int g = 0; g <= GVTable::genus_bound(d); ++g) {
                if (f == io::Format::Csv) os << d << "," << g << "," << gv.get(g, d) << "\n";
                else os << "n_{" << g << "," << d << "} = " << gv.get(g, d) << "\n";
            }
    }
    emit(cfg, os.str());
    return kPass;
}

TruncatedCheckReport boolean_report(std::string name, int d, bool ok) {
    TruncatedCheckReport r;
    r.name = std::move(name);
    r.d = d;
    r.pass = ok;
    return r;
}

std::set<std::string> selected_checks(const std::string& spec) {
    std::set<std::string> s;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "all") {
            s.insert(kAllChecks.begin(), kAllChecks.end());
            continue;
        }
        if (std::find(kAllChecks.begin(), kAllChecks.end(), item) == kAllChecks.end())
            throw InputError("unknown check '" + item + "'");
        s.insert(item);
    }
    return s;
}

int cmd_verify(const RunConfig& cfg) {
    const auto checks = selected_checks(cfg.checks);
    std::vector<HalfLaurent> hats;
    std::optional<GVTable> gv;
    std::vector<TruncatedCheckReport> reps;

    if (!cfg.gv_path.empty()) gv = io::load_gv(cfg.gv_path);
    if (!cfg.golden_path.empty()) {
        hats = io::load_golden(cfg.golden_path);
        if (cfg.dmax > 0) {
            if (cfg.dmax > static_cast<int>(hats.size())) throw InputError("golden file has fewer rows than --dmax");
            hats.resize(static_cast<std::size_t>(cfg.dmax));
        }
    }
    if (hats.empty()) {
        if (!gv) throw InputError("verify needs --golden or --gv");
        for (const auto& r : forward(*gv, cfg.dmax > 0 ? cfg.dmax : gv->max_degree(), cfg.method)) hats.push_back(r.omega_hat);
    } else if (gv) {
        const int n = std::min(static_cast<int>(hats.size()), gv->max_degree());
        auto recs = forward(*gv, n, cfg.method);
        for (const auto& r : recs) {
            reps.push_back(boolean_report("golden agreement", r.d, r.omega_hat == hats[static_cast<std::size_t>(r.d - 1)]));
        }
    }
    const int dmax = static_cast<int>(hats.size());
    // hat-only checks must not depend on the inversion succeeding
    auto table = [&]() -> const GVTable& {
        if (!gv || gv->max_degree() < dmax) gv = invert_to_gv(hats);
        return *gv;
    };
    auto omega = [&](int d) { return omega_from_hat(d, hats[static_cast<std::size_t>(d - 1)]); };
    auto hat = [&](int d) { return hats[static_cast<std::size_t>(d - 1)]; };
    const PoincareTable ptable = PoincareTable::from_hats(hats);

    for (int d = 1; d <= dmax; ++d) {
        if (checks.count("structure")) {
            validate_omega(d, omega(d));
            const HalfLaurent p = poincare_from_hat(d, hat(d));
            const bool euler = omega(d).eval_at_one() == hat(d).eval_at_one() * GaussRat(3 * d) &&
                               p.eval_at_one() == hat(d).eval_at_one() * GaussRat(3 * d);
            reps.push_back(boolean_report("Euler characteristic", d, euler));
            reps.push_back(boolean_report("integral bracket", d, integrality_bracket(d, table(), omega(d))));
        }
        if (checks.count("3d-divisibility") && d % 3 == 0) {
            bool ok = true;
            try {
                exact_div(hat(d), HalfLaurent::from_y_coeffs(std::vector<long>{1, 1, 1}));
            } catch (const NotDivisible&) {
                ok = false;
            }
            reps.push_back(boolean_report("1+y+y^2 divides Omega-hat", d, ok));
        }
        if (checks.count("leading") && d >= 6) reps.push_back(leading_check(d, hat(d)));
        if (checks.count("next-to-leading") && d >= 4) reps.push_back(next_to_leading_check(d, hat(d)));
        if (checks.count("hilbert-range") && d >= 5) reps.push_back(hilbert_range_check(d, hat(d)));
        if (checks.count("xy-bounds")) {
            HalfLaurent x = x_d(d, table(), omega(d));
            if (d >= 6) y_d(d, table(), omega(d));
            bool ok = true;
            if (d == 1 || d == 2 || d == 4) ok = x.is_zero();
            if (d == 3) ok = x == -u_factor();
            reps.push_back(boolean_report("X/Y degree bounds", d, ok));
        }
        if (checks.count("gv-leading")) reps.push_back(gv_leading_check(d, table(), cfg.trunc));
        if (checks.count("recursion") && d >= 4) {
            reps.push_back(unrefined_recursion_check(d, 2, ptable));
            reps.push_back(recursion_range3_check(d, ptable));
        }
        if (checks.count("routes") && d >= 3) {
            GSolver g(d);
            reps.push_back(boolean_report("tree route = functional route", d, rhs_tree_sum(d, table()) == g.rhs_via_g(d, table())));
        }
    }
    if (checks.count("refined") && !cfg.refined_path.empty()) {
        const PoincareTable pref = io::load_refined(cfg.refined_path);
        for (int d = 1; d <= std::min(pref.max_degree(), dmax); ++d)
            if (pref.has(d))
                reps.push_back(boolean_report("refined specialization", d, !refined_specialization_mismatch(d, pref, ptable)));
        if (pref.has(1)) {
            // f^ref_1(s,s) = s^2 f_1(s^2)
            const int n = std::max(cfg.trunc, 4);
            auto fr = f_k_ref_extract(1, pref, n);
            auto f = f_k_extract(1, ptable, n);
            TwoVarSeries lhs = fr[1].diagonal();
            TwoVarSeries rhs = f[1].stretch2().truncate(n).shift(2);
            reps.push_back(compare_series("refined f_1 specialization", 1, lhs, rhs, n + 1));
        }
    }
    emit(cfg, io::render_reports(reps, io::parse_format(cfg.format)));
    for (const auto& r : reps)
        if (!r.pass) return kCheckFailed;
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Betti numbers of moduli of one-dimensional sheaves on P^2 from Gopakumar-Vafa invariants"};
    app.require_subcommand(1);
    RunConfig cfg;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--gv", cfg.gv_path, "GV table (JSON)");
        sub->add_option("--golden", cfg.golden_path, "Omega-hat rows (JSON)");
        sub->add_option("--dmax", cfg.dmax, "largest degree")->check(CLI::PositiveNumber);
        sub->add_option("--method", cfg.method, "trees|functional|both")
            ->check(CLI::IsMember({"trees", "functional", "both"}));
        sub->add_option("--format", cfg.format, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--out", cfg.out, "output path (default stdout)");
    };
    auto* compute = app.add_subcommand("compute", "GV table -> Omega_d and Omega-hat_d");
    add_common(compute);
    auto* invert = app.add_subcommand("invert", "Omega-hat rows -> GV table");
    add_common(invert);
    auto* verify = app.add_subcommand("verify", "run structural and asymptotic checks");
    add_common(verify);
    verify->add_option("--refined", cfg.refined_path, "refined Poincare polynomials (JSON)");
    verify->add_option("--check", cfg.checks, "comma-separated check names or 'all'");
    verify->add_option("--trunc", cfg.trunc, "series truncation order")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kInputError;
    }
    try {
        if (*compute) return cmd_compute(cfg);
        if (*invert) return cmd_invert(cfg);
        return cmd_verify(cfg);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const MissingGV& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const MissingRefinedData& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const UnsupportedGcd& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const NotDivisible& e) {
        std::cerr << "invariant violated: " << e.what() << "\n";
        return kInvariantViolated;
    } catch (const NegativeCoefficient& e) {
        std::cerr << "invariant violated: " << e.what() << "\n";
        return kInvariantViolated;
    } catch (const NonIntegerGV& e) {
        std::cerr << "invariant violated: " << e.what() << "\n";
        return kInvariantViolated;
    } catch (const DegreeBoundViolated& e) {
        std::cerr << "invariant violated: " << e.what() << "\n";
        return kInvariantViolated;
    } catch (const NonPolynomialContribution& e) {
        std::cerr << "invariant violated: " << e.what() << "\n";
        return kInvariantViolated;
    }
}
