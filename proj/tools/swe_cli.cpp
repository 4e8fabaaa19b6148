// Command-line front end for the spheroidal eigenvalue toolkit.

#include "swe/characteristics.hpp"
#include "swe/connection.hpp"
#include "swe/oracle.hpp"
#include "swe/params.hpp"
#include "swe/pdecheck.hpp"
#include "swe/rootfind.hpp"
#include "swe/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNoRoot = 3;
constexpr int kExitNoCrossing = 4;
constexpr int kExitVerifyFailed = 5;

std::string num17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
    } else {
        std::ofstream os(path);
        if (!os) throw std::runtime_error("cannot open output file: " + path);
        os << content;
    }
}

struct ThetaArgs {
    double mu = 1.0, u1 = 0.0, u2 = 0.0, u3 = 0.0, lambda = 0.0;
    double tol = swe::kDefaultThetaTol;
    long kmax = swe::kDefaultThetaKMax;
    bool frobenius = false;
    bool richardson = false;
    std::string out;
};

int cmd_theta(const ThetaArgs& a) {
    const swe::ModeOrder mode(a.mu);
    const swe::ParamVec u{a.u1, a.u2, a.u3};
    const swe::ThetaResult r =
        a.frobenius ? swe::theta_frobenius(mode, u, a.lambda, a.tol, a.kmax)
                    : swe::theta_limit(mode, u, a.lambda, a.tol, a.kmax, a.richardson);
    std::ostringstream os;
    os << "{\"theta\":" << num17(r.theta) << ",\"k_used\":" << r.k_used
       << ",\"tail_estimate\":" << num17(r.tail_estimate)
       << ",\"converged\":" << (r.converged ? "true" : "false") << "}\n";
    write_output(a.out, os.str());
    return 0;
}

struct ScanArgs {
    double mu = 1.0, a = 5.0, b = 0.0;
    double lambda_min = -3.0, lambda_max = 1.0, step = 0.05;
    double tol = swe::kDefaultThetaTol;
    long kmax = swe::kDefaultThetaKMax;
    std::string out;
};

int cmd_theta_scan(const ScanArgs& a) {
    const swe::ModeOrder mode(a.mu);
    auto f = [&](double lam) -> double {
        try {
            return swe::theta_on_surface(mode, a.a, a.b, lam, a.tol, a.kmax);
        } catch (const swe::NoConvergence&) {
            std::cerr << "warning: series did not converge at lambda=" << num17(lam) << "\n";
            return std::nan("");
        }
    };
    const swe::ScanResult res = swe::scan_brackets(f, a.lambda_min, a.lambda_max, a.step);
    std::ostringstream os;
    os << "lambda,theta\n";
    for (const auto& [x, fx] : res.table)
        os << num17(x) << "," << (std::isnan(fx) ? std::string("nan") : num17(fx)) << "\n";
    write_output(a.out, os.str());
    return 0;
}

struct RootArgs {
    double mu = 1.0, a = 5.0, b = 0.0;
    double lambda_min = -3.0, lambda_max = 1.0, step = 0.05;
    double xtol = 1e-13, ftol = 1e-11;
    int max_iter = 100;
    std::string out;
};

std::vector<swe::RootResult> find_roots(const RootArgs& a) {
    const swe::ModeOrder mode(a.mu);
    auto f = [&](double lam) { return swe::theta_on_surface(mode, a.a, a.b, lam); };
    const swe::ScanResult scan = swe::scan_brackets(f, a.lambda_min, a.lambda_max, a.step);
    std::vector<swe::RootResult> roots;
    for (const swe::Bracket& br : scan.brackets)
        roots.push_back(swe::refine_root(f, br, a.xtol, a.ftol, a.max_iter));
    return roots;
}

int cmd_root(const RootArgs& a) {
    const std::vector<swe::RootResult> roots = find_roots(a);
    if (roots.empty()) {
        std::cerr << "error: no sign change of Theta in the scan window\n";
        return kExitNoRoot;
    }
    std::ostringstream os;
    os << "{\"n_roots\":" << roots.size() << ",\"roots\":[";
    for (size_t i = 0; i < roots.size(); ++i)
        os << (i ? "," : "") << num17(roots[i].root);
    os << "],\"residuals\":[";
    for (size_t i = 0; i < roots.size(); ++i)
        os << (i ? "," : "") << num17(roots[i].residual);
    os << "]}\n";
    write_output(a.out, os.str());
    return 0;
}

struct TraceArgs {
    double mu = 1.0, a = 5.0, b = 0.0, lambda0 = 0.0;
    double h = 1e-3, tmax = 1.0;
    std::string out;
};

int cmd_trace(const TraceArgs& a) {
    const swe::ModeOrder mode(a.mu);
    swe::CharState init;
    init.u1 = a.a;
    init.u2 = a.b;
    init.lambda = a.lambda0;
    init.u3 = a.lambda0 * (a.a + a.b * a.b - 1.0) - 2.0 * (mode.mu + 1.0) * a.b;
    const swe::IntegrationRun run =
        swe::integrate_partial(mode, swe::CharSystem::reduced, init, a.h, a.tmax);
    if (run.blew_up)
        std::cerr << "warning: trajectory escaped at t=" << num17(run.t_blowup)
                  << "; emitting the samples up to the magnitude guard\n";
    std::ostringstream os;
    os << "t,u1,u2,u3,lambda,psi\n";
    for (const swe::CharState& s : run.samples) {
        const double psi = swe::eval_psi(mode, {s.u1, s.u2, s.u3}, s.lambda);
        os << num17(s.t) << "," << num17(s.u1) << "," << num17(s.u2) << "," << num17(s.u3)
           << "," << num17(s.lambda) << "," << num17(psi) << "\n";
    }
    write_output(a.out, os.str());
    return 0;
}

struct EigenArgs {
    RootArgs root;
    double h = 1e-3, tmax = 1.0;
    int root_index = -1; // -1: largest root below zero
    std::string out;
};

int cmd_eigen(const EigenArgs& a) {
    const swe::ModeOrder mode(a.root.mu);
    const std::vector<swe::RootResult> roots = find_roots(a.root);
    if (roots.empty()) {
        std::cerr << "error: no root of Theta in the scan window\n";
        return kExitNoRoot;
    }
    const swe::RootResult* chosen = nullptr;
    if (a.root_index >= 0) {
        if (a.root_index >= static_cast<int>(roots.size())) {
            std::cerr << "error: --root-index out of range (" << roots.size() << " roots)\n";
            return kExitUsage;
        }
        chosen = &roots[static_cast<size_t>(a.root_index)];
    } else {
        // default: the branch that reaches Lambda = 0 first going forward
        for (const swe::RootResult& r : roots)
            if (r.root < 0.0 && (!chosen || r.root > chosen->root)) chosen = &r;
        if (!chosen) chosen = &roots.front();
    }

    swe::TraceOptions opts;
    opts.h = a.h;
    opts.t_max = a.tmax;
    swe::TraceResult tr;
    try {
        tr = swe::trace_to_eigenvalue(mode, a.root.a, a.root.b, chosen->root, opts);
    } catch (const swe::NoCrossing& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoCrossing;
    }

    bool oracle_match = false;
    try {
        swe::OracleSpec spec;
        spec.mu = mode.mu;
        spec.gamma2 = tr.gamma2;
        spec.beta = 0.0;
        spec.truncation = 80;
        spec.n_modes = 20;
        const swe::OracleResult orc = swe::oracle_eigenvalues(spec);
        for (double lam : orc.lambdas)
            if (std::fabs(lam - tr.lambda) <= 1e-6 * std::max(1.0, std::fabs(tr.lambda)))
                oracle_match = true;
    } catch (const std::exception& e) {
        std::cerr << "warning: oracle cross-check failed: " << e.what() << "\n";
    }

    std::ostringstream os;
    os << "{\"lambda0\":" << num17(chosen->root) << ",\"t0\":" << num17(tr.t0)
       << ",\"gamma2\":" << num17(tr.gamma2) << ",\"lambda\":" << num17(tr.lambda)
       << ",\"psi_drift_max\":" << num17(tr.psi_drift_max)
       << ",\"theta_residual_at_root\":" << num17(chosen->residual)
       << ",\"oracle_match\":" << (oracle_match ? "true" : "false") << "}\n";
    write_output(a.out, os.str());
    return 0;
}

struct OracleArgs {
    double mu = 1.0, gamma2 = 0.0, beta = 0.0;
    int truncation = 80, modes = 5;
    std::string out;
};

int cmd_oracle(const OracleArgs& a) {
    swe::OracleSpec spec;
    spec.mu = a.mu;
    spec.gamma2 = a.gamma2;
    spec.beta = a.beta;
    spec.truncation = a.truncation;
    spec.n_modes = a.modes;
    const swe::OracleResult r = swe::oracle_eigenvalues(spec);
    std::ostringstream os;
    os << "{\"lambdas\":[";
    for (size_t i = 0; i < r.lambdas.size(); ++i)
        os << (i ? "," : "") << num17(r.lambdas[i]);
    os << "],\"truncation_drift\":" << num17(r.truncation_drift) << "}\n";
    write_output(a.out, os.str());
    return 0;
}

struct VerifyArgs {
    std::string suite = "all";
    std::uint64_t seed = 42;
    std::string out;
};

int cmd_verify(const VerifyArgs& a) {
    std::vector<swe::CheckResult> checks;
    if (a.suite == "deformation") checks = swe::verify_deformation(a.seed);
    else if (a.suite == "charts") checks = swe::verify_charts(a.seed);
    else if (a.suite == "pde") checks = swe::verify_pde(a.seed);
    else if (a.suite == "convergence") checks = swe::verify_convergence(a.seed);
    else if (a.suite == "all") checks = swe::verify_all(a.seed);
    else {
        std::cerr << "error: unknown suite '" << a.suite << "'\n";
        return kExitUsage;
    }

    bool all_pass = true;
    std::ostringstream os;
    os << "{\"suite\":\"" << a.suite << "\",\"seed\":" << a.seed << ",\"checks\":[";
    for (size_t i = 0; i < checks.size(); ++i) {
        const swe::CheckResult& c = checks[i];
        all_pass = all_pass && c.pass;
        os << (i ? "," : "") << "{\"name\":\"" << c.name << "\",\"pass\":"
           << (c.pass ? "true" : "false") << ",\"residual\":" << num17(c.residual)
           << ",\"threshold\":" << num17(c.threshold) << "}";
    }
    os << "],\"pass\":" << (all_pass ? "true" : "false") << "}\n";
    write_output(a.out, os.str());
    return all_pass ? 0 : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Eigenvalues of the angular and Coulomb spheroidal wave equations via "
                 "connection coefficients and characteristic curves"};
    app.require_subcommand(1);
    // --h is the integrator step size, so help is long-form only
    app.set_help_flag("--help", "print usage");

    ThetaArgs ta;
    auto* theta = app.add_subcommand("theta", "Evaluate the connection coefficient Theta");
    theta->set_help_flag("--help", "print usage");
    theta->add_option("--mu", ta.mu, "order mu >= 0");
    theta->add_option("--u1", ta.u1);
    theta->add_option("--u2", ta.u2);
    theta->add_option("--u3", ta.u3);
    theta->add_option("--lambda", ta.lambda);
    theta->add_option("--tol", ta.tol);
    theta->add_option("--kmax", ta.kmax);
    theta->add_flag("--frobenius", ta.frobenius, "use the three-term recursion route");
    theta->add_flag("--richardson", ta.richardson, "Richardson-accelerate the series limit");
    theta->add_option("--out", ta.out, "output path (default stdout)");

    ScanArgs sa;
    auto* scan = app.add_subcommand("theta-scan",
                                    "Tabulate Theta(Lambda) on the Psi=0 surface as CSV");
    scan->set_help_flag("--help", "print usage");
    scan->add_option("--mu", sa.mu);
    scan->add_option("--a", sa.a, "u1(0)");
    scan->add_option("--b", sa.b, "u2(0)");
    scan->add_option("--lambda-min", sa.lambda_min);
    scan->add_option("--lambda-max", sa.lambda_max);
    scan->add_option("--step", sa.step);
    scan->add_option("--tol", sa.tol);
    scan->add_option("--kmax", sa.kmax);
    scan->add_option("--out", sa.out);

    RootArgs ra;
    auto* root = app.add_subcommand("root", "Find zeros of Theta on the Psi=0 surface");
    root->set_help_flag("--help", "print usage");
    root->add_option("--mu", ra.mu);
    root->add_option("--a", ra.a);
    root->add_option("--b", ra.b);
    root->add_option("--lambda-min", ra.lambda_min);
    root->add_option("--lambda-max", ra.lambda_max);
    root->add_option("--step", ra.step);
    root->add_option("--xtol", ra.xtol);
    root->add_option("--ftol", ra.ftol);
    root->add_option("--out", ra.out);

    TraceArgs tra;
    auto* trace = app.add_subcommand("trace", "Integrate the reduced characteristic system (CSV)");
    trace->set_help_flag("--help", "print usage");
    trace->add_option("--mu", tra.mu);
    trace->add_option("--a", tra.a);
    trace->add_option("--b", tra.b);
    trace->add_option("--lambda0", tra.lambda0)->required();
    trace->add_option("--h", tra.h);
    trace->add_option("--tmax", tra.tmax);
    trace->add_option("--out", tra.out);

    EigenArgs ea;
    auto* eigen = app.add_subcommand("eigen", "Full pipeline: scan, refine, trace, cross-check");
    eigen->set_help_flag("--help", "print usage");
    eigen->add_option("--mu", ea.root.mu);
    eigen->add_option("--a", ea.root.a);
    eigen->add_option("--b", ea.root.b);
    eigen->add_option("--lambda-min", ea.root.lambda_min);
    eigen->add_option("--lambda-max", ea.root.lambda_max);
    eigen->add_option("--step", ea.root.step);
    eigen->add_option("--h", ea.h);
    eigen->add_option("--tmax", ea.tmax);
    eigen->add_option("--root-index", ea.root_index,
                      "index into the ascending root list (default: largest root below 0)");
    eigen->add_option("--out", ea.out);

    OracleArgs oa;
    auto* oracle = app.add_subcommand("oracle", "Legendre-basis reference eigenvalues");
    oracle->set_help_flag("--help", "print usage");
    oracle->add_option("--mu", oa.mu);
    oracle->add_option("--gamma2", oa.gamma2);
    oracle->add_option("--beta", oa.beta);
    oracle->add_option("--N", oa.truncation, "basis truncation");
    oracle->add_option("--modes", oa.modes, "number of eigenvalues to report");
    oracle->add_option("--out", oa.out);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->set_help_flag("--help", "print usage");
    verify->add_option("--suite", va.suite, "deformation|pde|charts|convergence|all");
    verify->add_option("--seed", va.seed, "seed for the randomized checks");
    verify->add_option("--out", va.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : kExitUsage;
    }

    try {
        if (theta->parsed()) return cmd_theta(ta);
        if (scan->parsed()) return cmd_theta_scan(sa);
        if (root->parsed()) return cmd_root(ra);
        if (trace->parsed()) return cmd_trace(tra);
        if (eigen->parsed()) return cmd_eigen(ea);
        if (oracle->parsed()) return cmd_oracle(oa);
        if (verify->parsed()) return cmd_verify(va);
    } catch (const swe::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
