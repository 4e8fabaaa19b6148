// End-to-end acceptance gate: one pass/fail line per criterion, nonzero exit
// on any failure. Reference constants are double-precision anchors for the
// mu=1, a=5, b=0 configuration.

#include "swe/characteristics.hpp"
#include "swe/connection.hpp"
#include "swe/oracle.hpp"
#include "swe/params.hpp"
#include "swe/pdecheck.hpp"
#include "swe/rng.hpp"
#include "swe/rootfind.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

using namespace swe;

namespace {

constexpr double kLambda0Ref = -0.8417200168449013;
constexpr double kT0Ref = 0.2793371978706399;
constexpr double kGamma2Ref = 8.7417666942941543;
constexpr double kLambdaRef = -5.2736106330552739;

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok, double measured) {
    std::printf("%s criterion %d: %s (measured %.3e)\n", ok ? "PASS" : "FAIL", criterion,
                what.c_str(), measured);
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main() {
    const ModeOrder m1(1.0);

    // 1. refined root of Theta on the surface for mu=1, a=5, b=0
    auto clock1 = std::chrono::steady_clock::now();
    auto f = [&](double lam) { return theta_on_surface(m1, 5.0, 0.0, lam); };
    const auto scan = scan_brackets(f, -0.9, -0.8, 0.05);
    double lambda0 = 0.0;
    bool root_ok = false;
    if (!scan.brackets.empty()) {
        lambda0 = refine_root(f, scan.brackets[0]).root;
        root_ok = std::fabs(lambda0 - kLambda0Ref) <= 1e-9;
    }
    root_ok = root_ok && seconds_since(clock1) <= 5.0;
    report(1, "refined root matches the reference within 1e-9",
           root_ok, std::fabs(lambda0 - kLambda0Ref));

    // 2. characteristic trace to the eigenvalue
    auto clock2 = std::chrono::steady_clock::now();
    const TraceResult tr = trace_to_eigenvalue(m1, 5.0, 0.0, lambda0);
    const bool t0_ok = std::fabs(tr.t0 - kT0Ref) <= 1e-7;
    const bool g2_ok = std::fabs(tr.gamma2 - kGamma2Ref) <= 1e-6 * std::fabs(kGamma2Ref);
    const bool lam_ok = std::fabs(tr.lambda - kLambdaRef) <= 1e-6 * std::fabs(kLambdaRef);
    const bool time2_ok = seconds_since(clock2) <= 5.0;
    report(2, "trace reproduces t0, gamma^2 and lambda", t0_ok && g2_ok && lam_ok && time2_ok,
           std::fabs(tr.t0 - kT0Ref));

    // 3. closed form gamma^2 = a e^{2 t0}
    const double g2_closed = 5.0 * std::exp(2.0 * tr.t0);
    const double rel3 = std::fabs(g2_closed - tr.gamma2) / tr.gamma2;
    const double rel3_ref = std::fabs(5.0 * std::exp(2.0 * kT0Ref) - kGamma2Ref) / kGamma2Ref;
    report(3, "gamma^2 equals a*e^{2 t0} to 1e-10 relative", rel3 <= 1e-10 && rel3_ref <= 1e-10,
           rel3);

    // 4. independent Legendre-matrix eigenvalues
    OracleSpec spec;
    spec.mu = 1.0;
    spec.gamma2 = kGamma2Ref;
    spec.beta = 0.0;
    spec.truncation = 80;
    spec.n_modes = 5;
    const OracleResult orc = oracle_eigenvalues(spec);
    double best4 = 1e30;
    for (const double lam : orc.lambdas) best4 = std::min(best4, std::fabs(lam - kLambdaRef));
    OracleSpec leg;
    leg.mu = 1.0;
    leg.truncation = 60;
    leg.n_modes = 4;
    const OracleResult lr = oracle_eigenvalues(leg);
    bool legendre_ok = true;
    for (int n = 0; n < 4; ++n) {
        const double expect = (1.0 + n) * (2.0 + n);
        legendre_ok = legendre_ok &&
                      std::fabs(lr.lambdas[static_cast<size_t>(n)] - expect) <= 1e-12;
    }
    report(4, "oracle contains the traced eigenvalue and the Legendre limit",
           best4 <= 1e-6 && legendre_ok, best4);

    // 5. deformation identities on 1000 random samples each
    auto clock5 = std::chrono::steady_clock::now();
    SplitMix64 rng5(42);
    double worst5 = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const ModeOrder m(rng5.uniform(0.0, 3.0));
        const ParamVec u{rng5.uniform(-5.0, 5.0), rng5.uniform(-5.0, 5.0),
                         rng5.uniform(-5.0, 5.0)};
        const auto c = deformation_residual(m, u, rng5.uniform(-5.0, 5.0),
                                            rng5.uniform(0.01, 0.99));
        worst5 = std::max(worst5, c.residual.max_abs() / c.scale);
        const SpheroidalChart ch{rng5.uniform(-0.95, 0.95), rng5.uniform(0.05, 5.0),
                                 rng5.uniform(-5.0, 5.0)};
        const auto hc = hat_deformation_residual(m, ch, rng5.uniform(0.01, 0.99));
        worst5 = std::max(worst5, hc.residual.max_abs() / hc.scale);
    }
    report(5, "both deformation identities hold to scaled 1e-11",
           worst5 <= 1e-11 && seconds_since(clock5) <= 1.0, worst5);

    // 6. conservation laws: Psi grows like e^t on the full system, vanishes on
    // the reduced one
    CharState init6;
    init6.u1 = 0.1;
    init6.u3 = 1.0;
    init6.lambda = -1.0; // psi(0) = -0.1; trajectory exists on [-1, 1]
    const double psi0 = eval_psi(m1, {init6.u1, init6.u2, init6.u3}, init6.lambda);
    double worst6 = 0.0;
    for (const double dir : {1.0, -1.0}) {
        for (const auto& s : integrate(m1, CharSystem::full, init6, 1e-3, dir)) {
            const double psi = eval_psi(m1, {s.u1, s.u2, s.u3}, s.lambda);
            worst6 = std::max(worst6, std::fabs(psi / psi0 - std::exp(s.t)));
        }
    }
    const bool psi_red_ok = tr.psi_drift_max <= 1e-9;
    report(6, "Psi(t)/Psi(0)=e^t on the full system, Psi=0 on the reduced one",
           worst6 <= 1e-8 && psi_red_ok, std::max(worst6, tr.psi_drift_max));

    // 7. dual-method Theta agreement
    SplitMix64 rng7(42);
    double worst7 = 0.0;
    for (int i = 0; i < 100; ++i) {
        const ModeOrder m(rng7.uniform(0.0, 3.0));
        const ParamVec u{rng7.uniform(-3.0, 3.0), rng7.uniform(-3.0, 3.0),
                         rng7.uniform(-3.0, 3.0)};
        const double lam = rng7.uniform(-3.0, 3.0);
        const auto a = theta_limit(m, u, lam, 1e-12);
        const auto b = theta_frobenius(m, u, lam, 1e-12);
        worst7 = std::max(worst7,
                          std::fabs(a.theta - b.theta) /
                              std::max(1e-9, 1e-9 * std::fabs(b.theta)));
    }
    const ParamVec ua{5.0, 0.0, 4.0 * kLambda0Ref};
    const auto a7 = theta_limit(m1, ua, kLambda0Ref, 1e-12);
    const auto b7 = theta_frobenius(m1, ua, kLambda0Ref, 1e-12);
    const bool appendix7 = std::fabs(a7.theta - b7.theta) <= 1e-9;
    report(7, "series and three-term recursion agree within max(1e-9, 1e-9*|Theta|)",
           worst7 <= 1.0 && appendix7, worst7);

    // 8. empirical convergence rate -(mu+2)
    bool rate_ok = true;
    double worst8 = 0.0;
    for (const double mu : {0.0, 1.0, 2.0}) {
        const double slope = convergence_order(ModeOrder(mu), {1.0, 0.5, 0.3}, 0.2, 200, 2000);
        const double dev = std::fabs(slope + mu + 2.0);
        worst8 = std::max(worst8, dev);
        rate_ok = rate_ok && dev <= 0.3;
    }
    report(8, "log-error slope within 0.3 of -(mu+2) for mu in {0,1,2}", rate_ok, worst8);

    // 9. second-order decay of the finite-difference PDE residuals
    const ResidualReport qp = qpde_residual(m1, ua, kLambda0Ref, 1e-3);
    BurgersChart seed9;
    seed9.t = 0.5 * std::log(5.0);
    seed9.omega = kLambda0Ref * std::sqrt(5.0) + std::sqrt(5.0);
    const ResidualReport sp = spde_residual(m1, seed9, 1e-3);
    const bool ratio_ok = qp.order_estimate >= 2.5 && qp.order_estimate <= 6.0 &&
                          sp.order_estimate >= 2.5 && sp.order_estimate <= 6.0;
    report(9, "residual(h)/residual(h/2) in [2.5, 6] for both eigenvalue PDEs", ratio_ok,
           qp.order_estimate);

    // 10. reduced and full characteristic systems coincide with reconstructed u3
    CharState init10;
    init10.u1 = 5.0;
    init10.lambda = lambda0;
    init10.u3 = lambda0 * (5.0 - 1.0);
    const auto red = integrate(m1, CharSystem::reduced, init10, 1e-3, tr.t0);
    const auto gen = integrate(m1, CharSystem::full, init10, 1e-3, tr.t0);
    double worst10 = 0.0;
    for (size_t i = 0; i < std::min(red.size(), gen.size()); ++i)
        worst10 = std::max({worst10, std::fabs(red[i].u1 - gen[i].u1),
                            std::fabs(red[i].u2 - gen[i].u2),
                            std::fabs(red[i].u3 - gen[i].u3),
                            std::fabs(red[i].lambda - gen[i].lambda)});
    report(10, "reduced and full trajectories agree within 1e-8 over [0, t0]",
           red.size() == gen.size() && worst10 <= 1e-8, worst10);

    if (g_failures == 0) std::printf("ALL CRITERIA PASSED\n");
    return g_failures == 0 ? 0 : 1;
}
