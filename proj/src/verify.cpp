#include "swe/verify.hpp"

#include "swe/connection.hpp"
#include "swe/params.hpp"
#include "swe/pdecheck.hpp"
#include "swe/rng.hpp"

#include <cmath>

namespace swe {

namespace {

double ulp_of(double x) {
    const double ax = std::fabs(x);
    return std::nextafter(std::max(ax, 1e-300), 1e308) - std::max(ax, 1e-300);
}

double ulps_apart(double a, double b, double scale) {
    return std::fabs(a - b) / ulp_of(scale);
}

} // namespace

std::vector<CheckResult> verify_deformation(std::uint64_t seed) {
    SplitMix64 rng(seed);
    double worst = 0.0, worst_hat = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const ModeOrder mode(rng.uniform(0.0, 3.0));
        const ParamVec u{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)};
        const double lam = rng.uniform(-5.0, 5.0);
        const double z = rng.uniform(0.01, 0.99);
        const DeformationCheck c = deformation_residual(mode, u, lam, z);
        worst = std::max(worst, c.residual.max_abs() / c.scale);

        const SpheroidalChart ch{rng.uniform(-0.95, 0.95), rng.uniform(0.05, 5.0),
                                 rng.uniform(-5.0, 5.0)};
        const DeformationCheck hc = hat_deformation_residual(mode, ch, z);
        worst_hat = std::max(worst_hat, hc.residual.max_abs() / hc.scale);
    }
    return {{"deformation-identity", worst <= 1e-11, worst, 1e-11},
            {"deformation-identity-hat", worst_hat <= 1e-11, worst_hat, 1e-11}};
}

std::vector<CheckResult> verify_charts(std::uint64_t seed) {
    SplitMix64 rng(seed);
    double worst_roundtrip = 0.0;
    double worst_psi = 0.0;
    double worst_phi = 0.0;
    double worst_sym = 0.0;

    for (int i = 0; i < 1000; ++i) {
        const ModeOrder mode(rng.uniform(0.0, 3.0));
        const ParamVec u{rng.uniform(0.1, 5.0), rng.uniform(-2.0, 2.0), rng.uniform(-3.0, 3.0)};
        const double lam = rng.uniform(-3.0, 3.0);

        // (u, Lambda) -> (v1, v2, zeta) -> (t, u, omega) and back
        const SpheroidalChart c = to_spheroidal_chart(mode, u, lam);
        const BurgersChart b = to_burgers_chart(c);
        const SpheroidalChart c2 = from_burgers_chart(b);
        const ULambda back = from_spheroidal_chart(mode, c2);

        const double s = u.u1 + u.u2 * u.u2;
        const double s2 = back.u.u1 + back.u.u2 * back.u.u2;
        worst_roundtrip = std::max(worst_roundtrip, ulps_apart(s, s2, s));
        worst_roundtrip = std::max(worst_roundtrip,
                                   ulps_apart(u.u2, back.u.u2, std::max(std::fabs(u.u2), 1.0)));
        const double lam_scale =
            std::max(std::fabs(lam), (std::fabs(lam) * s + (mode.mu + 1.0) * std::fabs(u.u2)) / s);
        worst_roundtrip = std::max(worst_roundtrip, ulps_apart(lam, back.Lambda, lam_scale));
        worst_roundtrip =
            std::max(worst_roundtrip, ulps_apart(c.v1, c2.v1, std::max(std::fabs(c.v1), 1.0)));
        worst_roundtrip = std::max(worst_roundtrip, ulps_apart(c.v2, c2.v2, c.v2));
        worst_roundtrip = std::max(
            worst_roundtrip,
            ulps_apart(c.zeta, c2.zeta, std::max(std::fabs(c.zeta), c.v2)));

        // Psi vanishes on the constrained surface
        ParamVec uc = u;
        uc.u3 = lam * (s - 1.0) - 2.0 * (mode.mu + 1.0) * u.u2;
        const double term_scale = std::max({std::fabs(lam * (s - 1.0)),
                                            2.0 * (mode.mu + 1.0) * std::fabs(u.u2),
                                            std::fabs(uc.u3)});
        worst_psi = std::max(worst_psi,
                             std::fabs(eval_psi(mode, uc, lam)) / (2.0 * ulp_of(term_scale)));

        // Phi == Hhat - v2 W, and symmetry of all evaluated matrices
        const double z = rng.uniform(0.01, 0.99);
        const Matrix2 phi = eval_phi(mode, b, z);
        const Matrix2 hh = eval_h_hat(mode, c, z);
        const Matrix2 diff = phi - (hh - c.v2 * eval_w(z));
        worst_phi = std::max(worst_phi, diff.max_abs() / std::max(1.0, hh.max_abs()));

        const Matrix2 h = eval_h(mode, u, z);
        const Matrix2 g = eval_g(mode, u, lam, z);
        const Matrix2 gh = eval_g_hat(mode, c, z);
        worst_sym = std::max({worst_sym, std::fabs(h.a12 - h.a21), std::fabs(g.a12 - g.a21),
                              std::fabs(hh.a12 - hh.a21), std::fabs(gh.a12 - gh.a21),
                              std::fabs(phi.a12 - phi.a21)});
    }

    return {{"chart-roundtrip-ulps", worst_roundtrip <= 4.0, worst_roundtrip, 4.0},
            {"psi-constrained-surface-ulps", worst_psi <= 1.0, worst_psi, 1.0},
            {"phi-hhat-identity", worst_phi <= 1e-13, worst_phi, 1e-13},
            {"matrix-symmetry", worst_sym == 0.0, worst_sym, 0.0}};
}

std::vector<CheckResult> verify_pde(std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<CheckResult> out;

    const ModeOrder mode(1.0);
    const double lambda0 = -0.8417200168449013;
    const ParamVec center{5.0, 0.0, 4.0 * lambda0};

    const ResidualReport qp = qpde_residual(mode, center, lambda0, 1e-3);
    out.push_back({"qpde-residual-order", qp.order_estimate >= 2.5 && qp.order_estimate <= 6.0,
                   qp.order_estimate, 4.0});

    BurgersChart bseed;
    bseed.t = 0.5 * std::log(5.0);
    bseed.u = 0.0;
    bseed.omega = lambda0 * std::sqrt(5.0) + std::sqrt(5.0); // zeta + v2 at v1 = 0
    const ResidualReport sp = spde_residual(mode, bseed, 1e-3);
    out.push_back({"spde-residual-order", sp.order_estimate >= 2.5 && sp.order_estimate <= 6.0,
                   sp.order_estimate, 4.0});

    // chain-rule identities behind the reduced PDE
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const ModeOrder m(rng.uniform(0.0, 3.0));
        const SpheroidalChart c{rng.uniform(-0.9, 0.9), rng.uniform(0.1, 4.0),
                                rng.uniform(-4.0, 4.0)};
        const BurgersChart b = to_burgers_chart(c);
        const HatPdeCoefficients f = rpde_coefficients(m, c);
        const double omega = c.zeta + c.v2;
        const double ch = std::cosh(b.u);
        const double lhs1 = 2.0 * omega / (ch * ch);
        const double lhs2 = std::exp(b.t) * ch + 2.0 * omega * std::exp(b.t) * std::sinh(b.u);
        worst = std::max(worst, std::fabs(lhs1 - 2.0 * f.f1_hat) / std::max(1.0, std::fabs(lhs1)));
        worst = std::max(worst, std::fabs(lhs2 - 2.0 * f.f2_hat) / std::max(1.0, std::fabs(lhs2)));

        // forcing of the Burgers form is half the (t,u) PDE right-hand side
        const double m1 = m.mu + 1.0;
        const double rhs_tu = 2.0 * m1 * m1 * std::tanh(b.u) / (ch * ch) +
                              std::exp(2.0 * b.t) * std::sinh(2.0 * b.u) + std::exp(b.t) * ch;
        worst = std::max(worst, std::fabs(burgers_forcing(m, b) - 0.5 * rhs_tu) /
                                    std::max(1.0, std::fabs(rhs_tu)));
    }
    out.push_back({"rpde-chain-rule-identities", worst <= 1e-12, worst, 1e-12});
    return out;
}

std::vector<CheckResult> verify_convergence(std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<CheckResult> out;

    for (const double mu : {0.0, 1.0, 2.0}) {
        const ModeOrder mode(mu);
        const ParamVec u{1.0, 0.5, 0.3};
        const double slope = convergence_order(mode, u, 0.2, 200, 2000);
        const double expected = -(mu + 2.0);
        const double dev = std::fabs(slope - expected);
        out.push_back({"convergence-slope-mu" + std::to_string(static_cast<int>(mu)),
                       dev <= 0.3, slope, expected});
    }

    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const ModeOrder mode(rng.uniform(0.0, 3.0));
        const ParamVec u{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
        const double lam = rng.uniform(-3.0, 3.0);
        const ThetaResult a = theta_limit(mode, u, lam, 1e-12);
        const ThetaResult b = theta_frobenius(mode, u, lam, 1e-12);
        const double tol = std::max(1e-9, 1e-9 * std::fabs(b.theta));
        worst = std::max(worst, std::fabs(a.theta - b.theta) / tol);
    }
    out.push_back({"dual-method-theta-agreement", worst <= 1.0, worst, 1.0});
    return out;
}

std::vector<CheckResult> verify_all(std::uint64_t seed) {
    std::vector<CheckResult> out;
    for (auto* suite : {&verify_deformation, &verify_charts, &verify_pde, &verify_convergence}) {
        auto r = (*suite)(seed);
        out.insert(out.end(), r.begin(), r.end());
    }
    return out;
}

} // namespace swe
