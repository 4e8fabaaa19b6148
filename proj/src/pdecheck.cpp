#include "swe/pdecheck.hpp"

#include "swe/connection.hpp"

#include <cmath>
#include <cstdio>

namespace swe {

namespace {

constexpr double kContinuationFtol = 1e-12;
constexpr double kIsolationProbe = 0.05;

double theta_at(const ModeOrder& mode, const ParamVec& u, double Lambda) {
    // tighter series tolerance than the library default: finite-difference
    // stencils divide by h^2, so the eigenvalue itself must sit at the
    // round-off floor
    const ThetaResult r = theta_limit(mode, u, Lambda, 3e-14);
    if (!r.converged)
        throw NoConvergence("pdecheck: Theta series did not converge", r.theta, r.k_used);
    return r.theta;
}

/// Secant continuation of Theta(., u) = 0 from a nearby seed, polished until
/// the residual stops improving.
double continue_root(const ModeOrder& mode, const ParamVec& u, double seed) {
    double x0 = seed;
    double x1 = seed + std::max(1e-7, 1e-7 * std::fabs(seed));
    double f0 = theta_at(mode, u, x0);
    double f1 = theta_at(mode, u, x1);
    if (f0 == 0.0) {
        // guard against a non-isolated zero line
        if (std::fabs(theta_at(mode, u, seed + kIsolationProbe)) <= kContinuationFtol &&
            std::fabs(theta_at(mode, u, seed - kIsolationProbe)) <= kContinuationFtol)
            throw BranchLoss("continue_root: Theta vanishes on a neighborhood, root not isolated");
        return x0;
    }

    double best_x = std::fabs(f0) < std::fabs(f1) ? x0 : x1;
    double best_f = std::min(std::fabs(f0), std::fabs(f1));
    int stalled = 0;
    for (int it = 0; it < 80; ++it) {
        const double denom = f1 - f0;
        if (denom == 0.0) break;
        const double x2 = x1 - f1 * (x1 - x0) / denom;
        if (!std::isfinite(x2)) break;
        x0 = x1; f0 = f1;
        x1 = x2; f1 = theta_at(mode, u, x1);
        if (std::fabs(f1) < best_f) {
            best_f = std::fabs(f1);
            best_x = x1;
            stalled = 0;
        } else if (++stalled >= 2) {
            break; // round-off floor reached
        }
    }
    if (best_f > kContinuationFtol)
        throw BranchLoss("continue_root: secant continuation failed to converge");
    if (std::fabs(best_x - seed) > 0.5)
        throw BranchLoss("continue_root: converged far from the seed branch");
    return best_x;
}

} // namespace

PdeCoefficients qpde_coefficients(const ModeOrder& mode, const ParamVec& u, double Lambda) {
    const double mu = mode.mu;
    const double q = u.u1 + u.u2 * u.u2;
    PdeCoefficients c;
    c.f1 = 2.0 * u.u1;
    c.f2 = (Lambda + 2.0) * q + Lambda + u.u2 + u.u3;
    c.f3 = (2.0 * Lambda + u.u3 + 2.0) * (2.0 * Lambda * u.u2 - 2.0 * mu - 1.0) -
           2.0 * (mu + 1.0) * q + 2.0 * mu;
    c.g = (1.0 + 2.0 * mu - 2.0 * Lambda * u.u2) * (Lambda + 2.0) - 2.0 * mu;
    return c;
}

HatPdeCoefficients rpde_coefficients(const ModeOrder& mode, const SpheroidalChart& c) {
    HatPdeCoefficients h;
    h.f1_hat = (c.zeta + c.v2) * (1.0 - c.v1 * c.v1);
    h.f2_hat = (c.zeta * c.v1 + c.v1 * c.v2 + 0.5) * c.v2;
    h.g_hat = 4.0 * mode.alpha * mode.alpha * c.v1 * (1.0 - c.v1 * c.v1) -
              c.zeta * c.v1 * c.v2;
    return h;
}

DeformationCheck deformation_residual(const ModeOrder& mode, const ParamVec& u,
                                      double Lambda, double z) {
    const Matrix2 w = eval_w(z);
    const Matrix2 j = eval_j();
    const Matrix2 h = eval_h(mode, u, z);
    const Matrix2 g = eval_g(mode, u, Lambda, z);
    const Matrix2 lwh = Lambda * w + h;

    const Matrix2 dg_dz = {2.0, 2.0 * u.u2, 2.0 * u.u2, 2.0 * (u.u1 + u.u2 * u.u2)};
    const Matrix2 dh_du1 = {0.0, 0.0, 0.0, 2.0};
    const Matrix2 dh_du2 = {0.0, 2.0, 2.0, 4.0 * u.u2};
    const Matrix2 dh_du3 = {0.0, 0.0, 0.0, 1.0 / z};

    const PdeCoefficients c = qpde_coefficients(mode, u, Lambda);

    const Matrix2 commutator = lwh * j * g - g * j * lwh;
    const Matrix2 rhs = c.f1 * dh_du1 + c.f2 * dh_du2 + c.f3 * dh_du3 + c.g * w;

    DeformationCheck out;
    out.residual = dg_dz + commutator - rhs;
    out.scale = std::max({dg_dz.max_abs(), commutator.max_abs(), rhs.max_abs(), 1.0});
    return out;
}

DeformationCheck hat_deformation_residual(const ModeOrder& mode, const SpheroidalChart& c,
                                          double z) {
    if (!(std::fabs(c.v1) < 1.0 && c.v2 > 0.0))
        throw DomainError("hat_deformation_residual: invalid chart");
    const Matrix2 w = eval_w(z);
    const Matrix2 j = eval_j();
    const Matrix2 hh = eval_h_hat(mode, c, z);
    const Matrix2 gh = eval_g_hat(mode, c, z);
    const Matrix2 zwh = c.zeta * w + hh;

    const Matrix2 dg_dz = {c.v2, c.v1 * c.v2, c.v1 * c.v2, c.v2};
    const double m1 = mode.mu + 1.0;
    const Matrix2 dh_dv1 = {m1 / (1.0 - z), 2.0 * c.v2, 2.0 * c.v2, -m1 / z};
    const Matrix2 dh_dv2 = {2.0, 2.0 * c.v1, 2.0 * c.v1, 2.0};

    const HatPdeCoefficients f = rpde_coefficients(mode, c);

    const Matrix2 commutator = zwh * j * gh - gh * j * zwh;
    const Matrix2 rhs = f.f1_hat * dh_dv1 + f.f2_hat * dh_dv2 + f.g_hat * w;

    DeformationCheck out;
    out.residual = dg_dz + commutator - rhs;
    out.scale = std::max({dg_dz.max_abs(), commutator.max_abs(), rhs.max_abs(), 1.0});
    return out;
}

SurfaceStencil local_surface(const ModeOrder& mode, const ParamVec& center,
                             double Lambda_seed, double h) {
    if (!(h > 0.0)) throw DomainError("local_surface: need h > 0");

    SurfaceStencil st;
    st.center = center;
    st.h = h;
    st.lambda_center = continue_root(mode, center, Lambda_seed);
    for (int i = 0; i < 3; ++i) {
        ParamVec up = center, um = center;
        (i == 0 ? up.u1 : i == 1 ? up.u2 : up.u3) += h;
        (i == 0 ? um.u1 : i == 1 ? um.u2 : um.u3) -= h;
        st.lambda_plus[static_cast<size_t>(i)] = continue_root(mode, up, st.lambda_center);
        st.lambda_minus[static_cast<size_t>(i)] = continue_root(mode, um, st.lambda_center);
    }
    return st;
}

namespace {

double qpde_residual_at(const ModeOrder& mode, const ParamVec& center,
                        double Lambda_seed, double h) {
    const SurfaceStencil st = local_surface(mode, center, Lambda_seed, h);
    const PdeCoefficients c = qpde_coefficients(mode, center, st.lambda_center);
    const double d1 = (st.lambda_plus[0] - st.lambda_minus[0]) / (2.0 * h);
    const double d2 = (st.lambda_plus[1] - st.lambda_minus[1]) / (2.0 * h);
    const double d3 = (st.lambda_plus[2] - st.lambda_minus[2]) / (2.0 * h);
    return c.f1 * d1 + c.f2 * d2 + c.f3 * d3 - c.g;
}

} // namespace

ResidualReport qpde_residual(const ModeOrder& mode, const ParamVec& center,
                             double Lambda_seed, double h) {
    const double r_h = qpde_residual_at(mode, center, Lambda_seed, h);
    const double r_h2 = qpde_residual_at(mode, center, Lambda_seed, 0.5 * h);
    ResidualReport rep;
    rep.max_abs_residual = std::fabs(r_h);
    rep.order_estimate = r_h / r_h2;
    char spec[96];
    std::snprintf(spec, sizeof(spec), "7-point central stencil in (u1,u2,u3), h=%g and h/2", h);
    rep.grid_spec = spec;
    return rep;
}

double omega_on_surface(const ModeOrder& mode, double t, double u, double lambda_seed) {
    const double v1 = std::tanh(u);
    const double v2 = std::exp(t) * std::cosh(u);
    ParamVec p;
    p.u2 = v1 * v2;
    p.u1 = (1.0 - v1 * v1) * v2 * v2;
    // Theta along the Psi = 0 surface in Lambda
    auto theta_surface = [&](double lam) {
        ParamVec q = p;
        q.u3 = lam * (q.u1 + q.u2 * q.u2 - 1.0) - 2.0 * (mode.mu + 1.0) * q.u2;
        return theta_at(mode, q, lam);
    };
    double x0 = lambda_seed;
    double x1 = lambda_seed + 1e-7;
    double f0 = theta_surface(x0);
    double f1 = theta_surface(x1);
    double lam = std::fabs(f0) < std::fabs(f1) ? x0 : x1;
    double best_f = std::min(std::fabs(f0), std::fabs(f1));
    int stalled = 0;
    for (int it = 0; it < 80; ++it) {
        const double denom = f1 - f0;
        if (denom == 0.0) break;
        const double x2 = x1 - f1 * (x1 - x0) / denom;
        if (!std::isfinite(x2)) break;
        x0 = x1; f0 = f1;
        x1 = x2; f1 = theta_surface(x1);
        if (std::fabs(f1) < best_f) {
            best_f = std::fabs(f1);
            lam = x1;
            stalled = 0;
        } else if (++stalled >= 2) {
            break;
        }
    }
    if (best_f > kContinuationFtol) throw BranchLoss("omega_on_surface: continuation failed");
    const double zeta = lam * v2 - (mode.mu + 1.0) * v1;
    return zeta + v2;
}

namespace {

double spde_rhs(const ModeOrder& mode, double t, double u) {
    const double m1 = mode.mu + 1.0;
    return 2.0 * m1 * m1 * std::tanh(u) / (std::cosh(u) * std::cosh(u)) +
           std::exp(2.0 * t) * std::sinh(2.0 * u) + std::exp(t) * std::cosh(u);
}

double spde_residual_at(const ModeOrder& mode, double t, double u, double lam_seed,
                        double h) {
    const double w0 = omega_on_surface(mode, t, u, lam_seed);
    const double wt = (omega_on_surface(mode, t + h, u, lam_seed) -
                       omega_on_surface(mode, t - h, u, lam_seed)) /
                      (2.0 * h);
    const double wu = (omega_on_surface(mode, t, u + h, lam_seed) -
                       omega_on_surface(mode, t, u - h, lam_seed)) /
                      (2.0 * h);
    return wt + 2.0 * w0 * wu - spde_rhs(mode, t, u);
}

} // namespace

ResidualReport spde_residual(const ModeOrder& mode, const BurgersChart& seed, double h) {
    const SpheroidalChart c = from_burgers_chart(seed);
    const double lam_seed = (c.zeta + 2.0 * mode.alpha * c.v1) / c.v2;
    const double r_h = spde_residual_at(mode, seed.t, seed.u, lam_seed, h);
    const double r_h2 = spde_residual_at(mode, seed.t, seed.u, lam_seed, 0.5 * h);
    ResidualReport rep;
    rep.max_abs_residual = std::fabs(r_h);
    rep.order_estimate = r_h / r_h2;
    char spec[96];
    std::snprintf(spec, sizeof(spec), "5-point central stencil in (t,u), h=%g and h/2", h);
    rep.grid_spec = spec;
    return rep;
}

double burgers_forcing(const ModeOrder& mode, const BurgersChart& b) {
    const double s = 2.0 * b.t;
    const double m1 = mode.mu + 1.0;
    return m1 * m1 * std::tanh(b.u) / (std::cosh(b.u) * std::cosh(b.u)) +
           0.5 * std::exp(s) * std::sinh(2.0 * b.u) +
           0.5 * std::exp(0.5 * s) * std::cosh(b.u);
}

} // namespace swe
