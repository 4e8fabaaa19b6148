#pragma once

#include "swe/params.hpp"
#include "swe/types.hpp"

#include <array>
#include <string>

namespace swe {

// Numerical verification of the algebraic and differential identities behind
// the eigenvalue PDEs: the two deformation equations (exact matrix identities)
// and finite-difference residuals of the quasilinear PDEs on locally continued
// eigenvalue surfaces.

struct PdeCoefficients {
    double f1 = 0.0, f2 = 0.0, f3 = 0.0, g = 0.0;
};

struct HatPdeCoefficients {
    double f1_hat = 0.0, f2_hat = 0.0, g_hat = 0.0;
};

PdeCoefficients qpde_coefficients(const ModeOrder& mode, const ParamVec& u, double Lambda);
HatPdeCoefficients rpde_coefficients(const ModeOrder& mode, const SpheroidalChart& c);

struct DeformationCheck {
    Matrix2 residual;
    /// Largest entry magnitude among the summed terms, for scaled comparisons.
    double scale = 0.0;
};

/// dG/dz + (Lambda W + H) J G - G J (Lambda W + H) - sum_k f_k dH/du_k - g W.
DeformationCheck deformation_residual(const ModeOrder& mode, const ParamVec& u,
                                      double Lambda, double z);

/// Same check for the (v1, v2) system with G^, H^, f^, g^.
DeformationCheck hat_deformation_residual(const ModeOrder& mode, const SpheroidalChart& c,
                                          double z);

struct SurfaceStencil {
    ParamVec center;
    double h = 0.0;
    double lambda_center = 0.0;
    std::array<double, 3> lambda_minus{}; // at center - h*e_i
    std::array<double, 3> lambda_plus{};  // at center + h*e_i
};

/// Seven-point eigenvalue stencil on one analytic branch, each point solved by
/// continuation of Theta(., u) = 0 from the neighboring eigenvalue. Throws
/// BranchLoss when continuation fails or the root is not isolated.
SurfaceStencil local_surface(const ModeOrder& mode, const ParamVec& center,
                             double Lambda_seed, double h);

struct ResidualReport {
    double max_abs_residual = 0.0;
    std::string grid_spec;
    /// Residual ratio between the h and h/2 runs; close to 4 for a
    /// second-order stencil.
    double order_estimate = 0.0;
};

/// Central-difference residual of f1 L_u1 + f2 L_u2 + f3 L_u3 - g on the
/// continued surface around `center`.
ResidualReport qpde_residual(const ModeOrder& mode, const ParamVec& center,
                             double Lambda_seed, double h);

/// Central-difference residual of w_t + 2 w w_u - forcing on the eigenvalue
/// surface in the (t, u) chart; the seed chart supplies the starting branch
/// through its omega value.
ResidualReport spde_residual(const ModeOrder& mode, const BurgersChart& seed, double h);

/// Forcing term f(s, u) of the Burgers form with s = 2t.
double burgers_forcing(const ModeOrder& mode, const BurgersChart& b);

/// Eigenvalue branch value omega(t, u) solved by continuation from lambda_seed;
/// used by spde_residual and exposed for chart-consistency checks.
double omega_on_surface(const ModeOrder& mode, double t, double u, double lambda_seed);

} // namespace swe
