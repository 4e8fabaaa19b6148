#pragma once

#include "swe/types.hpp"

namespace swe {

// Parameter maps between the physical CSWE parameters, the deformation
// parameters (u1,u2,u3), the spheroidal chart (v1,v2,zeta) and the Burgers
// chart (t,u,omega), plus evaluators for the 2x2 matrices of the underlying
// Hamiltonian system. All functions are pure.

struct UFromCswResult {
    ParamVec u;
    /// The CSWE correspondence lives on the Lambda = 0 slice.
    bool lambda_zero_correspondence = true;
};

UFromCswResult u_from_csw(const ModeOrder& mode, const CswParams& p);
CswParams csw_from_u(const ModeOrder& mode, const ParamVec& u);

/// Requires u1 + u2^2 > 0.
SpheroidalChart to_spheroidal_chart(const ModeOrder& mode, const ParamVec& u, double Lambda);

struct ULambda {
    ParamVec u;
    double Lambda = 0.0;
};

/// Inverse of to_spheroidal_chart on the beta = 0 surface: u3 is reconstructed
/// as Lambda*(u1+u2^2-1) - 2(mu+1)*u2.
ULambda from_spheroidal_chart(const ModeOrder& mode, const SpheroidalChart& c);

/// Requires |v1| < 1 and v2 > 0.
BurgersChart to_burgers_chart(const SpheroidalChart& c);
SpheroidalChart from_burgers_chart(const BurgersChart& b);

/// Psi = Lambda*(u1+u2^2-1) - 2(mu+1)*u2 - u3.
double eval_psi(const ModeOrder& mode, const ParamVec& u, double Lambda);

// Matrix evaluators; z must lie in the open interval (0,1).
Matrix2 eval_w(double z);
Matrix2 eval_j();
Matrix2 eval_h(const ModeOrder& mode, const ParamVec& u, double z);
Matrix2 eval_g(const ModeOrder& mode, const ParamVec& u, double Lambda, double z);
Matrix2 eval_h_hat(const ModeOrder& mode, const SpheroidalChart& c, double z);
Matrix2 eval_g_hat(const ModeOrder& mode, const SpheroidalChart& c, double z);
Matrix2 eval_phi(const ModeOrder& mode, const BurgersChart& b, double z);

} // namespace swe
