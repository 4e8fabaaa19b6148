#pragma once

#include "swe/types.hpp"

namespace swe {

// Connection coefficient Theta(Lambda, u) of the Hamiltonian system, computed
// as the limit of the first component of the Floquet series coefficients d_k.
// Two independent routes are provided: the two-term (b_k, d_k) recurrence
// (series_*) and a three-term recursion obtained directly from the transformed
// first-order system (theta_frobenius). Zeros of Theta in Lambda are the
// eigenvalues of the system.

/// Recurrence state at index k. Lambda is fixed at initialization; the d-update
/// uses compensated accumulation, with the running error terms kept in d_comp.
struct SeriesState {
    long k = 0;
    Vec2 b;
    Vec2 d;
    Vec2 d_comp;
    double lambda = 0.0;

    double theta() const { return d.x; }
};

struct ThetaResult {
    double theta = 0.0;
    long k_used = 0;
    double tail_estimate = 0.0;
    bool converged = false;
};

inline constexpr double kDefaultThetaTol = 1e-13;
inline constexpr long kDefaultThetaKMax = 200000;

SeriesState series_init(const ModeOrder& mode, const ParamVec& u, double Lambda);

/// Advances the state from k to k+1.
SeriesState series_step(const ModeOrder& mode, const ParamVec& u, const SeriesState& s);

/// Iterates the (b_k, d_k) recurrence until the tail estimate drops below tol
/// on two consecutive steps, or k reaches k_max (converged flag cleared).
/// With richardson = true the returned theta is extrapolated assuming an error
/// model C * k^-(mu+2).
ThetaResult theta_limit(const ModeOrder& mode, const ParamVec& u, double Lambda,
                        double tol = kDefaultThetaTol, long k_max = kDefaultThetaKMax,
                        bool richardson = false);

/// Independent route: solves the three-term matrix recursion
///   (A0 - (k+alpha) I) d_k = (A0 + A1 - C - (k-1+alpha) I) d_{k-1} + C d_{k-2}
/// stepwise via the triangular structure of A0 - (k+alpha) I.
ThetaResult theta_frobenius(const ModeOrder& mode, const ParamVec& u, double Lambda,
                            double tol = kDefaultThetaTol, long k_max = kDefaultThetaKMax);

/// Least-squares slope of log|theta_k - theta_ref| against log k over
/// [k_lo, k_hi]; theta_ref is taken at a much larger index. Expected close to
/// -(mu+2). Requires k_hi >= 2*k_lo >= 200.
double convergence_order(const ModeOrder& mode, const ParamVec& u, double Lambda,
                         long k_lo, long k_hi);

} // namespace swe
