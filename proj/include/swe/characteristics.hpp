#pragma once

#include "swe/types.hpp"

#include <array>
#include <vector>

namespace swe {

// Characteristic ODE systems of the eigenvalue PDE. The full system evolves
// (u1, u2, u3, Lambda); the reduced system evolves (u1, u2, Lambda) on the
// Psi = 0 surface and reconstructs u3 = Lambda*(u1+u2^2-1) - 2(mu+1)*u2.

enum class CharSystem { full, reduced };

struct CharState {
    double t = 0.0;
    double u1 = 0.0;
    double u2 = 0.0;
    double lambda = 0.0;
    double u3 = 0.0;
};

/// (du1/dt, du2/dt, du3/dt, dLambda/dt) of the full system.
std::array<double, 4> rhs_gen_char(const ModeOrder& mode, const CharState& s);

/// (du1/dt, du2/dt, dLambda/dt) of the reduced system.
std::array<double, 3> rhs_red_char(const ModeOrder& mode, const CharState& s);

/// Classical fixed-step RK4. Negative t_max integrates backward. Throws Blowup
/// when any component exceeds 1e12 in magnitude.
std::vector<CharState> integrate(const ModeOrder& mode, CharSystem system,
                                 const CharState& init, double h, double t_max);

/// Non-throwing variant: characteristics can escape in finite time, so the
/// samples accumulated before the magnitude guard trips are kept. blew_up is
/// set and t_blowup holds the offending time when the trajectory escapes.
struct IntegrationRun {
    std::vector<CharState> samples;
    bool blew_up = false;
    double t_blowup = 0.0;
};

IntegrationRun integrate_partial(const ModeOrder& mode, CharSystem system,
                                 const CharState& init, double h, double t_max);

struct TraceResult {
    double t0 = 0.0;
    CharState state_at_t0;
    double gamma2 = 0.0;
    double lambda = 0.0;
    double psi_drift_max = 0.0;
    std::vector<CharState> samples;
};

struct TraceOptions {
    double h = 1e-3;
    double t_max = 1.0;
    /// When set, |Theta(Lambda(t), u(t))| <= 1e-6 is asserted every 50 samples
    /// to detect the characteristic leaving the eigenvalue branch.
    bool validate_on_surface = false;
};

/// Integrates the reduced system from (a, b, Lambda0), locates the first sign
/// change of Lambda (forward first, then backward), refines the crossing by
/// bisection on re-integration, and reports gamma^2 = u1(t0) and
/// lambda = (mu+1)(mu - 2 u2(t0)).
TraceResult trace_to_eigenvalue(const ModeOrder& mode, double a, double b,
                                double Lambda0, const TraceOptions& opts = {});

} // namespace swe
