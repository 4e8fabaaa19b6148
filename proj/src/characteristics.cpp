#include "swe/characteristics.hpp"

#include "swe/connection.hpp"
#include "swe/params.hpp"

#include <cmath>

namespace swe {

namespace {

constexpr double kBlowupLimit = 1e12;
constexpr double kEventLambdaTol = 1e-12;

double reconstruct_u3(const ModeOrder& mode, double u1, double u2, double lambda) {
    return lambda * (u1 + u2 * u2 - 1.0) - 2.0 * (mode.mu + 1.0) * u2;
}

using Vec3 = std::array<double, 3>;
using Vec4 = std::array<double, 4>;

Vec3 red_rhs(const ModeOrder& mode, const Vec3& y) {
    const double u1 = y[0], u2 = y[1], lam = y[2];
    const double mu = mode.mu;
    return {2.0 * u1,
            2.0 * (lam + 1.0) * (u1 + u2 * u2) - (2.0 * mu + 1.0) * u2,
            (1.0 + 2.0 * mu - 2.0 * lam * u2) * (lam + 2.0) - 2.0 * mu};
}

Vec4 gen_rhs(const ModeOrder& mode, const Vec4& y) {
    const double u1 = y[0], u2 = y[1], u3 = y[2], lam = y[3];
    const double mu = mode.mu;
    const double q = u1 + u2 * u2;
    return {2.0 * u1,
            (lam + 2.0) * q + lam + u2 + u3,
            (2.0 * lam + u3 + 2.0) * (2.0 * lam * u2 - 2.0 * mu - 1.0) - 2.0 * (mu + 1.0) * q + 2.0 * mu,
            (1.0 + 2.0 * mu - 2.0 * lam * u2) * (lam + 2.0) - 2.0 * mu};
}

template <typename V, typename Rhs>
V rk4_step(const Rhs& f, const V& y, double dt) {
    V k1 = f(y), y2 = y;
    for (size_t i = 0; i < y.size(); ++i) y2[i] = y[i] + 0.5 * dt * k1[i];
    V k2 = f(y2);
    for (size_t i = 0; i < y.size(); ++i) y2[i] = y[i] + 0.5 * dt * k2[i];
    V k3 = f(y2);
    for (size_t i = 0; i < y.size(); ++i) y2[i] = y[i] + dt * k3[i];
    V k4 = f(y2);
    V out = y;
    for (size_t i = 0; i < y.size(); ++i)
        out[i] = y[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return out;
}

bool exceeds_guard(const CharState& s) {
    return !(std::fabs(s.u1) <= kBlowupLimit) || !(std::fabs(s.u2) <= kBlowupLimit) ||
           !(std::fabs(s.u3) <= kBlowupLimit) || !(std::fabs(s.lambda) <= kBlowupLimit);
}

Vec3 red_pack(const CharState& s) { return {s.u1, s.u2, s.lambda}; }

CharState red_unpack(const ModeOrder& mode, double t, const Vec3& y) {
    CharState s;
    s.t = t;
    s.u1 = y[0];
    s.u2 = y[1];
    s.lambda = y[2];
    s.u3 = reconstruct_u3(mode, y[0], y[1], y[2]);
    return s;
}

} // namespace

std::array<double, 4> rhs_gen_char(const ModeOrder& mode, const CharState& s) {
    const Vec4 d = gen_rhs(mode, {s.u1, s.u2, s.u3, s.lambda});
    return {d[0], d[1], d[2], d[3]};
}

std::array<double, 3> rhs_red_char(const ModeOrder& mode, const CharState& s) {
    return red_rhs(mode, {s.u1, s.u2, s.lambda});
}

IntegrationRun integrate_partial(const ModeOrder& mode, CharSystem system,
                                 const CharState& init, double h, double t_max) {
    if (!(h > 0.0)) throw DomainError("integrate: need h > 0");
    if (t_max == 0.0) throw DomainError("integrate: need t_max != 0");
    const double dt = t_max > 0.0 ? h : -h;
    const long n_steps = static_cast<long>(std::ceil(std::fabs(t_max) / h - 1e-12));

    IntegrationRun run;
    run.samples.reserve(static_cast<size_t>(n_steps) + 1);

    auto push = [&](const CharState& s) -> bool {
        if (exceeds_guard(s)) {
            run.blew_up = true;
            run.t_blowup = s.t;
            return false;
        }
        run.samples.push_back(s);
        return true;
    };

    if (system == CharSystem::reduced) {
        auto f = [&](const Vec3& y) { return red_rhs(mode, y); };
        Vec3 y = red_pack(init);
        double t = init.t;
        if (!push(red_unpack(mode, t, y))) return run;
        for (long i = 0; i < n_steps; ++i) {
            const double step = (i == n_steps - 1) ? (init.t + t_max - t) : dt;
            y = rk4_step(f, y, step);
            t += step;
            if (!push(red_unpack(mode, t, y))) return run;
        }
    } else {
        auto f = [&](const Vec4& y) { return gen_rhs(mode, y); };
        Vec4 y = {init.u1, init.u2, init.u3, init.lambda};
        double t = init.t;
        auto unpack = [](double tt, const Vec4& yy) {
            CharState s;
            s.t = tt; s.u1 = yy[0]; s.u2 = yy[1]; s.u3 = yy[2]; s.lambda = yy[3];
            return s;
        };
        if (!push(unpack(t, y))) return run;
        for (long i = 0; i < n_steps; ++i) {
            const double step = (i == n_steps - 1) ? (init.t + t_max - t) : dt;
            y = rk4_step(f, y, step);
            t += step;
            if (!push(unpack(t, y))) return run;
        }
    }
    return run;
}

std::vector<CharState> integrate(const ModeOrder& mode, CharSystem system,
                                 const CharState& init, double h, double t_max) {
    IntegrationRun run = integrate_partial(mode, system, init, h, t_max);
    if (run.blew_up)
        throw Blowup("characteristic trajectory exceeded magnitude guard", run.t_blowup);
    return std::move(run.samples);
}

namespace {

// Bisection on re-integration of the bracketing step: from the state at the
// left edge, take a single RK4 substep to the midpoint and keep the half with
// the sign change.
CharState refine_crossing(const ModeOrder& mode, const CharState& left, double t_right) {
    auto f = [&](const Vec3& y) { return red_rhs(mode, y); };
    double ta = left.t, tb = t_right;
    Vec3 ya = red_pack(left);
    const bool left_neg = left.lambda < 0.0;

    CharState result = left;
    for (int it = 0; it < 200; ++it) {
        const double tm = 0.5 * (ta + tb);
        const Vec3 ym = rk4_step(f, ya, tm - ta);
        result = red_unpack(mode, tm, ym);
        if (std::fabs(result.lambda) <= kEventLambdaTol) return result;
        if ((result.lambda < 0.0) == left_neg) {
            ta = tm;
            ya = ym;
        } else {
            tb = tm;
        }
        if (std::fabs(tb - ta) <= 1e-16 * std::max(1.0, std::fabs(ta))) break;
    }
    return result;
}

} // namespace

TraceResult trace_to_eigenvalue(const ModeOrder& mode, double a, double b,
                                double Lambda0, const TraceOptions& opts) {
    if (!(opts.h > 0.0) || !(opts.t_max > 0.0))
        throw DomainError("trace_to_eigenvalue: need h > 0 and t_max > 0");

    CharState init;
    init.u1 = a;
    init.u2 = b;
    init.lambda = Lambda0;
    init.u3 = reconstruct_u3(mode, a, b, Lambda0);

    TraceResult res;
    bool escaped = false;
    double t_escape = 0.0;
    for (const double direction : {+1.0, -1.0}) {
        IntegrationRun run =
            integrate_partial(mode, CharSystem::reduced, init, opts.h, direction * opts.t_max);
        // an escape past the crossing is harmless; only record it for the
        // no-crossing diagnosis
        if (run.blew_up && !escaped) {
            escaped = true;
            t_escape = run.t_blowup;
        }
        std::vector<CharState> samples = std::move(run.samples);

        double psi_max = 0.0;
        for (size_t i = 0; i < samples.size(); ++i) {
            const CharState& s = samples[i];
            psi_max = std::max(psi_max, std::fabs(eval_psi(mode, {s.u1, s.u2, s.u3}, s.lambda)));
            if (opts.validate_on_surface && i % 50 == 0) {
                const ThetaResult th =
                    theta_limit(mode, {s.u1, s.u2, s.u3}, s.lambda, 1e-10, kDefaultThetaKMax);
                if (std::fabs(th.theta) > 1e-6)
                    throw BranchLoss("trace_to_eigenvalue: Theta residual along trace exceeds 1e-6");
            }
        }

        for (size_t i = 1; i < samples.size(); ++i) {
            const CharState& prev = samples[i - 1];
            const CharState& cur = samples[i];
            if (prev.lambda == 0.0 || (prev.lambda < 0.0) != (cur.lambda < 0.0)) {
                CharState at_event = (prev.lambda == 0.0)
                                         ? prev
                                         : refine_crossing(mode, prev, cur.t);
                res.t0 = at_event.t;
                res.state_at_t0 = at_event;
                res.gamma2 = at_event.u1;
                res.lambda = (mode.mu + 1.0) * (mode.mu - 2.0 * at_event.u2);
                res.psi_drift_max = psi_max;
                samples.resize(i + 1);
                res.samples = std::move(samples);
                return res;
            }
        }
    }
    if (escaped)
        throw Blowup("trace_to_eigenvalue: trajectory escaped before any sign change of Lambda",
                     t_escape);
    throw NoCrossing("trace_to_eigenvalue: Lambda has no sign change in [-t_max, t_max]",
                     opts.t_max);
}

} // namespace swe
