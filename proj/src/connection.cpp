#include "swe/connection.hpp"

#include <cmath>
#include <vector>

namespace swe {

namespace {

// Tail surrogate for a k^-(mu+2) sequence: compare theta_k with the value
// ceil(k/10) steps back and rescale conservatively.
double tail_estimate(const std::vector<double>& theta, long k, double mu) {
    const long m = (k + 9) / 10;
    return std::fabs(theta[static_cast<size_t>(k)] - theta[static_cast<size_t>(k - m)]) *
           static_cast<double>(k) / (static_cast<double>(m) * (mu + 1.0));
}

double richardson_extrapolate(const std::vector<double>& theta, long k, double mu) {
    const long k1 = k / 2;
    const long k2 = 2 * k1;
    if (k1 < 1) return theta[static_cast<size_t>(k)];
    const double p = mu + 2.0;
    const double w1 = std::pow(static_cast<double>(k1), p);
    const double w2 = std::pow(static_cast<double>(k2), p);
    return (w2 * theta[static_cast<size_t>(k2)] - w1 * theta[static_cast<size_t>(k1)]) / (w2 - w1);
}

} // namespace

SeriesState series_init(const ModeOrder& mode, const ParamVec& u, double Lambda) {
    (void)u;
    SeriesState s;
    s.k = 0;
    s.d = {(u.u3 + Lambda) / (2.0 * mode.alpha), 1.0};
    s.b = s.d;
    s.d_comp = {0.0, 0.0};
    s.lambda = Lambda;
    return s;
}

SeriesState series_step(const ModeOrder& mode, const ParamVec& u, const SeriesState& s) {
    const double k = static_cast<double>(s.k + 1);
    const double mu = mode.mu;
    const double lam = s.lambda;
    const double w = u.u3 + lam;
    const double q = u.u1 + u.u2 * u.u2;

    SeriesState n = s;
    n.k = s.k + 1;
    n.b.y = -(2.0 * s.b.x + 2.0 * u.u2 * s.b.y + lam * s.d.x + (mu + 1.0) * s.d.y) / k;
    n.b.x = (2.0 * (k * u.u2 - w) * s.b.x + (2.0 * k * q - 2.0 * u.u2 * w) * s.b.y -
             lam * w * s.d.x - (mu + 1.0) * w * s.d.y) /
            (k * (k + mu + 1.0));

    // d_{k} = d_{k-1} + b_k with Kahan compensation
    {
        const double yx = n.b.x - n.d_comp.x;
        const double tx = n.d.x + yx;
        n.d_comp.x = (tx - n.d.x) - yx;
        n.d.x = tx;
        const double yy = n.b.y - n.d_comp.y;
        const double ty = n.d.y + yy;
        n.d_comp.y = (ty - n.d.y) - yy;
        n.d.y = ty;
    }
    return n;
}

ThetaResult theta_limit(const ModeOrder& mode, const ParamVec& u, double Lambda,
                        double tol, long k_max, bool richardson) {
    if (!(tol > 0.0)) throw DomainError("theta_limit: tol must be positive");
    if (k_max < 10) throw DomainError("theta_limit: k_max must be at least 10");

    std::vector<double> theta;
    theta.reserve(static_cast<size_t>(k_max) + 1);

    SeriesState s = series_init(mode, u, Lambda);
    theta.push_back(s.theta());

    ThetaResult r;
    bool prev_ok = false;
    for (long k = 1; k <= k_max; ++k) {
        s = series_step(mode, u, s);
        theta.push_back(s.theta());
        if (k >= 20) {
            const double tail = tail_estimate(theta, k, mode.mu);
            r.tail_estimate = tail;
            if (tail <= tol) {
                if (prev_ok) {
                    r.theta = richardson ? richardson_extrapolate(theta, k, mode.mu) : s.theta();
                    r.k_used = k;
                    r.converged = true;
                    return r;
                }
                prev_ok = true;
            } else {
                prev_ok = false;
            }
        }
    }
    r.theta = richardson ? richardson_extrapolate(theta, k_max, mode.mu) : s.theta();
    r.k_used = k_max;
    r.converged = false;
    return r;
}

ThetaResult theta_frobenius(const ModeOrder& mode, const ParamVec& u, double Lambda,
                            double tol, long k_max) {
    if (!(tol > 0.0)) throw DomainError("theta_frobenius: tol must be positive");
    if (k_max < 10) throw DomainError("theta_frobenius: k_max must be at least 10");

    const double al = mode.alpha;
    const double w = u.u3 + Lambda;
    const Matrix2 a0 = {-al, w, 0.0, al};
    const Matrix2 a1 = {-1.0, 0.0, Lambda, 2.0 * al - 1.0};
    const Matrix2 c = {2.0 * u.u2, 2.0 * (u.u1 + u.u2 * u.u2), -2.0, -2.0 * u.u2};
    const Matrix2 s01c = a0 + a1 - c;

    Vec2 dkm1 = {w / (2.0 * al), 1.0};
    Vec2 dkm2 = {0.0, 0.0};

    std::vector<double> theta;
    theta.reserve(static_cast<size_t>(k_max) + 1);
    theta.push_back(dkm1.x);

    ThetaResult r;
    bool prev_ok = false;
    for (long k = 1; k <= k_max; ++k) {
        const double kk = static_cast<double>(k);
        const double shift = kk - 1.0 + al;
        const Vec2 rhs = {s01c.a11 * dkm1.x + s01c.a12 * dkm1.y - shift * dkm1.x +
                              c.a11 * dkm2.x + c.a12 * dkm2.y,
                          s01c.a21 * dkm1.x + s01c.a22 * dkm1.y - shift * dkm1.y +
                              c.a21 * dkm2.x + c.a22 * dkm2.y};
        // (A0 - (k+alpha) I) is upper triangular with diagonal (-(k+2*alpha), -k)
        if (!(kk > 0.0) || !(kk + 2.0 * al > 0.0))
            throw SingularStep("theta_frobenius: singular step matrix");
        Vec2 dk;
        dk.y = -rhs.y / kk;
        dk.x = (w * dk.y - rhs.x) / (kk + 2.0 * al);
        dkm2 = dkm1;
        dkm1 = dk;
        theta.push_back(dk.x);

        if (k >= 20) {
            const double tail = tail_estimate(theta, k, mode.mu);
            r.tail_estimate = tail;
            if (tail <= tol) {
                if (prev_ok) {
                    r.theta = dk.x;
                    r.k_used = k;
                    r.converged = true;
                    return r;
                }
                prev_ok = true;
            } else {
                prev_ok = false;
            }
        }
    }
    r.theta = dkm1.x;
    r.k_used = k_max;
    r.converged = false;
    return r;
}

double convergence_order(const ModeOrder& mode, const ParamVec& u, double Lambda,
                         long k_lo, long k_hi) {
    if (!(k_hi >= 2 * k_lo && k_lo >= 100))
        throw DomainError("convergence_order: need k_hi >= 2*k_lo >= 200");

    const long k_ref = 25 * k_hi;
    std::vector<double> theta;
    theta.reserve(static_cast<size_t>(k_ref) + 1);
    SeriesState s = series_init(mode, u, Lambda);
    theta.push_back(s.theta());
    for (long k = 1; k <= k_ref; ++k) {
        s = series_step(mode, u, s);
        theta.push_back(s.theta());
    }
    const double ref = theta.back();

    // least squares of log(err) against log(k)
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    long n = 0;
    for (long k = k_lo; k <= k_hi; ++k) {
        const double err = std::fabs(theta[static_cast<size_t>(k)] - ref);
        if (!(err > 0.0)) continue;
        const double x = std::log(static_cast<double>(k));
        const double y = std::log(err);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++n;
    }
    if (n < 10)
        throw DegenerateData("convergence_order: error sequence vanished on [k_lo, k_hi]");
    const double nn = static_cast<double>(n);
    return (nn * sxy - sx * sy) / (nn * sxx - sx * sx);
}

} // namespace swe
