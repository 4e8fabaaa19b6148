#include "swe/rootfind.hpp"

#include <cmath>

namespace swe {

double theta_on_surface(const ModeOrder& mode, double a, double b, double Lambda,
                        double tol, long k_max) {
    ParamVec u;
    u.u1 = a;
    u.u2 = b;
    u.u3 = (a + b * b - 1.0) * Lambda - 2.0 * (mode.mu + 1.0) * b;
    const ThetaResult r = theta_limit(mode, u, Lambda, tol, k_max);
    if (!r.converged)
        throw NoConvergence("theta_on_surface: series tail above tolerance", r.theta, r.k_used);
    return r.theta;
}

ScanResult scan_brackets(const ScalarFn& f, double lo, double hi, double step) {
    if (!(lo < hi)) throw DomainError("scan_brackets: need lo < hi");
    if (!(step > 0.0)) throw DomainError("scan_brackets: need step > 0");

    ScanResult res;
    const long n = static_cast<long>(std::floor((hi - lo) / step * (1.0 + 1e-12)));
    for (long i = 0; i <= n; ++i) {
        const double xi = std::min(lo + static_cast<double>(i) * step, hi);
        res.table.emplace_back(xi, f(xi));
    }
    for (size_t i = 1; i < res.table.size(); ++i) {
        const auto& [x0, f0] = res.table[i - 1];
        const auto& [x1, f1] = res.table[i];
        if (std::isnan(f0) || std::isnan(f1)) continue;
        if (f0 * f1 <= 0.0 && !(f0 == 0.0 && f1 == 0.0))
            res.brackets.push_back({x0, x1, f0, f1});
    }
    return res;
}

RootResult refine_root(const ScalarFn& f, Bracket br, double xtol, double ftol,
                       int max_iter) {
    if (!(br.lo < br.hi) || !(br.f_lo * br.f_hi <= 0.0))
        throw DomainError("refine_root: invalid bracket");

    if (std::fabs(br.f_lo) <= ftol && ftol > 0.0) return {br.lo, br.f_lo, 0};
    if (std::fabs(br.f_hi) <= ftol && ftol > 0.0) return {br.hi, br.f_hi, 0};

    double x_prev = br.lo, f_prev = br.f_lo;
    double x_cur = br.hi, f_cur = br.f_hi;
    double width2 = br.hi - br.lo; // bracket width two iterations ago

    RootResult best{std::fabs(br.f_lo) < std::fabs(br.f_hi) ? br.lo : br.hi,
                    std::min(std::fabs(br.f_lo), std::fabs(br.f_hi)), 0};

    for (int it = 1; it <= max_iter; ++it) {
        double x;
        const double denom = f_cur - f_prev;
        bool use_bisect = (denom == 0.0) || (br.hi - br.lo > 0.5 * width2);
        if (!use_bisect) {
            x = x_cur - f_cur * (x_cur - x_prev) / denom;
            if (!std::isfinite(x) || x <= br.lo || x >= br.hi) use_bisect = true;
        }
        if (use_bisect) x = 0.5 * (br.lo + br.hi);

        const double fx = f(x);
        if (it % 2 == 0) width2 = br.hi - br.lo;

        if (std::fabs(fx) < std::fabs(best.residual) || it == 1) best = {x, fx, it};

        if (std::fabs(fx) <= ftol) return {x, fx, it};

        if ((fx < 0.0) == (br.f_lo < 0.0)) {
            br.lo = x; br.f_lo = fx;
        } else {
            br.hi = x; br.f_hi = fx;
        }
        x_prev = x_cur; f_prev = f_cur;
        x_cur = x; f_cur = fx;

        if (br.hi - br.lo <= xtol) {
            const double xm = 0.5 * (br.lo + br.hi);
            return {xm, fx, it};
        }
    }
    best.residual = std::fabs(best.residual);
    throw MaxIterations("refine_root: iteration budget exhausted", best);
}

} // namespace swe
