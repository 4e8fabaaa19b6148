#pragma once

#include "swe/connection.hpp"
#include "swe/types.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace swe {

struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
    double f_lo = 0.0;
    double f_hi = 0.0;
};

struct RootResult {
    double root = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

/// Thrown when refine_root exhausts max_iter; carries the best iterate.
class MaxIterations : public std::runtime_error {
public:
    MaxIterations(const std::string& msg, RootResult best)
        : std::runtime_error(msg), best(best) {}
    RootResult best;
};

using ScalarFn = std::function<double(double)>;

/// Theta restricted to the Psi = 0 surface:
/// Lambda -> Theta(Lambda, a, b, (a+b^2-1)*Lambda - 2(mu+1)*b).
/// Throws NoConvergence when the series does not meet tol.
double theta_on_surface(const ModeOrder& mode, double a, double b, double Lambda,
                        double tol = kDefaultThetaTol, long k_max = kDefaultThetaKMax);

struct ScanResult {
    std::vector<Bracket> brackets;
    /// Full (x, f(x)) grid, for plotting.
    std::vector<std::pair<double, double>> table;
};

ScanResult scan_brackets(const ScalarFn& f, double lo, double hi, double step);

/// Secant iteration with bisection safeguard on a sign-change bracket.
/// Stops when |f(root)| <= ftol or the bracket width drops below xtol.
RootResult refine_root(const ScalarFn& f, Bracket br, double xtol = 1e-13,
                       double ftol = 1e-11, int max_iter = 100);

} // namespace swe
