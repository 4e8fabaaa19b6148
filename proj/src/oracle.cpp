#include "swe/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace swe {

namespace {

// Dense symmetric cyclic Jacobi; N stays small (<= a few hundred).
void jacobi_eigenvalues(std::vector<double>& a, int n) {
    auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
        if (off < 1e-28 * static_cast<double>(n)) return;

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
}

} // namespace

std::vector<double> oracle_spectrum(double mu, double gamma2, double beta, int n) {
    if (n < 2) throw DomainError("oracle_spectrum: truncation too small");

    // off-diagonal entries of the x-multiplication matrix
    std::vector<double> c(static_cast<size_t>(n) - 1);
    for (int k = 0; k + 1 < n; ++k) {
        const double nk = mu + static_cast<double>(k);
        c[static_cast<size_t>(k)] =
            std::sqrt(((nk + 1.0) * (nk + 1.0) - mu * mu) / ((2.0 * nk + 1.0) * (2.0 * nk + 3.0)));
    }

    std::vector<double> m(static_cast<size_t>(n) * n, 0.0);
    auto at = [&](int i, int j) -> double& { return m[static_cast<size_t>(i) * n + j]; };

    // X^2: pentadiagonal
    for (int i = 0; i < n; ++i) {
        const double nk = mu + static_cast<double>(i);
        double x2_diag = 0.0;
        if (i > 0) x2_diag += c[static_cast<size_t>(i) - 1] * c[static_cast<size_t>(i) - 1];
        if (i + 1 < n) x2_diag += c[static_cast<size_t>(i)] * c[static_cast<size_t>(i)];
        at(i, i) = nk * (nk + 1.0) - gamma2 * (1.0 - x2_diag);
        if (i + 1 < n) {
            at(i, i + 1) = -beta * c[static_cast<size_t>(i)];
            at(i + 1, i) = at(i, i + 1);
        }
        if (i + 2 < n) {
            const double x2 = c[static_cast<size_t>(i)] * c[static_cast<size_t>(i) + 1];
            at(i, i + 2) = gamma2 * x2;
            at(i + 2, i) = at(i, i + 2);
        }
    }

    jacobi_eigenvalues(m, n);
    std::vector<double> ev(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) ev[static_cast<size_t>(i)] = at(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

OracleResult oracle_eigenvalues(const OracleSpec& spec) {
    if (!(spec.mu >= 0.0)) throw DomainError("oracle: mu must be >= 0");
    if (spec.n_modes < 1 || spec.truncation < spec.n_modes + 10)
        throw DomainError("oracle: need truncation >= n_modes + 10");

    const std::vector<double> full = oracle_spectrum(spec.mu, spec.gamma2, spec.beta, spec.truncation);
    const std::vector<double> smaller =
        oracle_spectrum(spec.mu, spec.gamma2, spec.beta, spec.truncation - 10);

    OracleResult res;
    res.lambdas.assign(full.begin(), full.begin() + spec.n_modes);
    for (int i = 0; i < spec.n_modes; ++i) {
        const double drift = std::fabs(res.lambdas[static_cast<size_t>(i)] -
                                       smaller[static_cast<size_t>(i)]);
        res.truncation_drift = std::max(res.truncation_drift, drift);
        if (drift > 1e-8 * (1.0 + std::fabs(res.lambdas[static_cast<size_t>(i)])))
            throw TruncationUnstable("oracle: eigenvalue not converged in truncation", drift);
    }
    return res;
}

} // namespace swe
