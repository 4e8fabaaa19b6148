#pragma once

#include "swe/types.hpp"

#include <vector>

namespace swe {

// Independent eigenvalue reference: truncated expansion of the CSWE operator
// in normalized associated Legendre functions. The operator matrix is
// M = D - gamma^2 (I - X^2) - beta X with D = diag(n(n+1)), n = mu + k, and X
// the symmetric tridiagonal multiplication-by-x matrix. Deliberately a
// different algorithm family from the series/characteristics pipeline.

struct OracleSpec {
    double mu = 0.0;
    double gamma2 = 0.0;
    double beta = 0.0;
    int truncation = 80;
    int n_modes = 5;
};

struct OracleResult {
    std::vector<double> lambdas; // ascending, length n_modes
    double truncation_drift = 0.0;
};

OracleResult oracle_eigenvalues(const OracleSpec& spec);

/// All eigenvalues of the order-n truncated matrix, ascending. Cyclic Jacobi.
std::vector<double> oracle_spectrum(double mu, double gamma2, double beta, int n);

} // namespace swe
