#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace swe {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

/// Series did not reach the requested tail tolerance within k_max steps.
/// Carries the best estimate obtained so far.
class NoConvergence : public std::runtime_error {
public:
    NoConvergence(const std::string& msg, double best, long k)
        : std::runtime_error(msg), best_estimate(best), k_reached(k) {}
    double best_estimate;
    long k_reached;
};

class SingularStep : public std::runtime_error {
public:
    explicit SingularStep(const std::string& msg) : std::runtime_error(msg) {}
};

class DegenerateData : public std::runtime_error {
public:
    explicit DegenerateData(const std::string& msg) : std::runtime_error(msg) {}
};

class Blowup : public std::runtime_error {
public:
    Blowup(const std::string& msg, double t) : std::runtime_error(msg), t_blowup(t) {}
    double t_blowup;
};

class NoCrossing : public std::runtime_error {
public:
    NoCrossing(const std::string& msg, double t_max)
        : std::runtime_error(msg), t_max_searched(t_max) {}
    double t_max_searched;
};

class BranchLoss : public std::runtime_error {
public:
    explicit BranchLoss(const std::string& msg) : std::runtime_error(msg) {}
};

class TruncationUnstable : public std::runtime_error {
public:
    TruncationUnstable(const std::string& msg, double drift)
        : std::runtime_error(msg), drift(drift) {}
    double drift;
};

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

/// Fixed order mu >= 0 with the derived exponent alpha = (mu+1)/2.
struct ModeOrder {
    double mu;
    double alpha;

    explicit ModeOrder(double mu_) : mu(mu_), alpha(0.5 * (mu_ + 1.0)) {
        if (!(mu_ >= 0.0) || !std::isfinite(mu_))
            throw DomainError("ModeOrder: mu must be finite and >= 0");
    }
};

/// Deformation parameters (u1, u2, u3).
struct ParamVec {
    double u1 = 0.0;
    double u2 = 0.0;
    double u3 = 0.0;
};

/// Physical CSWE parameters (gamma^2, beta, lambda).
struct CswParams {
    double gamma2 = 0.0;
    double beta = 0.0;
    double lambda = 0.0;
};

/// Chart (v1, v2, zeta); valid for v1 in (-1,1), v2 > 0.
struct SpheroidalChart {
    double v1 = 0.0;
    double v2 = 1.0;
    double zeta = 0.0;
};

/// Chart (t, u, omega).
struct BurgersChart {
    double t = 0.0;
    double u = 0.0;
    double omega = 0.0;
};

// ---------------------------------------------------------------------------
// Small linear algebra value types
// ---------------------------------------------------------------------------

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    friend Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, const Vec2& v) { return {s * v.x, s * v.y}; }
};

/// 2x2 real matrix, row-major entries.
struct Matrix2 {
    double a11 = 0.0, a12 = 0.0;
    double a21 = 0.0, a22 = 0.0;

    static Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    friend Matrix2 operator+(const Matrix2& a, const Matrix2& b) {
        return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
    }
    friend Matrix2 operator-(const Matrix2& a, const Matrix2& b) {
        return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
    }
    friend Matrix2 operator*(double s, const Matrix2& m) {
        return {s * m.a11, s * m.a12, s * m.a21, s * m.a22};
    }
    friend Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
        return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
                a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
    }
    friend Vec2 operator*(const Matrix2& m, const Vec2& v) {
        return {m.a11 * v.x + m.a12 * v.y, m.a21 * v.x + m.a22 * v.y};
    }

    double max_abs() const {
        return std::max(std::max(std::fabs(a11), std::fabs(a12)),
                        std::max(std::fabs(a21), std::fabs(a22)));
    }
};

} // namespace swe
