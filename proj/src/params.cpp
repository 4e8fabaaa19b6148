#include "swe/params.hpp"

#include <cmath>

namespace swe {

namespace {

void check_z(double z) {
    if (!(z > 0.0 && z < 1.0))
        throw DomainError("z must lie in (0,1); the weight and potential have poles at the endpoints");
}

} // namespace

UFromCswResult u_from_csw(const ModeOrder& mode, const CswParams& p) {
    ParamVec u;
    u.u1 = p.gamma2;
    u.u3 = p.lambda - mode.mu * (mode.mu + 1.0);
    u.u2 = -(p.beta + u.u3) / (2.0 * (mode.mu + 1.0));
    return {u, true};
}

CswParams csw_from_u(const ModeOrder& mode, const ParamVec& u) {
    CswParams p;
    p.gamma2 = u.u1;
    p.beta = -u.u3 - 2.0 * (mode.mu + 1.0) * u.u2;
    p.lambda = u.u3 + mode.mu * (mode.mu + 1.0);
    return p;
}

SpheroidalChart to_spheroidal_chart(const ModeOrder& mode, const ParamVec& u, double Lambda) {
    const double s = u.u1 + u.u2 * u.u2;
    if (!(s > 0.0))
        throw DomainError("spheroidal chart requires u1 + u2^2 > 0");
    const double r = std::sqrt(s);
    SpheroidalChart c;
    c.v1 = u.u2 / r;
    c.v2 = r;
    c.zeta = (Lambda * s - 2.0 * mode.alpha * u.u2) / r;
    return c;
}

ULambda from_spheroidal_chart(const ModeOrder& mode, const SpheroidalChart& c) {
    if (!(std::fabs(c.v1) < 1.0 && c.v2 > 0.0))
        throw DomainError("spheroidal chart requires |v1| < 1 and v2 > 0");
    ULambda r;
    r.u.u2 = c.v1 * c.v2;
    r.u.u1 = c.v2 * c.v2 - r.u.u2 * r.u.u2;
    r.Lambda = (c.zeta + 2.0 * mode.alpha * c.v1) / c.v2;
    r.u.u3 = r.Lambda * (c.v2 * c.v2 - 1.0) - 2.0 * (mode.mu + 1.0) * r.u.u2;
    return r;
}

BurgersChart to_burgers_chart(const SpheroidalChart& c) {
    if (!(std::fabs(c.v1) < 1.0))
        throw DomainError("Burgers chart requires |v1| < 1");
    if (!(c.v2 > 0.0))
        throw DomainError("Burgers chart requires v2 > 0");
    BurgersChart b;
    b.u = std::atanh(c.v1);
    b.t = std::log(c.v2 / std::cosh(b.u));
    b.omega = c.zeta + c.v2;
    return b;
}

SpheroidalChart from_burgers_chart(const BurgersChart& b) {
    SpheroidalChart c;
    c.v1 = std::tanh(b.u);
    c.v2 = std::exp(b.t) * std::cosh(b.u);
    c.zeta = b.omega - c.v2;
    return c;
}

double eval_psi(const ModeOrder& mode, const ParamVec& u, double Lambda) {
    return Lambda * (u.u1 + u.u2 * u.u2 - 1.0) - 2.0 * (mode.mu + 1.0) * u.u2 - u.u3;
}

Matrix2 eval_w(double z) {
    check_z(z);
    return {1.0 / (1.0 - z), 0.0, 0.0, 1.0 / z};
}

Matrix2 eval_j() {
    return {0.0, -1.0, 1.0, 0.0};
}

Matrix2 eval_h(const ModeOrder& mode, const ParamVec& u, double z) {
    check_z(z);
    const double off = -mode.alpha / z + mode.alpha / (1.0 - z) + 2.0 * u.u2;
    return {2.0, off, off, u.u3 / z + 2.0 * (u.u1 + u.u2 * u.u2)};
}

Matrix2 eval_g(const ModeOrder& mode, const ParamVec& u, double Lambda, double z) {
    check_z(z);
    const double off = 2.0 * z * u.u2 + Lambda * u.u2 - mode.mu - 0.5;
    return {2.0 * z, off, off, 2.0 * (z - 1.0) * (u.u1 + u.u2 * u.u2)};
}

Matrix2 eval_h_hat(const ModeOrder& mode, const SpheroidalChart& c, double z) {
    check_z(z);
    const double off = -mode.alpha / z + mode.alpha / (1.0 - z) + 2.0 * c.v1 * c.v2;
    return {2.0 * c.v2 + 2.0 * mode.alpha * c.v1 / (1.0 - z), off,
            off, 2.0 * c.v2 - 2.0 * mode.alpha * c.v1 / z};
}

Matrix2 eval_g_hat(const ModeOrder& mode, const SpheroidalChart& c, double z) {
    check_z(z);
    const double off = c.v1 * c.v2 * z + mode.alpha * (c.v1 * c.v1 - 1.0) - 0.5 * c.v1 * c.v2;
    return {c.v2 * z, off, off, c.v2 * (z - 1.0)};
}

Matrix2 eval_phi(const ModeOrder& mode, const BurgersChart& b, double z) {
    check_z(z);
    const double et = std::exp(b.t);
    const double ch = std::cosh(b.u);
    const double sh = std::sinh(b.u);
    const double th = std::tanh(b.u);
    const double off = -mode.alpha / z + mode.alpha / (1.0 - z) + 2.0 * et * sh;
    return {2.0 * et * ch + (2.0 * mode.alpha * th - et * ch) / (1.0 - z), off,
            off, 2.0 * et * ch - (2.0 * mode.alpha * th + et * ch) / z};
}

} // namespace swe
