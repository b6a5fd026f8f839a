#include "ngmzi/phase_space.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ngmzi {

void NGOpParams::validate() const {
    if (!(r >= 0.0) || !std::isfinite(r))
        throw std::invalid_argument("NGOpParams: squeezing r must be finite and >= 0");
    if (!(tau >= 0.0 && tau <= 1.0))
        throw std::invalid_argument("NGOpParams: transmissivity tau must lie in [0, 1]");
    if (m < 0 || m > 10)
        throw std::invalid_argument("NGOpParams: injected photon number m must lie in [0, 10]");
    if (n < 0 || n > 24)
        throw std::invalid_argument("NGOpParams: detected photon number n must lie in [0, 24]");
}

NGOpKind classify(const NGOpParams& p) {
    if (p.m < p.n) return NGOpKind::subtraction;
    if (p.m > p.n) return NGOpKind::addition;
    return NGOpKind::catalysis;
}

DerivedScalars DerivedScalars::from(double r, double tau) {
    DerivedScalars d{};
    d.alpha = std::sinh(r);
    d.beta = std::cosh(r);
    d.t = std::sqrt(tau);
    d.tp = std::sqrt(1.0 - tau);
    d.w1 = d.beta + tau * d.alpha;
    d.w2 = d.beta - tau * d.alpha;
    // w0 is a diagnostic scalar only; its denominator changes sign for
    // large r at small tau, so no positivity guard belongs here.
    d.w0 = std::exp(-2.0 * r) * (d.w2 + d.tp * d.tp * d.alpha * d.alpha) /
           (d.w1 - d.tp * d.tp * d.alpha * d.alpha);
    return d;
}

void MZIScenario::validate() const {
    ng.validate();
    if (!std::isfinite(dx) || !std::isfinite(dp))
        throw std::invalid_argument("MZIScenario: displacement must be finite");
    if (!std::isfinite(phi))
        throw std::invalid_argument("MZIScenario: phase must be finite");
}

ScenarioScalars ScenarioScalars::from(const MZIScenario& sc) {
    ScenarioScalars out{};
    out.s = DerivedScalars::from(sc.ng);
    out.gamma = std::cos(sc.phi);
    out.delta = std::sin(sc.phi);
    out.w3 = out.s.beta + sc.ng.tau * out.s.alpha * out.gamma;
    out.w4 = out.s.beta - sc.ng.tau * out.s.alpha * out.gamma;
    out.d[0] = 2.0 * sc.dx;
    out.d[1] = 2.0 * sc.dp;
    return out;
}

namespace {

// Constant u1-v2 coupling shared by M1 (times 1/4), M3 and the phi -> 0
// limit of M4: alpha^2 tp^2 t + t.
double cross_coupling(const DerivedScalars& d) {
    return d.alpha * d.alpha * d.tp * d.tp * d.t + d.t;
}

} // namespace

Mat4 build_m1(const NGOpParams& p) {
    p.validate();
    const DerivedScalars d = DerivedScalars::from(p);
    const double ab = d.alpha * d.beta;
    const double tp2 = d.tp * d.tp;
    const double t = d.t;
    const double x = cross_coupling(d);

    Mat4 M;
    M(0, 0) = ab * tp2 * t * t;
    M(0, 1) = -d.beta * d.beta * tp2;
    M(0, 2) = ab * tp2 * t;
    M(0, 3) = x;
    M(1, 0) = M(0, 1);
    M(1, 1) = M(0, 0);
    M(1, 2) = x;
    M(1, 3) = M(0, 2);
    M(2, 0) = M(0, 2);
    M(2, 1) = x;
    M(2, 2) = ab * tp2;
    M(2, 3) = -d.alpha * d.alpha * tp2 * t * t;
    M(3, 0) = x;
    M(3, 1) = M(0, 2);
    M(3, 2) = M(2, 3);
    M(3, 3) = M(2, 2);
    for (auto& v : M.a) v *= 0.25;
    return M;
}

Vec4 build_m2(const NGOpParams& p, double q2, double p2) {
    p.validate();
    const DerivedScalars d = DerivedScalars::from(p);
    const cdouble zp{q2 * d.w1, p2 * d.w2};  // q2 w1 + i p2 w2
    const cdouble zm{q2 * d.w1, -p2 * d.w2}; // q2 w1 - i p2 w2
    Vec4 v;
    v[0] = -d.beta * d.tp * zp;
    v[1] = d.beta * d.tp * zm;
    v[2] = -d.alpha * d.tp * d.t * zm;
    v[3] = d.alpha * d.tp * d.t * zp;
    return v;
}

Mat4 build_m3(const NGOpParams& p) {
    p.validate();
    const DerivedScalars d = DerivedScalars::from(p);
    const double ab = d.alpha * d.beta;
    const double tp2 = d.tp * d.tp;
    const double t = d.t;
    const double x = cross_coupling(d);
    // The u1-u2 / v1-v2 couplings flip sign relative to M1's picture; the
    // sign is fixed by the Fock oracle (herald-probability agreement).
    const double off = -ab * tp2 * t;

    Mat4 M;
    M(0, 0) = ab * tp2 * t * t;
    M(0, 1) = d.beta * d.beta * tp2;
    M(0, 2) = off;
    M(0, 3) = x;
    M(1, 0) = M(0, 1);
    M(1, 1) = M(0, 0);
    M(1, 2) = x;
    M(1, 3) = off;
    M(2, 0) = off;
    M(2, 1) = x;
    M(2, 2) = ab * tp2;
    M(2, 3) = d.alpha * d.alpha * tp2 * t * t;
    M(3, 0) = x;
    M(3, 1) = off;
    M(3, 2) = M(2, 3);
    M(3, 3) = M(2, 2);
    return M;
}

Mat4 build_m4(const MZIScenario& sc) {
    sc.validate();
    const ScenarioScalars ss = ScenarioScalars::from(sc);
    const DerivedScalars& d = ss.s;
    const double ab = d.alpha * d.beta;
    const double tp2 = d.tp * d.tp;
    const double t = d.t;
    const double ga = ss.gamma;
    // Phase-dependent u1-v2 coupling; reduces to t w3 w4 at r = 0 and to
    // the phi = 0 coupling alpha^2 tp^2 t + t at delta = 0.
    const double x = (ss.w3 * ss.w4 * cross_coupling(d) +
                      ss.delta * ss.delta * d.alpha * d.alpha * d.beta * d.beta * tp2 * t * t * t) /
                     (d.w1 * d.w2);

    Mat4 M;
    M(0, 0) = ab * ga * ga * tp2 * t * t;
    M(0, 1) = -d.beta * d.beta * ga * tp2;
    M(0, 2) = ab * ga * tp2 * t;
    M(0, 3) = x;
    M(1, 0) = M(0, 1);
    M(1, 1) = M(0, 0);
    M(1, 2) = x;
    M(1, 3) = M(0, 2);
    M(2, 0) = M(0, 2);
    M(2, 1) = x;
    M(2, 2) = ab * tp2;
    M(2, 3) = -d.alpha * d.alpha * ga * tp2 * t * t;
    M(3, 0) = x;
    M(3, 1) = M(0, 2);
    M(3, 2) = M(2, 3);
    M(3, 3) = M(2, 2);
    return M;
}

Mat4x2 build_m5(const MZIScenario& sc) {
    sc.validate();
    const ScenarioScalars ss = ScenarioScalars::from(sc);
    const DerivedScalars& d = ss.s;
    const double b3 = d.beta * ss.delta * d.tp * ss.w3;
    const double b4 = d.beta * ss.delta * d.tp * ss.w4;
    const double a3 = d.alpha * ss.delta * d.tp * d.t * ss.w3;
    const double a4 = d.alpha * ss.delta * d.tp * d.t * ss.w4;

    Mat4x2 M;
    M(0, 0) = b3;
    M(0, 1) = cdouble{0.0, b4};
    M(1, 0) = -b3;
    M(1, 1) = cdouble{0.0, b4};
    M(2, 0) = a3;
    M(2, 1) = cdouble{0.0, -a4};
    M(3, 0) = -a3;
    M(3, 1) = cdouble{0.0, -a4};
    return M;
}

Diag2 build_m6(const MZIScenario& sc) {
    sc.validate();
    const ScenarioScalars ss = ScenarioScalars::from(sc);
    const double s2 = std::sin(sc.phi / 2.0) * std::sin(sc.phi / 2.0);
    return Diag2{s2 * ss.w3 * ss.s.w1, s2 * ss.w4 * ss.s.w2};
}

} // namespace ngmzi
