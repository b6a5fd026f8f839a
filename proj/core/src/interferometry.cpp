#include "ngmzi/interferometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ngmzi/ng_state.hpp"
#include "ngmzi/quadrature.hpp"
#include "ngmzi/series.hpp"

namespace ngmzi {

namespace {

double real_checked(cdouble z, const char* where) {
    if (std::abs(z.imag()) > 1e-10 * (1.0 + std::abs(z.real())))
        throw ConsistencyError(std::string(where) + ": imaginary residue " +
                               std::to_string(z.imag()));
    return z.real();
}

} // namespace

MZIScenario baseline_of(const MZIScenario& sc) {
    MZIScenario base = sc;
    base.ng = NGOpParams{sc.ng.r, 1.0, 0, 0};
    return base;
}

double parity_expectation(const MZIScenario& sc) {
    return parity_expectation(sc, success_probability(sc.ng));
}

double parity_expectation(const MZIScenario& sc, double p_ng) {
    sc.validate();
    if (p_ng <= 1e-12)
        throw std::domain_error("parity_expectation: heralding probability vanishes");

    const ScenarioScalars ss = ScenarioScalars::from(sc);
    const double scale = -1.0 / (4.0 * ss.w3 * ss.w4);

    QuadExponent e;
    e.M = build_m4(sc);
    for (auto& v : e.M.a) v *= scale;

    const Mat4x2 m5 = build_m5(sc);
    for (int i = 0; i < 4; ++i)
        e.L[static_cast<std::size_t>(i)] =
            (m5(i, 0) * ss.d[0] + m5(i, 1) * ss.d[1]) * scale;

    const MultiSeries s = series_from_exponent(e, DegreeCaps{sc.ng.m, sc.ng.n});
    const double val = real_checked(apply_f1(s, sc.ng.m, sc.ng.n), "parity_expectation");

    const Diag2 m6 = build_m6(sc);
    const double quad = m6.d0 * ss.d[0] * ss.d[0] + m6.d1 * ss.d[1] * ss.d[1];
    const double prefactor =
        std::numbers::pi / std::sqrt(ss.w3 * ss.w4) * std::exp(-quad / (4.0 * ss.w3 * ss.w4));

    double parity = prefactor * val / p_ng;
    if (std::abs(parity) > 1.0 + 1e-9)
        throw ConsistencyError("parity_expectation: |<Pi>| = " + std::to_string(std::abs(parity)) +
                               " exceeds one beyond tolerance");
    if (parity > 1.0) parity = 1.0;
    if (parity < -1.0) parity = -1.0;
    return parity;
}

namespace {

double parity_quadrature_pass(const MZIScenario& sc, double p_ng, int nodes) {
    const double c = std::cos(sc.phi / 2.0);
    const double s = std::sin(sc.phi / 2.0);
    if (std::abs(c) < 0.05)
        throw std::domain_error(
            "parity_via_quadrature: integration frame degenerates near phi = pi");
    // The output-mode-2 slice pins the heralded mode at -s xi and the
    // coherent mode at c xi; integrate over the coherent Gaussian support.
    const double half_width = 8.0 / std::abs(c);
    const QuadRule qx = gauss_legendre(nodes, sc.dx / c - half_width, sc.dx / c + half_width);
    const QuadRule qp = gauss_legendre(nodes, sc.dp / c - half_width, sc.dp / c + half_width);

    double total = 0.0;
    for (std::size_t i = 0; i < qx.x.size(); ++i) {
        const double q1 = qx.x[i];
        double row = 0.0;
        for (std::size_t j = 0; j < qp.x.size(); ++j) {
            const double p1 = qp.x[j];
            const double coh = std::exp(-(c * q1 - sc.dx) * (c * q1 - sc.dx) -
                                        (c * p1 - sc.dp) * (c * p1 - sc.dp)) /
                               std::numbers::pi;
            row += qp.w[j] * coh * wigner_ng_unnormalized(sc.ng, -s * q1, -s * p1);
        }
        total += qx.w[i] * row;
    }
    return std::numbers::pi * total / p_ng;
}

} // namespace

double parity_via_quadrature(const MZIScenario& sc, int nodes, bool check_convergence) {
    sc.validate();
    const double p_ng = success_probability(sc.ng);
    if (p_ng <= 1e-12)
        throw std::domain_error("parity_via_quadrature: heralding probability vanishes");
    const double coarse = parity_quadrature_pass(sc, p_ng, nodes);
    if (!check_convergence) return coarse;
    const double fine = parity_quadrature_pass(sc, p_ng, 2 * nodes);
    if (std::abs(fine - coarse) > 1e-6)
        throw std::runtime_error("parity_via_quadrature: node doubling shifted the result by " +
                                 std::to_string(std::abs(fine - coarse)));
    return fine;
}

double dparity_dphi(const MZIScenario& sc, double h) {
    return dparity_dphi(sc, h, success_probability(sc.ng));
}

double dparity_dphi(const MZIScenario& sc, double h, double p_ng) {
    if (!(h > 0.0)) throw std::invalid_argument("dparity_dphi: step must be positive");
    auto central = [&](double step) {
        MZIScenario plus = sc;
        plus.phi = sc.phi + step;
        MZIScenario minus = sc;
        minus.phi = sc.phi - step;
        return (parity_expectation(plus, p_ng) - parity_expectation(minus, p_ng)) / (2.0 * step);
    };
    const double d_h = central(h);
    const double d_h2 = central(h / 2.0);
    return (4.0 * d_h2 - d_h) / 3.0;
}

Sensitivity phase_sensitivity(const MZIScenario& sc) {
    const double p_ng = success_probability(sc.ng);
    if (p_ng <= 1e-12)
        throw std::domain_error("phase_sensitivity: heralding probability vanishes");
    const double parity = parity_expectation(sc, p_ng);
    const double slope = dparity_dphi(sc, 1e-5, p_ng);
    if (std::abs(slope) <= 1e-12)
        return Sensitivity{std::numeric_limits<double>::infinity(), true};
    return Sensitivity{std::sqrt(std::max(0.0, 1.0 - parity * parity)) / std::abs(slope), false};
}

DiffResult sensitivity_diff(const MZIScenario& sc) {
    const Sensitivity ng = phase_sensitivity(sc);
    const Sensitivity svs = phase_sensitivity(baseline_of(sc));
    if (ng.divergent || svs.divergent)
        return DiffResult{std::numeric_limits<double>::quiet_NaN(), false};
    return DiffResult{svs.delta_phi - ng.delta_phi, true};
}

DiffResult figure_of_merit(const MZIScenario& sc) {
    const DiffResult diff = sensitivity_diff(sc);
    if (!diff.defined) return diff;
    return DiffResult{success_probability(sc.ng) * diff.value, true};
}

} // namespace ngmzi
