#include "ngmzi/ng_state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

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

double success_probability(const NGOpParams& p) {
    p.validate();
    const DerivedScalars d = DerivedScalars::from(p);
    const double scale = -1.0 / (4.0 * d.w1 * d.w2);

    QuadExponent e;
    e.M = build_m3(p);
    for (auto& v : e.M.a) v *= scale;
    const MultiSeries s = series_from_exponent(e, DegreeCaps{p.m, p.n});
    const double val = real_checked(apply_f1(s, p.m, p.n), "success_probability");

    const double prob = std::numbers::pi / std::sqrt(d.w1 * d.w2) * val;
    // sub-rounding negatives at degenerate boundaries are not bugs
    if (prob < -1e-12 || prob > 1.0 + 1e-9)
        throw ConsistencyError("success_probability: value " + std::to_string(prob) +
                               " outside [0, 1]");
    return std::clamp(prob, 0.0, 1.0);
}

std::vector<double> herald_distribution(int m, double r, double tau, int n_max) {
    std::vector<double> dist;
    dist.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n)
        dist.push_back(success_probability(NGOpParams{r, tau, m, n}));
    return dist;
}

double wigner_ng_unnormalized(const NGOpParams& params, double q, double p) {
    params.validate();
    const DerivedScalars d = DerivedScalars::from(params);
    const double scale = -1.0 / (d.w1 * d.w2);

    QuadExponent e;
    e.M = build_m1(params);
    for (auto& v : e.M.a) v *= scale;
    e.L = build_m2(params, q, p);
    for (auto& v : e.L) v *= scale;

    const MultiSeries s = series_from_exponent(e, DegreeCaps{params.m, params.n});
    const double val = real_checked(apply_f1(s, params.m, params.n), "wigner_ng");
    const double gauss =
        std::exp(-(d.w1 * d.w1 * q * q + d.w2 * d.w2 * p * p) / (d.w1 * d.w2));
    return gauss / std::sqrt(d.w1 * d.w2) * val;
}

double wigner_ng(const NGOpParams& params, double q, double p) {
    const double prob = success_probability(params);
    if (prob <= 1e-12)
        throw std::domain_error("wigner_ng: heralding probability vanishes; state undefined");
    return wigner_ng_unnormalized(params, q, p) / prob;
}

double wigner_norm_integral(const NGOpParams& params, int nodes_per_axis) {
    const double prob = success_probability(params);
    if (prob <= 1e-12)
        throw std::domain_error("wigner_norm_integral: heralding probability vanishes");
    const double L = 6.0 * std::max(1.0, std::exp(params.r));
    const QuadRule rule = gauss_legendre(nodes_per_axis, -L, L);
    double total = 0.0;
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < rule.x.size(); ++j)
            row += rule.w[j] * wigner_ng_unnormalized(params, rule.x[i], rule.x[j]);
        total += rule.w[i] * row;
    }
    return total / prob;
}

} // namespace ngmzi
