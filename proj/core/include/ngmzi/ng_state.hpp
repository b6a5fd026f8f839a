#pragma once

#include <vector>

#include "ngmzi/phase_space.hpp"

namespace ngmzi {

/// Probability that the heralding detector registers exactly n photons,
/// i.e. that the non-Gaussian operation succeeds. Always in (0, 1] up to
/// rounding; values outside raise ConsistencyError.
double success_probability(const NGOpParams& p);

/// [success_probability(r, tau, m, n) for n = 0 .. n_max].
std::vector<double> herald_distribution(int m, double r, double tau, int n_max);

/// Wigner function of the normalized heralded state at (q, p).
/// Requires a heralding probability above 1e-12.
double wigner_ng(const NGOpParams& params, double q, double p);

/// Unnormalized variant (no division by the success probability); the
/// parity pipeline and tests use it directly.
double wigner_ng_unnormalized(const NGOpParams& params, double q, double p);

/// Tensor-product Gauss-Legendre integral of wigner_ng over [-L, L]^2 with
/// L = 6 max(1, e^r); equals one for a correctly normalized state.
double wigner_norm_integral(const NGOpParams& params, int nodes_per_axis = 200);

} // namespace ngmzi
