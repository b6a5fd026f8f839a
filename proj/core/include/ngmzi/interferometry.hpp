#pragma once

#include "ngmzi/phase_space.hpp"

namespace ngmzi {

/// Baseline configuration for the sensitivity difference: identical
/// r, dx, dp, phi with (m, n, tau) = (0, 0, 1), i.e. the plain squeezed
/// vacuum fed straight into the interferometer.
MZIScenario baseline_of(const MZIScenario& sc);

/// Expectation of the photon-number parity on output mode 2, from the
/// closed-form generating expression. Result clamped to [-1, 1] when the
/// excess is below 1e-9; larger excess raises ConsistencyError.
double parity_expectation(const MZIScenario& sc);
double parity_expectation(const MZIScenario& sc, double p_ng);

/// Same quantity by 2D quadrature of the phase-rotated input Wigner
/// product, sharing none of the parity-specific closed forms. Throws if
/// doubling the node count shifts the result by more than 1e-6.
double parity_via_quadrature(const MZIScenario& sc, int nodes = 120,
                             bool check_convergence = true);

/// Central difference with one Richardson extrapolation step.
double dparity_dphi(const MZIScenario& sc, double h = 1e-5);
double dparity_dphi(const MZIScenario& sc, double h, double p_ng);

struct Sensitivity {
    double delta_phi = 0.0; ///< +infinity when divergent
    bool divergent = false;
};

/// Error-propagation phase uncertainty sqrt(1 - <Pi>^2) / |d<Pi>/dphi|.
/// A vanishing derivative yields a flagged +infinity, not an exception,
/// so parameter sweeps stay total.
Sensitivity phase_sensitivity(const MZIScenario& sc);

struct DiffResult {
    double value = 0.0;
    bool defined = true; ///< false when either sensitivity diverged
};

/// delta_phi(baseline SVS) - delta_phi(heralded state); positive means the
/// non-Gaussian operation improves the sensitivity.
DiffResult sensitivity_diff(const MZIScenario& sc);

/// success_probability * sensitivity_diff.
DiffResult figure_of_merit(const MZIScenario& sc);

} // namespace ngmzi
