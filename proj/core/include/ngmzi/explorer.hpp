#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ngmzi/interferometry.hpp"
#include "ngmzi/phase_space.hpp"

namespace ngmzi {

enum class SweepAxis { r, tau, phi };

/// One-dimensional parameter sweep over a list of (m, n) states; the fixed
/// scenario supplies every coordinate except the swept axis.
struct SweepSpec {
    SweepAxis axis = SweepAxis::r;
    double lo = 0.0;
    double hi = 1.0;
    int points = 2;
    MZIScenario fixed{};
    std::vector<std::pair<int, int>> states{{0, 1}};

    void validate() const;
};

/// Dense (r, tau) grid for a single state at fixed phi, dx, dp.
struct GridSpec {
    double r_lo = 0.0, r_hi = 2.0;
    int r_points = 2;
    double tau_lo = 0.0, tau_hi = 1.0;
    int tau_points = 2;
    double phi = 0.01, dx = 2.0, dp = 2.0;
    std::pair<int, int> state{0, 1};

    void validate() const;
};

/// One evaluated scenario. Undefined quantities are quiet NaN with the
/// reason recorded in `flags` (semicolon-joined), never an abort.
struct Record {
    int m = 0, n = 0;
    double r = 0, tau = 0, phi = 0, dx = 0, dp = 0;
    double p_ng = 0;
    double parity = 0;
    double dparity = 0;
    double delta_phi = 0;
    double delta_phi_svs = 0;
    double d_ng = 0;
    double pxd = 0;
    std::string flags;
};

/// Evaluates one scenario into a Record; `delta_phi_svs` is the baseline
/// sensitivity for the matching (r, phi, dx, dp).
Record evaluate_scenario(const MZIScenario& sc, const Sensitivity& baseline);

/// Deterministic table, state-major then axis-minor; cells evaluate
/// concurrently (`workers` = 0 picks NGMZI_THREADS or the hardware count).
std::vector<Record> run_sweep(const SweepSpec& spec, int workers = 0);
std::vector<Record> run_grid(const GridSpec& spec, int workers = 0);

enum class Objective { D, PxD };

struct OptResult {
    double tau = 0.0;
    double value = 0.0;
    bool found = false;
    std::string flags;
};

/// Maximizes D or P x D over tau in [1e-3, 1 - 1e-3]: 101-point coarse
/// grid, then golden-section refinement to |dtau| < 1e-4. Ties break
/// toward smaller tau; a refinement that cannot beat the coarse incumbent
/// falls back to it (flagged).
OptResult optimize_tau(std::pair<int, int> state, double r, double phi, double dx, double dp,
                       Objective objective);

/// Worker count: NGMZI_THREADS when set (clamped to >= 1), otherwise the
/// hardware concurrency.
int worker_count();

/// Runs fn(i) for i in [0, count) across `workers` threads; results must
/// be written to independent slots by index.
void parallel_for(int count, int workers, const std::function<void(int)>& fn);

} // namespace ngmzi
