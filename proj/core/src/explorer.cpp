#include "ngmzi/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "ngmzi/ng_state.hpp"

namespace ngmzi {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void append_flag(std::string& flags, const char* flag) {
    if (!flags.empty()) flags += ';';
    flags += flag;
}

/// Byte-exact key for the baseline cache.
struct BaselineKey {
    double r, phi, dx, dp;
    bool operator<(const BaselineKey& o) const {
        return std::memcmp(this, &o, sizeof(BaselineKey)) < 0;
    }
};

using BaselineCache = std::map<BaselineKey, Sensitivity>;

BaselineCache compute_baselines(const std::vector<MZIScenario>& cells, int workers) {
    std::vector<BaselineKey> keys;
    keys.reserve(cells.size());
    for (const auto& sc : cells) keys.push_back({sc.ng.r, sc.phi, sc.dx, sc.dp});
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end(),
                           [](const BaselineKey& a, const BaselineKey& b) {
                               return std::memcmp(&a, &b, sizeof(BaselineKey)) == 0;
                           }),
               keys.end());

    std::vector<Sensitivity> values(keys.size());
    parallel_for(static_cast<int>(keys.size()), workers, [&](int i) {
        const BaselineKey& k = keys[static_cast<std::size_t>(i)];
        MZIScenario base;
        base.ng = NGOpParams{k.r, 1.0, 0, 0};
        base.dx = k.dx;
        base.dp = k.dp;
        base.phi = k.phi;
        values[static_cast<std::size_t>(i)] = phase_sensitivity(base);
    });

    BaselineCache cache;
    for (std::size_t i = 0; i < keys.size(); ++i) cache.emplace(keys[i], values[i]);
    return cache;
}

std::vector<Record> evaluate_cells(const std::vector<MZIScenario>& cells, int workers) {
    const BaselineCache baselines = compute_baselines(cells, workers);
    std::vector<Record> records(cells.size());
    parallel_for(static_cast<int>(cells.size()), workers, [&](int i) {
        const MZIScenario& sc = cells[static_cast<std::size_t>(i)];
        const Sensitivity base =
            baselines.at(BaselineKey{sc.ng.r, sc.phi, sc.dx, sc.dp});
        records[static_cast<std::size_t>(i)] = evaluate_scenario(sc, base);
    });
    return records;
}

} // namespace

void SweepSpec::validate() const {
    if (!(lo < hi)) throw std::invalid_argument("SweepSpec: need lo < hi");
    if (points < 2) throw std::invalid_argument("SweepSpec: need at least two points");
    if (axis == SweepAxis::tau && (lo < 0.0 || hi > 1.0))
        throw std::invalid_argument("SweepSpec: tau range must stay inside [0, 1]");
    if (states.empty()) throw std::invalid_argument("SweepSpec: no states requested");
}

void GridSpec::validate() const {
    if (!(r_lo < r_hi) || !(tau_lo < tau_hi))
        throw std::invalid_argument("GridSpec: need lo < hi on both axes");
    if (r_points < 2 || tau_points < 2)
        throw std::invalid_argument("GridSpec: need at least two points per axis");
    if (tau_lo < 0.0 || tau_hi > 1.0)
        throw std::invalid_argument("GridSpec: tau range must stay inside [0, 1]");
}

Record evaluate_scenario(const MZIScenario& sc, const Sensitivity& baseline) {
    Record rec;
    rec.m = sc.ng.m;
    rec.n = sc.ng.n;
    rec.r = sc.ng.r;
    rec.tau = sc.ng.tau;
    rec.phi = sc.phi;
    rec.dx = sc.dx;
    rec.dp = sc.dp;
    rec.delta_phi_svs = baseline.divergent ? std::numeric_limits<double>::infinity()
                                           : baseline.delta_phi;

    rec.p_ng = success_probability(sc.ng);
    if (rec.p_ng <= 1e-12) {
        rec.parity = rec.dparity = rec.delta_phi = rec.d_ng = rec.pxd = kNaN;
        append_flag(rec.flags, "undefined_state");
        return rec;
    }

    rec.parity = parity_expectation(sc, rec.p_ng);
    rec.dparity = dparity_dphi(sc, 1e-5, rec.p_ng);
    bool divergent = false;
    if (std::abs(rec.dparity) <= 1e-12) {
        rec.delta_phi = std::numeric_limits<double>::infinity();
        divergent = true;
        append_flag(rec.flags, "divergent");
    } else {
        rec.delta_phi =
            std::sqrt(std::max(0.0, 1.0 - rec.parity * rec.parity)) / std::abs(rec.dparity);
    }
    if (baseline.divergent) append_flag(rec.flags, "baseline_divergent");

    if (divergent || baseline.divergent) {
        rec.d_ng = kNaN;
        rec.pxd = kNaN;
        append_flag(rec.flags, "undefined_diff");
    } else {
        rec.d_ng = baseline.delta_phi - rec.delta_phi;
        rec.pxd = rec.p_ng * rec.d_ng;
    }
    return rec;
}

std::vector<Record> run_sweep(const SweepSpec& spec, int workers) {
    spec.validate();
    std::vector<MZIScenario> cells;
    cells.reserve(spec.states.size() * static_cast<std::size_t>(spec.points));
    for (const auto& [m, n] : spec.states) {
        for (int i = 0; i < spec.points; ++i) {
            const double x = spec.lo + (spec.hi - spec.lo) * i / (spec.points - 1);
            MZIScenario sc = spec.fixed;
            sc.ng.m = m;
            sc.ng.n = n;
            switch (spec.axis) {
                case SweepAxis::r: sc.ng.r = x; break;
                case SweepAxis::tau: sc.ng.tau = x; break;
                case SweepAxis::phi: sc.phi = x; break;
            }
            sc.validate();
            cells.push_back(sc);
        }
    }
    return evaluate_cells(cells, workers);
}

std::vector<Record> run_grid(const GridSpec& spec, int workers) {
    spec.validate();
    std::vector<MZIScenario> cells;
    cells.reserve(static_cast<std::size_t>(spec.r_points) * spec.tau_points);
    for (int i = 0; i < spec.r_points; ++i) {
        const double r = spec.r_lo + (spec.r_hi - spec.r_lo) * i / (spec.r_points - 1);
        for (int j = 0; j < spec.tau_points; ++j) {
            const double tau =
                spec.tau_lo + (spec.tau_hi - spec.tau_lo) * j / (spec.tau_points - 1);
            MZIScenario sc;
            sc.ng = NGOpParams{r, tau, spec.state.first, spec.state.second};
            sc.dx = spec.dx;
            sc.dp = spec.dp;
            sc.phi = spec.phi;
            sc.validate();
            cells.push_back(sc);
        }
    }
    return evaluate_cells(cells, workers);
}

namespace {

/// Objective evaluation against a precomputed baseline; unattainable
/// points come back undefined.
bool eval_objective(std::pair<int, int> state, double r, double phi, double dx, double dp,
                    Objective objective, const Sensitivity& baseline, double tau, double& out) {
    if (baseline.divergent) return false;
    MZIScenario sc;
    sc.ng = NGOpParams{r, tau, state.first, state.second};
    sc.dx = dx;
    sc.dp = dp;
    sc.phi = phi;
    const double p_ng = success_probability(sc.ng);
    if (p_ng <= 1e-12) return false;
    const double parity = parity_expectation(sc, p_ng);
    const double slope = dparity_dphi(sc, 1e-5, p_ng);
    if (std::abs(slope) <= 1e-12) return false;
    const double delta_phi =
        std::sqrt(std::max(0.0, 1.0 - parity * parity)) / std::abs(slope);
    out = baseline.delta_phi - delta_phi;
    if (objective == Objective::PxD) out *= p_ng;
    return true;
}

} // namespace

OptResult optimize_tau(std::pair<int, int> state, double r, double phi, double dx, double dp,
                       Objective objective) {
    constexpr double kLo = 1e-3;
    constexpr double kHi = 1.0 - 1e-3;
    constexpr int kCoarse = 101;

    MZIScenario base_sc;
    base_sc.ng = NGOpParams{r, 1.0, 0, 0};
    base_sc.dx = dx;
    base_sc.dp = dp;
    base_sc.phi = phi;
    const Sensitivity baseline = phase_sensitivity(base_sc);

    OptResult best;
    std::vector<double> taus(kCoarse);
    std::vector<double> vals(kCoarse, kNaN);
    std::vector<char> ok(kCoarse, 0);
    for (int i = 0; i < kCoarse; ++i) taus[static_cast<std::size_t>(i)] =
        kLo + (kHi - kLo) * i / (kCoarse - 1);
    parallel_for(kCoarse, 0, [&](int i) {
        double v;
        if (eval_objective(state, r, phi, dx, dp, objective, baseline,
                           taus[static_cast<std::size_t>(i)], v)) {
            vals[static_cast<std::size_t>(i)] = v;
            ok[static_cast<std::size_t>(i)] = 1;
        }
    });

    int best_i = -1;
    for (int i = 0; i < kCoarse; ++i)
        if (ok[static_cast<std::size_t>(i)] &&
            (best_i < 0 || vals[static_cast<std::size_t>(i)] > vals[static_cast<std::size_t>(best_i)]))
            best_i = i; // strict > keeps ties at the smaller tau

    if (best_i < 0) {
        best.flags = "no_optimum";
        return best;
    }
    best.found = true;
    best.tau = taus[static_cast<std::size_t>(best_i)];
    best.value = vals[static_cast<std::size_t>(best_i)];

    // golden-section refinement inside the bracketing coarse cells
    double a = taus[static_cast<std::size_t>(std::max(0, best_i - 1))];
    double b = taus[static_cast<std::size_t>(std::min(kCoarse - 1, best_i + 1))];
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc, fd;
    if (!eval_objective(state, r, phi, dx, dp, objective, baseline, c, fc) ||
        !eval_objective(state, r, phi, dx, dp, objective, baseline, d, fd)) {
        best.flags = "grid_incumbent";
        return best;
    }
    while (b - a > 1e-4) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            if (!eval_objective(state, r, phi, dx, dp, objective, baseline, c, fc)) {
                best.flags = "grid_incumbent";
                return best;
            }
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            if (!eval_objective(state, r, phi, dx, dp, objective, baseline, d, fd)) {
                best.flags = "grid_incumbent";
                return best;
            }
        }
    }
    const double t_ref = fc > fd ? c : d;
    const double v_ref = fc > fd ? fc : fd;
    if (v_ref > best.value) {
        best.tau = t_ref;
        best.value = v_ref;
    } else if (v_ref < best.value) {
        best.flags = "grid_incumbent"; // refinement never worsens the incumbent
    }
    return best;
}

int worker_count() {
    if (const char* env = std::getenv("NGMZI_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
        return 1;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

void parallel_for(int count, int workers, const std::function<void(int)>& fn) {
    if (count <= 0) return;
    if (workers <= 0) workers = worker_count();
    workers = std::min(workers, count);
    if (workers == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> cursor{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const int i = cursor.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace ngmzi
