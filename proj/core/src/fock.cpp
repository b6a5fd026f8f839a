#include "ngmzi/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ngmzi {

double FockVector::norm_sq() const {
    double s = 0.0;
    for (const auto& a : amps) s += std::norm(a);
    return s;
}

double FockVector::tail_mass() const {
    const std::size_t n = amps.size();
    double s = 0.0;
    if (n >= 1) s += std::norm(amps[n - 1]);
    if (n >= 2) s += std::norm(amps[n - 2]);
    return s;
}

TwoModeFock::TwoModeFock(int mode1_cutoff, int mode2_cutoff)
    : n1(mode1_cutoff), n2(mode2_cutoff),
      a(static_cast<std::size_t>(mode1_cutoff + 1) * (mode2_cutoff + 1)) {
    if (mode1_cutoff < 0 || mode2_cutoff < 0)
        throw std::invalid_argument("TwoModeFock: negative cutoff");
}

double TwoModeFock::norm_sq() const {
    double s = 0.0;
    for (const auto& v : a) s += std::norm(v);
    return s;
}

FockVector squeezed_vacuum_fock(double r, int cutoff) {
    if (cutoff < 2) throw std::invalid_argument("squeezed_vacuum_fock: cutoff must be >= 2");
    FockVector out;
    out.amps.assign(static_cast<std::size_t>(cutoff) + 1, cdouble{});
    const double th = std::tanh(r);
    // a_{2k} = (-tanh r)^k sqrt((2k)!) / (2^k k!) / sqrt(cosh r); the
    // successive ratio is -tanh(r) sqrt(2k (2k-1)) / (2k).
    double amp = 1.0 / std::sqrt(std::cosh(r));
    out.amps[0] = amp;
    for (int k = 1; 2 * k <= cutoff; ++k) {
        amp *= -th * std::sqrt(static_cast<double>(2 * k) * (2 * k - 1)) / (2.0 * k);
        out.amps[static_cast<std::size_t>(2 * k)] = amp;
    }
    const double tail = out.tail_mass();
    if (tail > 1e-10)
        throw std::invalid_argument("squeezed_vacuum_fock: cutoff " + std::to_string(cutoff) +
                                    " too small (tail mass " + std::to_string(tail) + ")");
    const double nrm = std::sqrt(out.norm_sq());
    for (auto& v : out.amps) v /= nrm;
    return out;
}

FockVector coherent_fock(cdouble alpha, int cutoff) {
    if (cutoff < 0) throw std::invalid_argument("coherent_fock: negative cutoff");
    FockVector out;
    out.amps.assign(static_cast<std::size_t>(cutoff) + 1, cdouble{});
    out.amps[0] = std::exp(-std::norm(alpha) / 2.0);
    for (int k = 1; k <= cutoff; ++k)
        out.amps[static_cast<std::size_t>(k)] =
            out.amps[static_cast<std::size_t>(k - 1)] * alpha / std::sqrt(static_cast<double>(k));
    return out;
}

TwoModeFock tensor_product(const FockVector& mode1, const FockVector& mode2) {
    TwoModeFock out(mode1.cutoff(), mode2.cutoff());
    for (int j = 0; j <= out.n1; ++j)
        for (int k = 0; k <= out.n2; ++k)
            out.at(j, k) = mode1.amps[static_cast<std::size_t>(j)] *
                           mode2.amps[static_cast<std::size_t>(k)];
    return out;
}

TwoModeFock apply_mixer(const TwoModeFock& st, const Mixer2& u) {
    // Exact per-block construction: U|j,k> is built by the raising
    // recurrence U|j,k> = (x a1+ + z a2+) U|j-1,k> / sqrt(j) starting from
    // U|0,k> = (y a1+ + w a2+)^k |00> / sqrt(k!). Intermediate rows are
    // amplitudes of normalized states, so the recursion is stable.

    // Total photon number is conserved; size the output by the occupied
    // support so repeated mixer applications do not inflate the array.
    int total = 0;
    std::vector<int> last_j(static_cast<std::size_t>(st.n2) + 1, -1);
    for (int k = 0; k <= st.n2; ++k)
        for (int j = 0; j <= st.n1; ++j)
            if (st.at(j, k) != cdouble{}) {
                last_j[static_cast<std::size_t>(k)] = j;
                total = std::max(total, j + k);
            }
    TwoModeFock out(total, total);

    std::vector<cdouble> row(static_cast<std::size_t>(total) + 1);
    std::vector<cdouble> next(static_cast<std::size_t>(total) + 1);

    for (int k = 0; k <= std::min(st.n2, total); ++k) {
        if (last_j[static_cast<std::size_t>(k)] < 0) continue;
        // base row: binomial expansion with sqrt-binomial amplitudes
        std::fill(row.begin(), row.end(), cdouble{});
        if (std::abs(u.w) >= std::abs(u.y)) {
            cdouble val = std::pow(u.w, k);
            row[0] = val;
            for (int q = 1; q <= k; ++q) {
                val *= u.y / u.w * std::sqrt(static_cast<double>(k - q + 1) / q);
                row[static_cast<std::size_t>(q)] = val;
            }
        } else {
            cdouble val = std::pow(u.y, k);
            row[static_cast<std::size_t>(k)] = val;
            for (int q = k - 1; q >= 0; --q) {
                val *= u.w / u.y * std::sqrt(static_cast<double>(q + 1) / (k - q));
                row[static_cast<std::size_t>(q)] = val;
            }
        }

        for (int j = 0; j <= last_j[static_cast<std::size_t>(k)]; ++j) {
            const int T = j + k;
            if (j > 0) {
                // raise: row <- (x a1+ + z a2+) row / sqrt(j)
                const double inv = 1.0 / std::sqrt(static_cast<double>(j));
                for (int jp = T; jp >= 0; --jp) {
                    cdouble acc{};
                    if (jp >= 1) acc += u.x * std::sqrt(static_cast<double>(jp)) *
                                        row[static_cast<std::size_t>(jp - 1)];
                    if (jp <= T - 1)
                        acc += u.z * std::sqrt(static_cast<double>(T - jp)) *
                               row[static_cast<std::size_t>(jp)];
                    next[static_cast<std::size_t>(jp)] = acc * inv;
                }
                std::swap(row, next);
            }
            const cdouble amp = st.at(j, k);
            if (amp != cdouble{}) {
                for (int jp = 0; jp <= T; ++jp)
                    out.at(jp, T - jp) += amp * row[static_cast<std::size_t>(jp)];
            }
        }
    }
    return out;
}

TwoModeFock beam_splitter_apply(const TwoModeFock& st, double tau) {
    if (!(tau >= 0.0 && tau <= 1.0))
        throw std::invalid_argument("beam_splitter_apply: tau must lie in [0, 1]");
    const double t = std::sqrt(tau);
    const double tp = std::sqrt(1.0 - tau);
    return apply_mixer(st, Mixer2{t, tp, -tp, t});
}

void apply_j3_phase(TwoModeFock& st, double phi) {
    for (int j = 0; j <= st.n1; ++j)
        for (int k = 0; k <= st.n2; ++k)
            st.at(j, k) *= std::polar(1.0, phi * (j - k) / 2.0);
}

HeraldOutcome herald(const TwoModeFock& st, int n) {
    if (n < 0) throw std::invalid_argument("herald: negative outcome");
    if (n > st.n2)
        throw std::domain_error("herald: outcome n = " + std::to_string(n) +
                                " lies beyond the state's photon support");
    HeraldOutcome out;
    out.state.amps.resize(static_cast<std::size_t>(st.n1) + 1);
    double prob = 0.0;
    for (int j = 0; j <= st.n1; ++j) {
        out.state.amps[static_cast<std::size_t>(j)] = st.at(j, n);
        prob += std::norm(st.at(j, n));
    }
    if (prob < 1e-14)
        throw std::domain_error("herald: outcome n = " + std::to_string(n) +
                                " has vanishing probability");
    const double inv = 1.0 / std::sqrt(prob);
    for (auto& a : out.state.amps) a *= inv;
    out.probability = prob;
    return out;
}

HeraldOutcome heralded_state(const NGOpParams& p, int cutoff) {
    p.validate();
    const FockVector svs = squeezed_vacuum_fock(p.r, cutoff);
    FockVector fock_m;
    fock_m.amps.assign(static_cast<std::size_t>(p.m) + 1, cdouble{});
    fock_m.amps[static_cast<std::size_t>(p.m)] = 1.0;
    TwoModeFock joint = tensor_product(svs, fock_m);
    joint = beam_splitter_apply(joint, p.tau);
    return herald(joint, p.n);
}

FockVector ideal_ps(const FockVector& st, int n) {
    FockVector out = st;
    for (int pass = 0; pass < n; ++pass) {
        for (int k = 0; k < out.cutoff(); ++k)
            out.amps[static_cast<std::size_t>(k)] =
                std::sqrt(static_cast<double>(k + 1)) * out.amps[static_cast<std::size_t>(k + 1)];
        out.amps.back() = 0.0;
    }
    const double nrm = out.norm_sq();
    if (nrm < 1e-14) throw std::domain_error("ideal_ps: annihilation yields the zero vector");
    const double inv = 1.0 / std::sqrt(nrm);
    for (auto& a : out.amps) a *= inv;
    return out;
}

FockVector ideal_pa(const FockVector& st, int m) {
    FockVector out = st;
    for (int pass = 0; pass < m; ++pass) {
        out.amps.push_back(cdouble{});
        for (int k = out.cutoff(); k >= 1; --k)
            out.amps[static_cast<std::size_t>(k)] =
                std::sqrt(static_cast<double>(k)) * out.amps[static_cast<std::size_t>(k - 1)];
        out.amps[0] = 0.0;
    }
    const double inv = 1.0 / std::sqrt(out.norm_sq());
    for (auto& a : out.amps) a *= inv;
    return out;
}

double parity_of(const FockVector& st) {
    double s = 0.0;
    for (int k = 0; k <= st.cutoff(); ++k) {
        const double w = std::norm(st.amps[static_cast<std::size_t>(k)]);
        s += (k % 2 == 0) ? w : -w;
    }
    return s;
}

double mzi_parity(const FockVector& signal, cdouble alpha, double phi, int coherent_cutoff) {
    const FockVector coh = coherent_fock(alpha, coherent_cutoff);
    if (coh.tail_mass() > 1e-10)
        throw std::invalid_argument("mzi_parity: coherent cutoff too small (tail mass " +
                                    std::to_string(coh.tail_mass()) + ")");
    TwoModeFock joint = tensor_product(coh, signal);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const cdouble mi{0.0, -inv_sqrt2};
    const cdouble pi_{0.0, inv_sqrt2};
    joint = apply_mixer(joint, Mixer2{inv_sqrt2, mi, mi, inv_sqrt2});  // exp(-i(pi/2)J1)
    apply_j3_phase(joint, phi);
    joint = apply_mixer(joint, Mixer2{inv_sqrt2, pi_, pi_, inv_sqrt2}); // exp(+i(pi/2)J1)

    double par = 0.0;
    for (int j = 0; j <= joint.n1; ++j)
        for (int k = 0; k <= joint.n2; ++k) {
            const double w = std::norm(joint.at(j, k));
            par += (k % 2 == 0) ? w : -w;
        }
    return par;
}

double wigner_displaced_parity(const FockVector& st, double q, double p) {
    const cdouble beta{-q / std::sqrt(2.0), -p / std::sqrt(2.0)};
    const int pad = std::max(24, static_cast<int>(std::ceil(8.0 * std::norm(beta) + 16.0)));
    const int out_cut = st.cutoff() + pad;

    // D(beta)|k> = (a+ - conj(beta))^k D(beta)|0> / sqrt(k!), built row by
    // row; every row is a normalized state, so amplitudes stay bounded.
    std::vector<cdouble> row(static_cast<std::size_t>(out_cut) + 1);
    std::vector<cdouble> next(static_cast<std::size_t>(out_cut) + 1);
    row[0] = std::exp(-std::norm(beta) / 2.0);
    for (int j = 1; j <= out_cut; ++j)
        row[static_cast<std::size_t>(j)] =
            row[static_cast<std::size_t>(j - 1)] * beta / std::sqrt(static_cast<double>(j));

    std::vector<cdouble> displaced(static_cast<std::size_t>(out_cut) + 1);
    const cdouble bconj = std::conj(beta);
    for (int k = 0; k <= st.cutoff(); ++k) {
        if (k > 0) {
            const double inv = 1.0 / std::sqrt(static_cast<double>(k));
            for (int j = out_cut; j >= 0; --j) {
                cdouble acc = -bconj * row[static_cast<std::size_t>(j)];
                if (j >= 1)
                    acc += std::sqrt(static_cast<double>(j)) * row[static_cast<std::size_t>(j - 1)];
                next[static_cast<std::size_t>(j)] = acc * inv;
            }
            std::swap(row, next);
        }
        const cdouble amp = st.amps[static_cast<std::size_t>(k)];
        if (amp != cdouble{})
            for (int j = 0; j <= out_cut; ++j)
                displaced[static_cast<std::size_t>(j)] += amp * row[static_cast<std::size_t>(j)];
    }

    double par = 0.0;
    double nrm = 0.0;
    for (int j = 0; j <= out_cut; ++j) {
        const double w = std::norm(displaced[static_cast<std::size_t>(j)]);
        nrm += w;
        par += (j % 2 == 0) ? w : -w;
    }
    if (std::abs(nrm - 1.0) > 1e-9)
        throw std::invalid_argument("wigner_displaced_parity: displaced-state truncation lost " +
                                    std::to_string(std::abs(nrm - 1.0)) + " of the norm");
    return par / std::numbers::pi;
}

double fock_wigner(int m, double q, double p) {
    if (m < 0) throw std::invalid_argument("fock_wigner: negative photon number");
    const double x = 2.0 * (q * q + p * p);
    // Laguerre recurrence (k+1) L_{k+1} = (2k+1-x) L_k - k L_{k-1}
    double lkm1 = 1.0;
    double lk = 1.0 - x;
    if (m == 0) lk = 1.0;
    for (int k = 1; k < m; ++k) {
        const double lkp1 = ((2.0 * k + 1.0 - x) * lk - k * lkm1) / (k + 1.0);
        lkm1 = lk;
        lk = lkp1;
    }
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    return sign / std::numbers::pi * std::exp(-q * q - p * p) * lk;
}

int suggest_cutoff(double r, cdouble alpha) {
    const double sh = std::sinh(r);
    return static_cast<int>(std::ceil(8.0 * (sh * sh + std::norm(alpha)) + 20.0));
}

double oracle_herald_probability(const NGOpParams& p) {
    int cutoff = std::max(suggest_cutoff(p.r), 2 * (p.m + p.n) + 8);
    for (int attempt = 0; attempt < 8; ++attempt) {
        try {
            return heralded_state(p, cutoff).probability;
        } catch (const std::invalid_argument&) {
            cutoff *= 2; // tail mass too large
        }
    }
    throw std::runtime_error("oracle_herald_probability: cutoff rule failed to converge");
}

double oracle_mzi_parity(const MZIScenario& sc) {
    const cdouble alpha = sc.coherent_alpha();
    int sig_cut = std::max(suggest_cutoff(sc.ng.r), 2 * (sc.ng.m + sc.ng.n) + 8);
    int coh_cut = suggest_cutoff(0.0, alpha);
    for (int attempt = 0; attempt < 8; ++attempt) {
        try {
            const HeraldOutcome h = heralded_state(sc.ng, sig_cut);
            return mzi_parity(h.state, alpha, sc.phi, coh_cut);
        } catch (const std::invalid_argument&) {
            sig_cut *= 2;
            coh_cut *= 2;
        }
    }
    throw std::runtime_error("oracle_mzi_parity: cutoff rule failed to converge");
}

} // namespace ngmzi
