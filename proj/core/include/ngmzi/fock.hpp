#pragma once

#include <vector>

#include "ngmzi/phase_space.hpp"
#include "ngmzi/types.hpp"

namespace ngmzi {

/// Truncated photon-number amplitude vector a_0 .. a_cutoff.
struct FockVector {
    std::vector<cdouble> amps;

    int cutoff() const { return static_cast<int>(amps.size()) - 1; }
    double norm_sq() const;
    /// |a_N|^2 + |a_{N-1}|^2, the cutoff-adequacy indicator.
    double tail_mass() const;
};

/// Two-mode amplitude matrix a_{jk}, j <= n1, k <= n2.
struct TwoModeFock {
    int n1 = 0;
    int n2 = 0;
    std::vector<cdouble> a;

    TwoModeFock() = default;
    TwoModeFock(int mode1_cutoff, int mode2_cutoff);
    cdouble& at(int j, int k) { return a[static_cast<std::size_t>(j) * (n2 + 1) + k]; }
    const cdouble& at(int j, int k) const {
        return a[static_cast<std::size_t>(j) * (n2 + 1) + k];
    }
    double norm_sq() const;
};

/// Two-mode linear-optics element acting on creation operators as
/// a1+ -> x a1+ + z a2+ and a2+ -> y a1+ + w a2+ (the matrix [[x,y],[z,w]]
/// must be unitary for the map to be one).
struct Mixer2 {
    cdouble x, y, z, w;
};

/// Squeezed vacuum exp[r(a^2 - a+^2)/2] |0>, renormalized after truncation.
/// Throws when the truncated tail mass exceeds 1e-10.
FockVector squeezed_vacuum_fock(double r, int cutoff);

/// Coherent state amplitudes e^{-|alpha|^2/2} alpha^k / sqrt(k!).
FockVector coherent_fock(cdouble alpha, int cutoff);

TwoModeFock tensor_product(const FockVector& mode1, const FockVector& mode2);

/// Exact blockwise application (per total photon number) of a two-mode
/// mixer; unitary within each block, no matrix-exponential tolerance.
TwoModeFock apply_mixer(const TwoModeFock& st, const Mixer2& u);

/// Beam splitter of transmissivity tau with single-photon convention
/// |1,0> -> sqrt(tau)|1,0> - sqrt(1-tau)|0,1>.
TwoModeFock beam_splitter_apply(const TwoModeFock& st, double tau);

/// Diagonal phase exp(i phi J3): |j,k> -> exp(i phi (j - k)/2) |j,k>.
void apply_j3_phase(TwoModeFock& st, double phi);

struct HeraldOutcome {
    FockVector state; ///< normalized conditional state of mode 1
    double probability = 0.0;
};

/// Projects mode 2 onto |n><n|. Probability below 1e-14 throws
/// std::domain_error (herald impossible).
HeraldOutcome herald(const TwoModeFock& st, int n);

/// Full heralding chain: squeezed vacuum (x) |m>, beam splitter, detect n.
HeraldOutcome heralded_state(const NGOpParams& p, int cutoff);

/// n-fold annihilation (ideal photon subtraction), renormalized.
FockVector ideal_ps(const FockVector& st, int n);
/// m-fold creation (ideal photon addition), renormalized.
FockVector ideal_pa(const FockVector& st, int m);

/// Sum_k (-1)^k |a_k|^2.
double parity_of(const FockVector& st);

/// Parity on output mode 2 of the interferometer: coherent (x) signal,
/// 50:50 splitter, phase exp(i phi J3), inverse splitter, then the parity
/// sum. `coherent_cutoff` truncates the coherent mode.
double mzi_parity(const FockVector& signal, cdouble alpha, double phi, int coherent_cutoff);

/// Wigner value by the displaced-parity identity: displaces by (-q, -p)
/// and returns (1/pi) Sum (-1)^k |amps_k|^2.
double wigner_displaced_parity(const FockVector& st, double q, double p);

/// Closed-form Fock-state Wigner ((-1)^m/pi) e^{-q^2-p^2} L_m(2(q^2+p^2))
/// via a stable Laguerre recurrence.
double fock_wigner(int m, double q, double p);

/// Cutoff start value ceil(8 (sinh^2 r + |alpha|^2) + 20); callers double
/// it until the tail mass drops below 1e-10.
int suggest_cutoff(double r, cdouble alpha = cdouble{});

/// Herald probability with the automatic cutoff-doubling rule.
double oracle_herald_probability(const NGOpParams& p);

/// Closed pipeline: heralded state, then MZI parity, with the automatic
/// cutoff-doubling rule applied to both modes.
double oracle_mzi_parity(const MZIScenario& sc);

} // namespace ngmzi
