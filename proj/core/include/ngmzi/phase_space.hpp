#pragma once

#include "ngmzi/types.hpp"

namespace ngmzi {

/// Heralded-operation configuration: a squeezed vacuum (parameter r) is
/// mixed with the Fock state |m> on a beam splitter of transmissivity tau
/// and n photons are detected on the ancilla output.
struct NGOpParams {
    double r = 0.0;   ///< squeezing parameter, >= 0
    double tau = 1.0; ///< beam-splitter transmissivity, in [0, 1]
    int m = 0;        ///< injected Fock photon number, <= 10
    int n = 0;        ///< detected photon number, <= 24

    void validate() const; // throws std::invalid_argument
};

enum class NGOpKind { subtraction, addition, catalysis };

/// m < n: photon subtraction; m > n: photon addition; m == n: catalysis.
NGOpKind classify(const NGOpParams& p);

/// Scalars shared by every closed form: alpha = sinh r, beta = cosh r,
/// t = sqrt(tau), tp = sqrt(1 - tau), w1/w2 = cosh r +- tau sinh r,
/// w0 = e^{-2r}(w2 + tp^2 alpha^2)/(w1 - tp^2 alpha^2).
struct DerivedScalars {
    double alpha, beta, t, tp, w1, w2, w0;

    static DerivedScalars from(double r, double tau);
    static DerivedScalars from(const NGOpParams& p) { return from(p.r, p.tau); }
};

/// Full interferometer configuration: heralded input plus coherent
/// displacement (dx, dp) and interferometer phase phi.
struct MZIScenario {
    NGOpParams ng{};
    double dx = 2.0;
    double dp = 2.0;
    double phi = 0.01;

    void validate() const;
    /// Coherent amplitude alpha = (dx + i dp)/sqrt(2).
    cdouble coherent_alpha() const { return {dx / 1.4142135623730951, dp / 1.4142135623730951}; }
};

/// gamma = cos phi, delta = sin phi, w3/w4 = cosh r +- tau sinh r cos phi,
/// and the doubled displacement vector d = (2 dx, 2 dp).
struct ScenarioScalars {
    DerivedScalars s;
    double gamma, delta, w3, w4;
    double d[2];

    static ScenarioScalars from(const MZIScenario& sc);
};

// Quadratic/linear forms of the generating-function exponents. Row/column
// ordering of the auxiliary vector is (u1, v1, u2, v2) throughout.
Mat4 build_m1(const NGOpParams& p);
Vec4 build_m2(const NGOpParams& p, double q2, double p2);
Mat4 build_m3(const NGOpParams& p);
Mat4 build_m4(const MZIScenario& sc);
Mat4x2 build_m5(const MZIScenario& sc);
Diag2 build_m6(const MZIScenario& sc);

} // namespace ngmzi
