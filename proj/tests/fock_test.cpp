#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ngmzi/fock.hpp"
#include "ngmzi/ng_state.hpp"

using namespace ngmzi;

namespace {
cdouble cd(double re, double im = 0.0) { return {re, im}; }
NGOpParams prm(double r, double tau, int m, int n) { return NGOpParams{r, tau, m, n}; }
} // namespace

TEST_SUITE("fock_oracle") {

TEST_CASE("squeezed vacuum basics") {
    const FockVector vac = squeezed_vacuum_fock(0.0, 10);
    CHECK(std::abs(vac.amps[0] - cd(1.0)) < 1e-15);
    for (int k = 1; k <= 10; ++k) CHECK(std::abs(vac.amps[static_cast<std::size_t>(k)]) == 0.0);

    const double r = 0.5;
    const FockVector svs = squeezed_vacuum_fock(r, 40);
    CHECK(svs.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
    double mean = 0.0;
    for (int k = 0; k <= svs.cutoff(); ++k)
        mean += k * std::norm(svs.amps[static_cast<std::size_t>(k)]);
    CHECK(mean == doctest::Approx(std::sinh(r) * std::sinh(r)).epsilon(1e-8));
    for (int k = 1; k <= svs.cutoff(); k += 2)
        CHECK(std::abs(svs.amps[static_cast<std::size_t>(k)]) == 0.0);

    CHECK_THROWS_AS((void)squeezed_vacuum_fock(1.5, 6), std::invalid_argument);
}

TEST_CASE("coherent state basics") {
    const FockVector vac = coherent_fock(0.0, 10);
    CHECK(std::abs(vac.amps[0] - cd(1.0)) < 1e-15);

    const cdouble alpha{2.0 / std::sqrt(2.0), 2.0 / std::sqrt(2.0)}; // dx = dp = 2
    const FockVector coh = coherent_fock(alpha, 60);
    CHECK(coh.norm_sq() == doctest::Approx(1.0).epsilon(1e-10));
    double mean = 0.0;
    for (int k = 0; k <= coh.cutoff(); ++k)
        mean += k * std::norm(coh.amps[static_cast<std::size_t>(k)]);
    CHECK(mean == doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("beam splitter is the identity at tau = 1") {
    const FockVector svs = squeezed_vacuum_fock(0.5, 40);
    FockVector one;
    one.amps = {0.0, 1.0};
    const TwoModeFock joint = tensor_product(svs, one);
    const TwoModeFock out = beam_splitter_apply(joint, 1.0);
    for (int j = 0; j <= joint.n1; ++j)
        for (int k = 0; k <= joint.n2; ++k)
            CHECK(std::abs(out.at(j, k) - joint.at(j, k)) < 1e-12);
}

TEST_CASE("single-photon splitter convention") {
    TwoModeFock st(1, 1);
    st.at(1, 0) = 1.0;
    const double tau = 0.7;
    const TwoModeFock out = beam_splitter_apply(st, tau);
    CHECK(out.at(1, 0).real() == doctest::Approx(std::sqrt(tau)).epsilon(1e-15));
    CHECK(out.at(0, 1).real() == doctest::Approx(-std::sqrt(1.0 - tau)).epsilon(1e-15));
}

TEST_CASE("mixers preserve the norm and the total-photon distribution") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    TwoModeFock st(12, 12);
    for (auto& a : st.a) a = cdouble{u(rng), u(rng)};
    const double inv = 1.0 / std::sqrt(st.norm_sq());
    for (auto& a : st.a) a *= inv;

    const TwoModeFock out = beam_splitter_apply(st, 0.37);
    CHECK(out.norm_sq() == doctest::Approx(1.0).epsilon(1e-10));

    std::vector<double> before(64, 0.0), after(64, 0.0);
    for (int j = 0; j <= st.n1; ++j)
        for (int k = 0; k <= st.n2; ++k)
            before[static_cast<std::size_t>(j + k)] += std::norm(st.at(j, k));
    for (int j = 0; j <= out.n1; ++j)
        for (int k = 0; k <= out.n2; ++k)
            after[static_cast<std::size_t>(j + k)] += std::norm(out.at(j, k));
    for (std::size_t t = 0; t < before.size(); ++t)
        CHECK(after[t] == doctest::Approx(before[t]).epsilon(1e-10));
}

TEST_CASE("herald trivial cases") {
    TwoModeFock vacvac(2, 2);
    vacvac.at(0, 0) = 1.0;
    const HeraldOutcome out = herald(beam_splitter_apply(vacvac, 0.5), 0);
    CHECK(out.probability == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(out.state.amps[0] - cd(1.0)) < 1e-12);

    // single ancilla photon on a vacuum signal: stays in the ancilla with
    // amplitude sqrt(tau), hops into the signal otherwise
    const HeraldOutcome stay = heralded_state(prm(0.0, 0.7, 1, 1), 8);
    CHECK(stay.probability == doctest::Approx(0.7).epsilon(1e-12));
    const HeraldOutcome hop = heralded_state(prm(0.0, 0.7, 1, 0), 8);
    CHECK(hop.probability == doctest::Approx(0.3).epsilon(1e-12));

    CHECK_THROWS_AS((void)heralded_state(prm(0.0, 0.7, 0, 1), 8), std::domain_error);
}

TEST_CASE("herald probability equals the analytic success probability") {
    const NGOpParams p{0.5, 0.9, 0, 1};
    CHECK(oracle_herald_probability(p) ==
          doctest::Approx(success_probability(p)).epsilon(1e-8));
}

TEST_CASE("herald outcomes form a complete distribution") {
    const double r = 0.5, tau = 0.8;
    const FockVector svs = squeezed_vacuum_fock(r, 40);
    FockVector two;
    two.amps = {0.0, 0.0, 1.0};
    const TwoModeFock mixed = beam_splitter_apply(tensor_product(svs, two), tau);
    double total = 0.0;
    for (int n = 0; n <= mixed.n2; ++n) {
        double pn = 0.0;
        for (int j = 0; j <= mixed.n1; ++j) pn += std::norm(mixed.at(j, n));
        total += pn;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("ideal operations") {
    const FockVector svs = squeezed_vacuum_fock(0.5, 40);
    const FockVector same = ideal_ps(svs, 0);
    for (int k = 0; k <= svs.cutoff(); ++k)
        CHECK(std::abs(same.amps[static_cast<std::size_t>(k)] -
                       svs.amps[static_cast<std::size_t>(k)]) < 1e-14);

    FockVector vac;
    vac.amps = {1.0, 0.0, 0.0};
    CHECK_THROWS_AS((void)ideal_ps(vac, 1), std::domain_error);

    CHECK(parity_of(ideal_ps(svs, 1)) == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(parity_of(ideal_pa(svs, 1)) == doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("mzi parity trivial cases") {
    // all vacuum: parity one for any phase
    FockVector vac;
    vac.amps = {1.0};
    for (double phi : {0.0, 0.3, 1.2})
        CHECK(mzi_parity(vac, 0.0, phi, 4) == doctest::Approx(1.0).epsilon(1e-12));

    // phi = 0 returns the heralded state's definite parity
    const cdouble alpha{std::sqrt(2.0), std::sqrt(2.0)};
    for (auto [m, n] : {std::pair{0, 1}, std::pair{1, 1}, std::pair{2, 0}}) {
        const HeraldOutcome h = heralded_state(prm(0.5, 0.9, m, n), 40);
        const double want = ((m + n) % 2 == 0) ? 1.0 : -1.0;
        CHECK(mzi_parity(h.state, alpha, 0.0, suggest_cutoff(0.0, alpha)) ==
              doctest::Approx(want).epsilon(1e-9));
    }
}

TEST_CASE("parity is stable under cutoff doubling") {
    MZIScenario sc;
    sc.ng = NGOpParams{0.5, 0.9, 0, 1};
    sc.phi = 0.1;
    const cdouble alpha = sc.coherent_alpha();
    const int cut = suggest_cutoff(sc.ng.r, alpha);
    const HeraldOutcome h1 = heralded_state(sc.ng, cut);
    const HeraldOutcome h2 = heralded_state(sc.ng, 2 * cut);
    const double p1 = mzi_parity(h1.state, alpha, sc.phi, cut);
    const double p2 = mzi_parity(h2.state, alpha, sc.phi, 2 * cut);
    CHECK(std::abs(p1 - p2) < 1e-8);
}

TEST_CASE("displaced parity reproduces the Fock-state Wigner function") {
    CHECK(fock_wigner(0, 0.0, 0.0) == doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-14));
    CHECK(fock_wigner(1, 0.0, 0.0) == doctest::Approx(-1.0 / std::numbers::pi).epsilon(1e-14));

    FockVector vac;
    vac.amps = {1.0};
    CHECK(wigner_displaced_parity(vac, 0.0, 0.0) ==
          doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-12));

    for (int m : {1, 3}) {
        FockVector fock;
        fock.amps.assign(static_cast<std::size_t>(m) + 1, cdouble{});
        fock.amps.back() = 1.0;
        for (double q : {0.0, 0.5, 1.0, 1.7})
            for (double p : {0.0, 0.5, -1.1})
                CHECK(wigner_displaced_parity(fock, q, p) ==
                      doctest::Approx(fock_wigner(m, q, p)).epsilon(1e-8).scale(1.0));
    }
}

TEST_CASE("cutoff suggestion rule") {
    CHECK(suggest_cutoff(0.0) == 20);
    const cdouble alpha{std::sqrt(2.0), std::sqrt(2.0)};
    CHECK(suggest_cutoff(0.5, alpha) ==
          static_cast<int>(std::ceil(8.0 * (std::sinh(0.5) * std::sinh(0.5) + 4.0) + 20.0)));
}

} // TEST_SUITE
