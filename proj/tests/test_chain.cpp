#include <doctest.h>

#include "holosim/chain.hpp"
#include "holosim/errors.hpp"

#include <cmath>
#include <complex>
#include <numbers>

using namespace holosim;

namespace {

double worst_probe_infidelity(int sites, double coupling) {
    ChainSpec spec;
    spec.sites = sites;
    spec.coupling = coupling;
    VectorC one(2), plus(2), plus_i(2);
    one << 0, 1;
    plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
    plus_i << 1 / std::sqrt(2.0), complexd(0, 1 / std::sqrt(2.0));
    double worst = 0;
    for (const VectorC* psi : {&one, &plus, &plus_i}) {
        double f = chain_transfer_fidelity(spec, *psi, std::numbers::pi / 2.0).fidelity;
        worst = std::max(worst, 1.0 - f);
    }
    return worst;
}

}  // namespace

TEST_CASE("single link evolution matches the rotating frame closed form") {
    double t = 0.7;
    VectorC psi(2);
    psi << 0.6, 0.8;
    VectorC out = swap_exact_evolution(psi, t);
    REQUIRE(out.size() == 4);
    CHECK(std::abs(out(0) - 0.6 * std::exp(complexd(0, -t))) <= 1e-10);
    CHECK(std::abs(out(1) - complexd(0, -0.8 * std::sin(t))) <= 1e-10);
    CHECK(std::abs(out(2) - complexd(0.8 * std::cos(t), 0)) <= 1e-10);
    CHECK(std::abs(out(3)) <= 1e-12);

    VectorC one(2);
    one << 0, 1;
    VectorC hop = swap_exact_evolution(one, t);
    CHECK(hop(1).real() == doctest::Approx(0.0));
    CHECK(hop(1).imag() == doctest::Approx(-0.644218).epsilon(1e-5));
}

TEST_CASE("probe states must be normalized single qubits") {
    VectorC bad(2);
    bad << 1.0, 1.0;
    CHECK_THROWS_AS(swap_exact_evolution(bad, 0.1), invalid_argument_error);
    VectorC wide(3);
    wide << 1.0, 0.0, 0.0;
    CHECK_THROWS_AS(swap_exact_evolution(wide, 0.1), invalid_argument_error);
}

TEST_CASE("unit coupling moves one link perfectly at a quarter period") {
    ChainSpec spec;
    spec.sites = 2;
    spec.coupling = 1.0;
    VectorC psi(2);
    psi << 0.6, 0.8;
    TransferResult r = chain_transfer_fidelity(spec, psi, std::numbers::pi / 2.0);
    CHECK(r.fidelity == doctest::Approx(1.0).epsilon(1e-10));
    REQUIRE(r.final_state.size() == 4);
}

TEST_CASE("zero coupling leaves only the vacuum overlap") {
    ChainSpec spec;
    spec.sites = 3;
    spec.coupling = 0.0;
    VectorC psi(2);
    psi << 0.6, 0.8;
    TransferResult r = chain_transfer_fidelity(spec, psi, 1.0);
    CHECK(r.fidelity == doctest::Approx(std::pow(0.6, 4)));
}

TEST_CASE("final state lives in the vacuum plus one excitation sector") {
    ChainSpec spec;
    spec.sites = 3;
    spec.coupling = 1.3;
    VectorC psi(2);
    psi << 0, 1;
    TransferResult r = chain_transfer_fidelity(spec, psi, 0.4);
    REQUIRE(r.final_state.size() == 8);
    for (int idx : {3, 5, 6, 7}) CHECK(std::abs(r.final_state(idx)) == 0.0);
    double norm = r.final_state.norm();
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("chain sizes and couplings are validated") {
    ChainSpec spec;
    VectorC one(2);
    one << 0, 1;
    spec.sites = 1;
    CHECK_THROWS_AS(chain_transfer_fidelity(spec, one, 1.0), invalid_argument_error);
    spec.sites = 15;
    CHECK_THROWS_AS(chain_transfer_fidelity(spec, one, 1.0), size_limit_error);
    spec.sites = 3;
    spec.coupling = -0.1;
    CHECK_THROWS_AS(chain_transfer_fidelity(spec, one, 1.0), invalid_argument_error);
    CHECK_THROWS_AS(min_coupling_search(2, 0.0), invalid_argument_error);
    CHECK_THROWS_AS(min_coupling_search(2, 1.0), invalid_argument_error);
    CHECK_THROWS_AS(min_coupling_search(15, 0.1), size_limit_error);
}

TEST_CASE("coupling search lands just above unit strength for one link") {
    CouplingSearch s = min_coupling_search(2, 1e-4);
    CHECK(s.found);
    CHECK(s.coupling == doctest::Approx(1.003382).epsilon(1e-5));
    CHECK(s.infidelity == doctest::Approx(2.822e-5).epsilon(1e-3));
}

TEST_CASE("minimum workable coupling grows with chain length") {
    const double want[] = {0.5361, 1.0034, 1.5858, 5.0798, 9.2285, 11.3732, 13.7400};
    double prev = 0.0;
    for (int sites = 2; sites <= 8; ++sites) {
        CouplingSearch s = min_coupling_search(sites, 0.45);
        CAPTURE(sites);
        REQUIRE(s.found);
        CHECK(s.coupling == doctest::Approx(want[sites - 2]).epsilon(1e-3));
        CHECK(s.coupling >= prev);
        prev = s.coupling;
    }
}

TEST_CASE("couplings growing slower than the chain cannot transfer well") {
    // tau = sqrt(L - 1) is sub-linear in the link count; the infidelity
    // stays bounded away from zero instead of improving
    CHECK(worst_probe_infidelity(3, std::sqrt(2.0)) == doctest::Approx(0.261697).epsilon(1e-4));
    CHECK(worst_probe_infidelity(5, std::sqrt(4.0)) == doctest::Approx(0.591680).epsilon(1e-4));
    CHECK(worst_probe_infidelity(8, std::sqrt(7.0)) == doctest::Approx(0.870954).epsilon(1e-4));
    for (int sites = 4; sites <= 8; ++sites) {
        CAPTURE(sites);
        CHECK(worst_probe_infidelity(sites, std::sqrt(sites - 1.0)) > 0.25);
    }
}

TEST_CASE("heuristic error tracks the cosine envelope") {
    CHECK(heuristic_chain_error(2, 1.0) == doctest::Approx(0.25));
    CHECK(heuristic_chain_error(2, 1.6017) <= 0.01);
    CHECK(heuristic_chain_error(2, 1.58) > 0.01);
    CHECK(heuristic_chain_error(2, 2.0) <= 1e-10);
    CHECK(heuristic_chain_error(1, 1.0) <= 1e-10);
    CHECK_THROWS_AS(heuristic_chain_error(0, 1.0), invalid_argument_error);
}
