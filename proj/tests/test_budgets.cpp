#include <doctest.h>

#include "holosim/budgets.hpp"
#include "holosim/errors.hpp"

#include <cmath>

using namespace holosim;

TEST_CASE("phase estimation runtime on the reference point") {
    QPEParams p;
    p.sparsity = pow_of(4.0, 16.0);
    p.spins = LogScaled::from_value(256.0);
    p.h_norm = LogScaled::from_value(1.0);
    p.accuracy = LogScaled::from_value(1.0);
    QPERuntime r = qpe_runtime(p);
    CHECK(r.t_pe.log_magnitude() == doctest::Approx(31.08891336).epsilon(1e-8));
    CHECK(r.t_pe.log2() == doctest::Approx(44.85182113328654).epsilon(1e-10));
    CHECK(r.log4_scale == doctest::Approx(16.0));
    CHECK(r.coarse_accuracy);
    CHECK_FALSE(r.small_log);
    CHECK(r.t_u.sign() == 1);
    // norm/accuracy ratio is one here, so the estimation adds no extra factor
    CHECK(r.t_u.log_magnitude() == doctest::Approx(r.t_pe.log_magnitude()).epsilon(1e-12));
    CHECK_FALSE(r.t_pe.same_sign_less(r.t_u));
}

TEST_CASE("trivial scales drop the trailing logarithmic factor") {
    QPEParams p;
    p.sparsity = LogScaled::from_value(1.0);
    p.spins = LogScaled::from_value(4.0);
    p.h_norm = LogScaled::from_value(1.0);
    p.accuracy = LogScaled::from_value(1.0);
    QPERuntime r = qpe_runtime(p);
    CHECK(r.small_log);
    CHECK(r.coarse_accuracy);
    CHECK(r.log4_scale == doctest::Approx(0.0));
}

TEST_CASE("history state errors at the unit operating point") {
    HistoryStateModel m;
    m.j = LogScaled::from_value(1.0);
    m.t_pe = LogScaled::from_value(1.0);
    m.lambda = 1.0;
    HistoryErrors e = history_state_errors(m, LogScaled::from_value(1.0),
                                           LogScaled::from_value(1.0));
    CHECK(e.eta.value() == doctest::Approx(8.5));
    CHECK(e.eps.value() == doctest::Approx(17.0));
    CHECK(e.delta.value() == doctest::Approx(0.125));
    CHECK(e.total_steps.value() == doctest::Approx(2.0));

    m.lambda = 0.5;
    CHECK_THROWS_WITH_AS(history_state_errors(m, LogScaled::from_value(1.0),
                                              LogScaled::from_value(1.0)),
                         doctest::Contains("idle multiple"), invalid_argument_error);
}

TEST_CASE("heavy norm requirement at unit inputs") {
    LogScaled one = LogScaled::from_value(1.0);
    CHECK(required_heavy_norm_j(one, one, one, one, one).value() == doctest::Approx(3.0));
}

TEST_CASE("sparse simulator exponents are the frozen rationals") {
    SparseExponents e = sparse_history_exponents();
    using rat = boost::rational<long long>;
    CHECK(e.a == rat(2, 3));
    CHECK(e.b == rat(5, 6));
    CHECK(e.x == rat(3, 4));
    CHECK(e.y == rat(3, 4));
    CHECK(e.z == rat(1, 4));
    CHECK(e.sum_ab == rat(7, 3));
    CHECK(e.sum_xyz == rat(5, 2));
    CHECK(e.tuple.a == doctest::Approx(2.0 / 3.0));
    CHECK(e.tuple.b == doctest::Approx(5.0 / 6.0));

    VeryGoodReport rep = very_good_check(e.tuple);
    CHECK_FALSE(rep.good);
    CHECK(rep.slack_ab == doctest::Approx(-4.0 / 3.0));
    CHECK(rep.slack_xyz == doctest::Approx(-1.5));
}

TEST_CASE("attack norm growth per round follows the exponent sums") {
    SparseExponents e = sparse_history_exponents();
    NormExponents first = attack_norm_exponent(e.tuple, 0, 2, 2.0, 3);
    CHECK(first.ab.value() == doctest::Approx(40.317474).epsilon(1e-6));
    CHECK(first.xyz.value() == doctest::Approx(64.0));
    NormExponents last = attack_norm_exponent(e.tuple, 3, 2, 2.0, 3);
    CHECK(last.ab.value() == doctest::Approx(std::pow(2.0, 4.0 / 3.0)));
    CHECK_THROWS_AS(attack_norm_exponent(e.tuple, 4, 2, 2.0, 3), invalid_argument_error);
    CHECK_THROWS_AS(attack_norm_exponent(e.tuple, 0, 0, 2.0, 3), invalid_argument_error);
}

TEST_CASE("general scenario report at the strong decay point") {
    ScenarioParams p;  // n = 16, R = 4, tau = 2, alpha = beta = 5
    ScenarioReport r = scenario_report(p);
    CHECK(r.ln_eta == doctest::Approx(-32.15602172).epsilon(1e-8));
    CHECK(r.ln_eps == doctest::Approx(-126.06913090).epsilon(1e-8));
    CHECK(r.ln_delta == doctest::Approx(-61.73022184).epsilon(1e-8));
    CHECK(r.ln_budget == doctest::Approx(-119.22131506).epsilon(1e-8));
    CHECK(r.ln_final == doctest::Approx(-120.52395346).epsilon(1e-8));
    CHECK(r.ln_h_norm == doctest::Approx(-124.766493).epsilon(1e-6));
    CHECK(r.ln_tpe == doctest::Approx(31.088913).epsilon(1e-6));
    CHECK(r.eta_dominates);
    CHECK(r.good);
}

TEST_CASE("weak decay loses the accuracy race") {
    ScenarioParams p;
    p.alpha = 3.0;
    p.beta = 3.0;
    ScenarioReport r = scenario_report(p);
    CHECK(r.ln_eta == doctest::Approx(17.75057528).epsilon(1e-8));
    CHECK(r.ln_eps == doctest::Approx(-26.25593690).epsilon(1e-8));
    CHECK(r.ln_budget == doctest::Approx(-69.31471806).epsilon(1e-8));
    CHECK(r.ln_final == doctest::Approx(-20.71075946).epsilon(1e-8));
    CHECK_FALSE(r.good);
}

TEST_CASE("k local scenario uses the locality budget") {
    ScenarioParams p;
    p.kind = ScenarioKind::k_local;
    p.k = 2;
    p.alpha_loc = 7.0;
    p.beta_loc = 7.0;
    ScenarioReport r = scenario_report(p);
    CHECK(r.ln_eta == doctest::Approx(-16.40754173).epsilon(1e-8));
    CHECK(r.ln_eps == doctest::Approx(-56.99617945).epsilon(1e-8));
    CHECK(r.ln_delta == doctest::Approx(-24.18109600).epsilon(1e-8));
    CHECK(r.ln_budget == doctest::Approx(-13.0 * std::log(16.0) - 16.0 * std::log(2.0)));
    CHECK(r.ln_final == doctest::Approx(-51.45100200).epsilon(1e-8));
}

TEST_CASE("mismatched decay pairs are not implemented") {
    ScenarioParams p;
    p.alpha = 5.0;
    p.beta = 4.0;
    CHECK_THROWS_AS(scenario_report(p), unsupported_error);
}

TEST_CASE("canonical attack schedule at the reference point") {
    AttackSchedule s = canonical_attack_schedule(8, 2.0, 4);
    REQUIRE(s.inbound.size() == 5);
    REQUIRE(s.outbound.size() == 5);
    // hardest round runs the longest and carries the smallest errors
    CHECK(s.inbound[0].t == doctest::Approx(8.0 * 16.0));
    CHECK(s.inbound[4].t == doctest::Approx(8.0));
    CHECK(s.central.t == doctest::Approx(8.0 * 16.0 / 8.0));
    CHECK(s.central.t < 8.0 * 16.0 / 4.0);

    AttackBudget b = attack_error_budget(s);
    CHECK(b.total == doctest::Approx(2.078125));
    CHECK(8.0 * (b.swap_in + b.swap_out) == doctest::Approx(11.625));
    CHECK(b.central == doctest::Approx(0.625));
}

TEST_CASE("swap costs scale inversely with the bundle size") {
    AttackBudget small = attack_error_budget(canonical_attack_schedule(8, 2.0, 4));
    AttackBudget big = attack_error_budget(canonical_attack_schedule(16, 2.0, 4));
    CHECK(big.total == doctest::Approx(small.total / 2.0));
    CHECK(big.swap_in == doctest::Approx(small.swap_in / 2.0));
}

TEST_CASE("scaled swap cost stays under the geometric ceiling at every radius") {
    for (double tau : {1.5, 2.0, 3.0}) {
        double bound = 6.0 * tau / (tau - 1.0);
        for (int R = 1; R <= 10; ++R) {
            AttackBudget b = attack_error_budget(canonical_attack_schedule(4, tau, R));
            CAPTURE(tau);
            CAPTURE(R);
            CHECK(4.0 * (b.swap_in + b.swap_out) <= bound);
        }
    }
}

TEST_CASE("central runs at a quarter period or beyond are rejected") {
    AttackSchedule s = canonical_attack_schedule(8, 2.0, 4);
    s.central.t = 8.0 * 16.0 / 4.0;
    CHECK_THROWS_WITH_AS(attack_error_budget(s), doctest::Contains("quarter boundary period"),
                         invalid_argument_error);
    s = canonical_attack_schedule(8, 2.0, 4);
    s.inbound.pop_back();
    CHECK_THROWS_AS(attack_error_budget(s), invalid_argument_error);
    CHECK_THROWS_AS(canonical_attack_schedule(0, 2.0, 4), invalid_argument_error);
    CHECK_THROWS_AS(canonical_attack_schedule(8, 1.0, 4), invalid_argument_error);
    CHECK_THROWS_AS(canonical_attack_schedule(8, 2.0, -1), invalid_argument_error);
}
