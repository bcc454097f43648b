#include <doctest.h>

#include "holosim/logscaled.hpp"

#include <cmath>

using holosim::LogScaled;
using holosim::invalid_argument_error;
using holosim::pow_of;

TEST_CASE("value round trip and zero handling") {
    CHECK(LogScaled::from_value(3.5).value() == doctest::Approx(3.5));
    CHECK(LogScaled::from_value(-0.25).value() == doctest::Approx(-0.25));
    CHECK(LogScaled::from_value(-0.25).sign() == -1);

    LogScaled z = LogScaled::from_value(0.0);
    CHECK(z.is_zero());
    CHECK(z.value() == 0.0);
    CHECK(z.sign() == 0);
    CHECK_THROWS_AS(z.log_magnitude(), invalid_argument_error);

    CHECK(LogScaled().is_zero());
}

TEST_CASE("from_log keeps the exponent exactly") {
    LogScaled a = LogScaled::from_log(710.0);  // exp(710) overflows double
    CHECK(a.log_magnitude() == 710.0);
    CHECK(std::isinf(a.value()));

    LogScaled b = LogScaled::from_log(3.0, -1);
    CHECK(b.sign() == -1);
    CHECK(b.value() == doctest::Approx(-std::exp(3.0)));

    CHECK(LogScaled::from_log(5.0, 0).is_zero());
}

TEST_CASE("products and quotients act on exponents") {
    LogScaled a = LogScaled::from_log(500.0);
    LogScaled b = LogScaled::from_log(400.0);
    CHECK((a * b).log_magnitude() == doctest::Approx(900.0));
    CHECK((a / b).log_magnitude() == doctest::Approx(100.0));
    CHECK((a * LogScaled::from_value(-1.0)).sign() == -1);
    CHECK((a * LogScaled()).is_zero());
    CHECK_THROWS_AS(a / LogScaled(), invalid_argument_error);
}

TEST_CASE("addition falls back to log-sum-exp") {
    LogScaled three = LogScaled::from_value(3.0);
    LogScaled four = LogScaled::from_value(4.0);
    CHECK((three + four).value() == doctest::Approx(7.0));
    CHECK((four - three).value() == doctest::Approx(1.0));
    CHECK((three - four).value() == doctest::Approx(-1.0));
    CHECK((three - three).is_zero());
    CHECK((three + LogScaled()).value() == doctest::Approx(3.0));

    // huge + tiny keeps the huge exponent instead of overflowing
    LogScaled huge = LogScaled::from_log(1000.0);
    CHECK((huge + three).log_magnitude() == doctest::Approx(1000.0));
}

TEST_CASE("pow scales the exponent and rejects negative bases") {
    LogScaled a = LogScaled::from_value(2.0);
    CHECK(a.pow(10.0).value() == doctest::Approx(1024.0));
    CHECK(a.pow(0.5).value() == doctest::Approx(std::sqrt(2.0)));
    CHECK(LogScaled().pow(3.0).is_zero());
    CHECK_THROWS_AS(LogScaled::from_value(-2.0).pow(0.5), invalid_argument_error);
}

TEST_CASE("same_sign_less orders positive magnitudes") {
    LogScaled small = LogScaled::from_log(-2000.0);
    LogScaled big = LogScaled::from_log(2000.0);
    CHECK(small.same_sign_less(big));
    CHECK_FALSE(big.same_sign_less(small));
    CHECK_THROWS_AS(LogScaled::from_value(-1.0).same_sign_less(big), invalid_argument_error);
    CHECK_THROWS_AS(big.same_sign_less(LogScaled()), invalid_argument_error);
}

TEST_CASE("log_in_base converts and pow_of builds powers") {
    CHECK(LogScaled::from_value(8.0).log_in_base(2.0) == doctest::Approx(3.0));
    CHECK(LogScaled::from_value(8.0).log2() == doctest::Approx(3.0));
    CHECK(pow_of(4.0, 16.0).log_in_base(4.0) == doctest::Approx(16.0));
    CHECK_THROWS_AS(pow_of(-1.0, 2.0), invalid_argument_error);
    CHECK_THROWS_AS(pow_of(0.0, 2.0), invalid_argument_error);
}

TEST_CASE("describe names zero and signed magnitudes") {
    CHECK(LogScaled().describe() == "0");
    CHECK(LogScaled::from_value(-2.0).describe().substr(0, 1) == "-");
    CHECK(LogScaled::from_value(2.0).describe().find("exp(") == 0);
}
