#include <doctest.h>

#include "holosim/errors.hpp"
#include "holosim/tensors.hpp"

#include <set>

using namespace holosim;

TEST_CASE("six leg tensor carries the stabilizer codewords") {
    PerfectTensorData t = make_perfect_tensor(6, 2);
    REQUIRE(t.legs == 6);
    REQUIRE(t.nu == 2);
    REQUIRE(t.amps.size() == 64);

    // index = 2q + b: q runs over the five physical qubits, b is the last leg
    const std::set<int> plus0 = {0, 5, 9, 10, 18, 20};
    const std::set<int> minus0 = {3, 6, 12, 15, 17, 23, 24, 27, 29, 30};
    const std::set<int> plus1 = {11, 13, 21, 22, 26, 31};
    const std::set<int> minus1 = {1, 2, 4, 7, 8, 14, 16, 19, 25, 28};
    for (int q = 0; q < 32; ++q) {
        for (int b = 0; b < 2; ++b) {
            double got = 4.0 * t.amps[2 * q + b].real();
            double want = 0.0;
            if (b == 0) want = plus0.count(q) ? 1.0 : (minus0.count(q) ? -1.0 : 0.0);
            if (b == 1) want = plus1.count(q) ? 1.0 : (minus1.count(q) ? -1.0 : 0.0);
            CAPTURE(q);
            CAPTURE(b);
            CHECK(got == doctest::Approx(want).epsilon(1e-14));
            CHECK(t.amps[2 * q + b].imag() == 0.0);
        }
    }
}

TEST_CASE("six leg tensor is an exact isometry across all 41 bipartitions") {
    IsometryReport rep = check_perfect_isometry(make_perfect_tensor(6, 2));
    CHECK(rep.bipartitions == 41);  // C(6,1) + C(6,2) + C(6,3)
    CHECK(rep.max_deviation <= 1e-12);
    CHECK(rep.perfect);
}

TEST_CASE("qutrit four leg tensor is perfect to rounding") {
    IsometryReport rep = check_perfect_isometry(make_perfect_tensor(4, 3));
    CHECK(rep.bipartitions == 10);  // C(4,1) + C(4,2)
    CHECK(rep.max_deviation <= 1e-12);
    CHECK(rep.perfect);
}

TEST_CASE("four qubit perfect tensor does not exist and is refused") {
    CHECK_THROWS_AS(make_perfect_tensor(4, 2), unsupported_error);
    CHECK_THROWS_AS(make_perfect_tensor(4, 4), unsupported_error);   // even
    CHECK_THROWS_AS(make_perfect_tensor(4, 9), unsupported_error);   // composite
    CHECK_THROWS_AS(make_perfect_tensor(5, 2), unsupported_error);   // odd leg count
    CHECK_THROWS_AS(make_perfect_tensor(6, 3), unsupported_error);
}

TEST_CASE("imperfect tensors are reported rather than rounded away") {
    PerfectTensorData t;
    t.legs = 2;
    t.nu = 2;
    t.amps = {1.0, 0.0, 0.0, 0.5};  // diag(1, 1/2): not proportional to an isometry
    IsometryReport rep = check_perfect_isometry(t);
    CHECK(rep.bipartitions == 2);
    CHECK(rep.max_deviation == doctest::Approx(0.375));  // c = 5/8 against diag(1, 1/4)
    CHECK_FALSE(rep.perfect);
    CHECK(rep.worst_subset.size() == 1);
}
