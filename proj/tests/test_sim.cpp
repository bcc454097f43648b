#include <doctest.h>

#include "holosim/errors.hpp"
#include "holosim/sim.hpp"

#include <cmath>
#include <random>
#include <sstream>

using namespace holosim;

namespace {

MatrixC random_hermitian(int dim, unsigned seed) {
    std::mt19937 gen(seed);
    std::normal_distribution<double> dist;
    MatrixC a(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) a(r, c) = complexd(dist(gen), dist(gen));
    return 0.5 * (a + a.adjoint());
}

}  // namespace

TEST_CASE("encodings are validated structurally") {
    MatrixC one = MatrixC::Ones(1, 1);
    MatrixC zero = MatrixC::Zero(1, 1);
    CHECK_NOTHROW(make_encoding(MatrixC::Identity(2, 2), one, zero));

    MatrixC half = 0.5 * one;
    CHECK_THROWS_AS(make_encoding(MatrixC::Identity(2, 2), half, zero), invalid_argument_error);
    CHECK_THROWS_AS(make_encoding(MatrixC::Identity(2, 2), one, one), invalid_argument_error);
    MatrixC p2 = MatrixC::Zero(2, 2);
    p2(0, 0) = 1;
    CHECK_THROWS_AS(make_encoding(MatrixC::Identity(2, 2), p2, zero), invalid_argument_error);
    CHECK_THROWS_AS(make_encoding(MatrixC::Identity(2, 2), p2, MatrixC::Zero(2, 2)),
                    invalid_argument_error);
    MatrixC skew = MatrixC::Identity(2, 2) * 2.0;
    CHECK_THROWS_AS(make_encoding(skew, one, zero), invalid_argument_error);
}

TEST_CASE("identity encoding leaves operators alone") {
    EncodingData enc = identity_encoding(3);
    CHECK(enc.rank_p == 1);
    CHECK(enc.rank_q == 0);
    MatrixC h = random_hermitian(3, 5);
    CHECK((apply_encoding(enc, h) - h).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK_THROWS_AS(identity_encoding(0), invalid_argument_error);
}

TEST_CASE("antiunitary branch conjugates the operator") {
    MatrixC one = MatrixC::Ones(1, 1);
    MatrixC zero = MatrixC::Zero(1, 1);
    EncodingData enc = make_encoding(MatrixC::Identity(2, 2), zero, one);
    MatrixC h(2, 2);
    h << 1.0, complexd(0, 2), complexd(0, -2), -1.0;
    CHECK((apply_encoding(enc, h) - h.conjugate()).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("self simulation certifies with vanishing errors") {
    MatrixC h = random_hermitian(6, 17);
    double delta = h.cwiseAbs().sum() + 100.0;
    SimulationCertificate cert = verify_simulation(h, h, identity_encoding(6), delta);
    CHECK(cert.measured);
    CHECK(cert.delta == doctest::Approx(delta));
    CHECK(cert.eta <= 1e-9);
    CHECK(cert.eps <= 1e-9);
}

TEST_CASE("certifier rejects malformed inputs") {
    MatrixC h = random_hermitian(2, 3);
    EncodingData enc = identity_encoding(2);
    MatrixC skew(2, 2);
    skew << 0, 1, 0, 0;
    CHECK_THROWS_AS(verify_simulation(skew, h, enc, 1.0), invalid_argument_error);
    CHECK_THROWS_AS(verify_simulation(h, skew, enc, 1.0), invalid_argument_error);
    CHECK_THROWS_AS(verify_simulation(h, h, enc, 0.0), invalid_argument_error);
}

TEST_CASE("cutoffs inside a spectral cluster are refused") {
    MatrixC h = MatrixC::Zero(2, 2);
    h(1, 1) = 1e-9;
    CHECK_THROWS_WITH_AS(verify_simulation(h, MatrixC::Zero(1, 1), identity_encoding(2), 5e-10),
                         doctest::Contains("spectral cluster"), ill_conditioned_error);
}

TEST_CASE("low energy dimension must match the encoding") {
    MatrixC h = MatrixC::Zero(3, 3);
    h(1, 1) = 10.0;
    h(2, 2) = 10.0;
    MatrixC tgt = MatrixC::Zero(2, 2);
    CHECK_THROWS_AS(verify_simulation(h, tgt, identity_encoding(3), 5.0),
                    structural_mismatch_error);
}

TEST_CASE("physical checks pass on an exact self simulation") {
    MatrixC h = random_hermitian(4, 23);
    EncodingData enc = identity_encoding(4);
    double delta = 50.0;
    MatrixC shifted = h;  // spectrum well under the cutoff
    SimulationCertificate cert = verify_simulation(shifted, h, enc, delta);
    MatrixC rho = MatrixC::Identity(4, 4) / 4.0;
    PhysicalReport rep = physical_property_checks(shifted, h, cert, enc, 0.5, 1.0, rho);
    CHECK(rep.pairing_ok);
    CHECK(rep.pairing_max_dev <= 1e-9);
    CHECK(rep.partition_ok);
    CHECK(rep.dynamics_ok);
    CHECK(rep.dynamics_dev <= 1e-9);
}

TEST_CASE("states outside the encoded subspace are rejected") {
    MatrixC v = MatrixC::Identity(4, 4).leftCols(2);
    EncodingData enc = make_encoding(v, MatrixC::Ones(1, 1), MatrixC::Zero(1, 1));
    MatrixC h2 = 0.3 * random_hermitian(2, 31);
    MatrixC h4 = apply_encoding(enc, h2) + 20.0 * (MatrixC::Identity(4, 4) - v * v.adjoint());
    SimulationCertificate cert = verify_simulation(h4, h2, enc, 10.0);
    MatrixC outside = MatrixC::Identity(4, 4) / 4.0;
    CHECK_THROWS_WITH_AS(physical_property_checks(h4, h2, cert, enc, 1.0, 1.0, outside),
                         doctest::Contains("encoded subspace"), invalid_argument_error);
    MatrixC inside = v * v.adjoint() / 2.0;
    CHECK_NOTHROW(physical_property_checks(h4, h2, cert, enc, 1.0, 1.0, inside));
}

TEST_CASE("chained certificates accumulate errors and shave the cutoff") {
    SimulationCertificate outer;
    outer.delta = 100.0;
    outer.eta = 0.001;
    outer.eps = 0.01;
    SimulationCertificate inner = outer;
    inner.delta = 10.0;
    SimulationCertificate c = concat_certificates(outer, inner, 1.0);
    CHECK(c.delta == doctest::Approx(9.99));
    CHECK(c.eta == doctest::Approx(0.0031098779));
    CHECK(c.eps == doctest::Approx(0.0211098779));
    CHECK_FALSE(c.measured);
}

TEST_CASE("chaining refuses interfaces the errors would swamp") {
    SimulationCertificate outer;
    outer.delta = 100.0;
    outer.eta = 0.001;
    outer.eps = 2.0;
    SimulationCertificate inner;
    inner.delta = 10.0;
    inner.eps = 0.01;
    CHECK_THROWS_WITH_AS(concat_certificates(outer, inner, 1.0),
                         doctest::Contains("outer spectral error exceeds the interface norm"),
                         invalid_argument_error);
    outer.eps = 0.01;
    inner.delta = 1.0;
    CHECK_THROWS_WITH_AS(concat_certificates(outer, inner, 1.0),
                         doctest::Contains("inner cutoff below the interface norm"),
                         invalid_argument_error);
    CHECK_THROWS_AS(concat_certificates(outer, inner, 0.0), invalid_argument_error);
}

TEST_CASE("exponent slack splits good from bad tuples") {
    ExponentTuple weak;
    weak.a = 1.0 / 3.0;
    weak.b = 1.0;
    VeryGoodReport bad = very_good_check(weak);
    CHECK_FALSE(bad.good);
    CHECK(bad.slack_ab == doctest::Approx(-4.0 / 3.0));

    ExponentTuple strong;
    strong.a = 1.0;
    strong.b = 0.0;
    strong.x = 1.0;
    strong.y = 0.0;
    strong.z = 0.0;
    VeryGoodReport good = very_good_check(strong);
    CHECK(good.good);
    CHECK(good.slack_ab == doctest::Approx(0.0));
    CHECK(good.slack_xyz == doctest::Approx(0.0));
}

TEST_CASE("hermitian text round trips through the stream format") {
    MatrixC h = random_hermitian(3, 41);
    std::ostringstream out;
    write_hermitian_text(out, h);
    std::istringstream in(out.str());
    MatrixC back = read_hermitian_text(in);
    CHECK((back - h).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("hermitian reader rejects malformed input") {
    auto read = [](const char* text) {
        std::istringstream in(text);
        return read_hermitian_text(in);
    };
    CHECK_THROWS_AS(read("0\n"), invalid_argument_error);
    CHECK_THROWS_AS(read("2\n1,0 0,0\n"), invalid_argument_error);            // truncated
    CHECK_THROWS_AS(read("1\n3.5\n"), invalid_argument_error);                // no comma
    CHECK_THROWS_AS(read("1\na,b\n"), invalid_argument_error);                // unparseable
    CHECK_THROWS_AS(read("2\n0,0 1,0\n0,0 0,0\n"), invalid_argument_error);   // not Hermitian
    CHECK_THROWS_WITH_AS(read_hermitian_file("/nonexistent/h.txt"),
                         doctest::Contains("cannot open"), not_found_error);
}
