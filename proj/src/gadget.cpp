#include "holosim/gadget.hpp"

#include "holosim/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

namespace holosim {
namespace {

using rational = boost::multiprecision::cpp_rational;

void check_unitary(const MatrixC& u, const char* name) {
    if (u.rows() != u.cols()) throw invalid_argument_error(std::string(name) + " must be square");
    MatrixC g = u * u.adjoint();
    if ((g - MatrixC::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() > 1e-10)
        throw invalid_argument_error(std::string(name) + " must be unitary");
}

// w = 0 block of a full A (x) B (x) mediator operator.
MatrixC ground_block(const MatrixC& full, long long dim_ab, int p) {
    MatrixC out(dim_ab, dim_ab);
    for (long long r = 0; r < dim_ab; ++r)
        for (long long c = 0; c < dim_ab; ++c) out(r, c) = full(r * p, c * p);
    return out;
}

// delta_x / delta_0 as an exact rational, by the recursion.
std::vector<rational> delta_coeffs(int x_max) {
    std::vector<rational> c{1};
    for (int x = 1; x <= x_max; ++x) {
        rational acc = 0;
        rational half = rational(1, 2);
        // sum_{l<x} c_l / 2^(x-l), highest l first so the power grows by one
        rational w = half;
        for (int l = x - 1; l >= 0; --l) {
            acc += c[l] * w;
            w *= half;
        }
        c.push_back(4 * acc);
    }
    return c;
}

rational closed_coeff(int x) {
    if (x == 0) return 1;
    rational num = 1;
    for (int i = 1; i < x; ++i) num *= 5;
    rational den = 1;
    for (int i = 2; i < x; ++i) den *= 2;
    if (x == 1) return num * 2;  // 5^0 / 2^(-1)
    return num / den;
}

}  // namespace

GadgetInstance build_subdivision_gadget(const MatrixC& p_a, const MatrixC& p_b, double delta0,
                                        double heavy, int p) {
    check_unitary(p_a, "first operator");
    check_unitary(p_b, "second operator");
    if (delta0 < 0) throw invalid_argument_error("target strength must be non-negative");
    if (heavy <= 0) throw invalid_argument_error("heavy norm must be positive");
    if (p < 3)
        throw unsupported_error(
            "mediator dimension below 3: the up and down coupling paths meet in the same "
            "state and the second-order cancellation fails");

    long long da = p_a.rows(), db = p_b.rows();
    GadgetInstance g;
    g.p_a = p_a;
    g.p_b = p_b;
    g.delta0 = delta0;
    g.heavy = heavy;
    g.p = p;

    MatrixC excited = MatrixC::Identity(p, p);
    excited(0, 0) = 0;
    MatrixC id_ab = MatrixC::Identity(da * db, da * db);
    g.h0 = heavy * kron(id_ab, excited);
    g.h1 = 2.0 * delta0 * MatrixC::Identity(da * db * p, da * db * p);

    MatrixC shift = MatrixC::Zero(p, p);
    for (int j = 0; j < p; ++j) shift((j + 1) % p, j) = 1;
    MatrixC id_a = MatrixC::Identity(da, da);
    MatrixC id_b = MatrixC::Identity(db, db);
    g.h2 = std::sqrt(delta0 / 2.0) *
           (-kron(kron(p_a, id_b), shift) - kron(kron(p_a.adjoint(), id_b), shift.adjoint()) +
            kron(kron(id_a, p_b), shift.adjoint()) + kron(kron(id_a, p_b.adjoint()), shift));

    g.target = delta0 * (kron(p_a, p_b) + kron(p_a.adjoint(), p_b.adjoint()));
    return g;
}

MatrixC gadget_hamiltonian(const GadgetInstance& g) {
    return g.h0 + g.h1 + std::sqrt(g.heavy) * g.h2;
}

double second_order_residual(const GadgetInstance& g) {
    long long dim_ab = g.p_a.rows() * g.p_b.rows();
    // Second-order correction sqrt(heavy) h2 restricted through the excited
    // block and back: the heavy norm cancels against the h0 pseudo-inverse.
    MatrixC coupled = g.h2;
    for (long long r = 0; r < coupled.rows(); ++r)
        if (r % g.p == 0) coupled.row(r).setZero();
    MatrixC correction = ground_block(MatrixC(g.h2 * coupled), dim_ab, g.p);
    MatrixC effective = g.target - ground_block(g.h1, dim_ab, g.p) + correction;
    return hermitian_norm(effective);
}

GadgetCertificate verify_second_order(const GadgetInstance& g, double eps, double eta) {
    if (eps <= 0 || eta <= 0) throw invalid_argument_error("error targets must be positive");
    long long dim_ab = g.p_a.rows() * g.p_b.rows();
    if (ground_block(g.h2, dim_ab, g.p).cwiseAbs().maxCoeff() > 1e-10)
        throw structural_mismatch_error("perturbation must vanish on the mediator ground block");

    GadgetCertificate out;
    out.lambda = std::max(hermitian_norm(g.h1), hermitian_norm(g.h2));
    out.heavy_ok =
        g.heavy >= std::pow(out.lambda, 6) / (eps * eps) + out.lambda * out.lambda / (eta * eta);

    MatrixC embed = MatrixC::Zero(dim_ab * g.p, dim_ab);
    for (long long i = 0; i < dim_ab; ++i) embed(i * g.p, i) = 1;
    EncodingData enc = make_encoding(std::move(embed), MatrixC::Ones(1, 1), MatrixC::Zero(1, 1));
    out.cert = verify_simulation(gadget_hamiltonian(g), g.target, enc, g.heavy / 2.0);
    return out;
}

std::pair<double, double> delta_sequence(int x, double delta0) {
    if (x < 0) throw invalid_argument_error("index must be non-negative");
    std::vector<rational> rec = delta_coeffs(x);
    return {static_cast<double>(rec[x]) * delta0, static_cast<double>(closed_coeff(x)) * delta0};
}

bool delta_exact_match(int x) {
    if (x < 0) throw invalid_argument_error("index must be non-negative");
    std::vector<rational> rec = delta_coeffs(x);
    for (int i = 0; i <= x; ++i)
        if (rec[i] != closed_coeff(i)) return false;
    return true;
}

bool delta_identity_holds(int r) {
    if (r < 0) throw invalid_argument_error("round must be non-negative");
    std::vector<rational> c = delta_coeffs(r);
    rational acc = 0;
    rational w = 1;
    for (int l = r; l >= 0; --l) {
        acc += c[l] * w;
        w /= 2;
    }
    rational expect = 1;
    for (int i = 0; i < r; ++i) expect *= rational(5, 2);
    return acc == expect;
}

RecursionReport recursion_report(const RecursionSchedule& s) {
    if (s.delta0 <= 0) throw invalid_argument_error("base strength must be positive");
    if (s.tau <= 1) throw invalid_argument_error("growth rate must exceed 1");
    if (s.R < 0 || s.n < 1 || s.rounds < 0) throw invalid_argument_error("bad schedule");
    if (s.b <= 0) throw invalid_argument_error("budget norm must be positive");

    double log_tau_b = std::log(s.b) / std::log(s.tau);
    double c = s.R * std::log2(static_cast<double>(s.n));
    RecursionReport rep;
    for (int r = 0; r <= s.rounds; ++r) {
        RecursionRow row;
        row.round = r;
        if (r == 0) {
            row.log_tau_ht = log_tau_b + c * s.delta0;
            row.log_tau_eps = log_tau_b - c * s.delta0 / 2.0;
            row.log_tau_eta = -c * s.delta0 / 2.0;
        } else {
            double grown = c * std::pow(2.5, r) * s.delta0;
            double prev = c * std::pow(2.5, r - 1) * s.delta0;
            row.log_tau_ht = log_tau_b + grown;
            row.log_tau_eps = log_tau_b - prev / 2.0;
            row.log_tau_eta = -prev / 4.0;
        }
        rep.rows.push_back(row);
    }

    rep.identity_ok = true;
    for (int r = 0; r <= std::min(s.rounds, 30); ++r)
        if (!delta_identity_holds(r)) rep.identity_ok = false;

    double pre = std::log2(static_cast<double>(s.n)) * s.R;
    rep.eps = LogScaled::from_value(pre * s.b) * pow_of(s.tau, -c * s.delta0 / 4.0);
    rep.eta = LogScaled::from_value(pre) * pow_of(s.tau, -c * s.delta0 / 2.0);
    rep.delta1 = LogScaled::from_value(s.b) * pow_of(s.tau, c * s.delta0);
    rep.delta = rep.delta1 - rep.eps;
    rep.log_tau_hsim =
        log_tau_b + s.R * s.n * std::log2(static_cast<double>(s.n)) * std::pow(2.5, s.R) * s.delta0;
    if (rep.delta.sign() <= 0) rep.flag = "no effective gap";
    return rep;
}

BudgetBound perturbative_budget(double tau, int n, int R) {
    if (tau <= 1) throw invalid_argument_error("growth rate must exceed 1");
    if (n < 1) throw invalid_argument_error("bundle size must be positive");
    if (R < 1) throw invalid_argument_error("radius must be at least 1");
    BudgetBound out;
    double exponent =
        -static_cast<double>(n) * R * std::log2(static_cast<double>(n)) * std::pow(2.5, R);
    out.bound = pow_of(tau, exponent);
    out.degenerate = n == 1;
    return out;
}

}  // namespace holosim
