#include "holosim/tensors.hpp"

#include "holosim/dense.hpp"
#include "holosim/errors.hpp"

#include <cmath>
#include <string>

namespace holosim {
namespace {

MatrixC pauli_string(const std::string& s) {
    MatrixC X(2, 2), Z(2, 2), I = MatrixC::Identity(2, 2);
    X << 0, 1, 1, 0;
    Z << 1, 0, 0, -1;
    MatrixC r = MatrixC::Identity(1, 1);
    for (char c : s) r = kron(r, c == 'X' ? X : (c == 'Z' ? Z : I)).eval();
    return r;
}

// Codewords of the [[5,1,3]] code from its stabilizer projector, with a
// canonical global sign (first nonzero amplitude positive).
PerfectTensorData five_qubit_tensor() {
    const char* gens[] = {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"};
    MatrixC P = MatrixC::Identity(32, 32);
    for (const char* g : gens) P = (P * (MatrixC::Identity(32, 32) + pauli_string(g)) / 2.0).eval();
    VectorC c0 = P.col(0);
    c0 /= c0.norm();
    for (int i = 0; i < 32; ++i)
        if (std::abs(c0(i)) > 1e-9) {
            if (c0(i).real() < 0) c0 = -c0;
            break;
        }
    VectorC c1 = pauli_string("XXXXX") * c0;
    PerfectTensorData t;
    t.legs = 6;
    t.nu = 2;
    t.amps.resize(64);
    for (int q = 0; q < 32; ++q) {
        t.amps[2 * q] = c0(q);      // bulk leg is least significant
        t.amps[2 * q + 1] = c1(q);
    }
    return t;
}

bool is_prime(int v) {
    if (v < 2) return false;
    for (int d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

PerfectTensorData ame4_tensor(int nu) {
    PerfectTensorData t;
    t.legs = 4;
    t.nu = nu;
    t.amps.assign(static_cast<size_t>(nu) * nu * nu * nu, 0.0);
    double a = 1.0 / nu;
    for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nu; ++j) {
            size_t idx = ((static_cast<size_t>(i) * nu + j) * nu + (i + j) % nu) * nu +
                         (i + 2 * j) % nu;
            t.amps[idx] = a;
        }
    return t;
}

}  // namespace

PerfectTensorData make_perfect_tensor(int legs, int nu) {
    if (legs == 6 && nu == 2) return five_qubit_tensor();
    if (legs == 4) {
        if (nu == 2)
            throw unsupported_error("no 4-leg perfect tensor exists at bond dimension 2");
        if (!is_prime(nu) || nu % 2 == 0)
            throw unsupported_error("4-leg construction needs an odd prime bond dimension, got " +
                                    std::to_string(nu));
        return ame4_tensor(nu);
    }
    throw unsupported_error("no perfect tensor construction for legs=" + std::to_string(legs) +
                            ", nu=" + std::to_string(nu));
}

IsometryReport check_perfect_isometry(const PerfectTensorData& t) {
    IsometryReport rep;
    int L = t.legs, nu = t.nu;
    size_t total = t.amps.size();
    std::vector<int> digits(L);
    for (unsigned mask = 1; mask < (1u << L); ++mask) {
        int rows_legs = __builtin_popcount(mask);
        if (rows_legs > L / 2) continue;
        size_t rows = 1, cols = 1;
        for (int i = 0; i < L; ++i) (mask >> i & 1 ? rows : cols) *= nu;
        MatrixC M = MatrixC::Zero(rows, cols);
        for (size_t flat = 0; flat < total; ++flat) {
            size_t rest = flat;
            for (int i = L - 1; i >= 0; --i) {
                digits[i] = static_cast<int>(rest % nu);
                rest /= nu;
            }
            size_t r = 0, c = 0;
            for (int i = 0; i < L; ++i)
                (mask >> i & 1 ? r : c) = (mask >> i & 1 ? r : c) * nu + digits[i];
            M(r, c) = t.amps[flat];
        }
        MatrixC G = M * M.adjoint();
        double scalar = G.trace().real() / static_cast<double>(rows);
        double dev = hermitian_norm(G - scalar * MatrixC::Identity(rows, rows));
        ++rep.bipartitions;
        if (dev > rep.max_deviation) {
            rep.max_deviation = dev;
            rep.worst_subset.clear();
            for (int i = 0; i < L; ++i)
                if (mask >> i & 1) rep.worst_subset.push_back(i);
        }
    }
    rep.perfect = rep.max_deviation <= 1e-10;
    return rep;
}

}  // namespace holosim
