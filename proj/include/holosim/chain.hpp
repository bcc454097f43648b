#pragma once

#include "holosim/dense.hpp"

namespace holosim {

struct ChainSpec {
    int sites = 2;       // qubits; links = sites - 1
    double coupling = 1.0;
};

struct TransferResult {
    double fidelity = 0;
    VectorC final_state;
};

// e^{-itH} |psi>|0> for the single-link swap Hamiltonian
// H = (1/2)(II + XX + YY + ZZ), by dense eigendecomposition.
VectorC swap_exact_evolution(const VectorC& psi, double t);

// End-to-end transfer under the uniform chain of swap couplings. The
// initial state stays inside the vacuum + one-excitation sector, so the
// evolution is exact in dimension sites + 1.
TransferResult chain_transfer_fidelity(const ChainSpec& spec, const VectorC& psi, double t);

struct CouplingSearch {
    bool found = false;
    double coupling = 0;
    double infidelity = 1;
};

// Smallest coupling on a 1% geometric grid moving every probe state across
// the chain at t = pi/2 with infidelity at most eps.
CouplingSearch min_coupling_search(int sites, double eps);

double heuristic_chain_error(int links, double coupling);

}  // namespace holosim
