#include "holosim/chain.hpp"

#include "holosim/errors.hpp"

#include <cmath>
#include <numbers>

namespace holosim {
namespace {

constexpr int kMaxSites = 14;

void check_spec(const ChainSpec& spec) {
    if (spec.sites < 2) throw invalid_argument_error("chain needs at least two sites");
    if (spec.sites > kMaxSites)
        throw size_limit_error("chain capped at " + std::to_string(kMaxSites) + " sites");
    if (spec.coupling < 0) throw invalid_argument_error("coupling must be non-negative");
}

VectorC unit_qubit(const VectorC& psi) {
    if (psi.size() != 2) throw invalid_argument_error("probe state must be a single qubit");
    if (std::abs(psi.norm() - 1.0) > 1e-10)
        throw invalid_argument_error("probe state must be normalized");
    return psi;
}

// Vacuum + one-excitation block of tau * sum of adjacent swaps. Index 0 is
// the all-zeros state, index s+1 the excitation at site s.
MatrixC sector_hamiltonian(const ChainSpec& spec) {
    int L = spec.sites;
    MatrixC h = MatrixC::Zero(L + 1, L + 1);
    h(0, 0) = spec.coupling * (L - 1);
    for (int link = 0; link < L - 1; ++link)
        for (int s = 0; s < L; ++s) {
            int j = s + 1;
            if (s == link)
                h(link + 2, j) += spec.coupling;
            else if (s == link + 1)
                h(link + 1, j) += spec.coupling;
            else
                h(j, j) += spec.coupling;
        }
    return h;
}

}  // namespace

VectorC swap_exact_evolution(const VectorC& psi, double t) {
    unit_qubit(psi);
    MatrixC x(2, 2), y(2, 2), z(2, 2);
    x << 0, 1, 1, 0;
    y << 0, complexd(0, -1), complexd(0, 1), 0;
    z << 1, 0, 0, -1;
    MatrixC h = 0.5 * (MatrixC::Identity(4, 4) + kron(x, x) + kron(y, y) + kron(z, z));
    VectorC zero(2);
    zero << 1, 0;
    return evolution_operator(h, t) * kron_vec(psi, zero);
}

TransferResult chain_transfer_fidelity(const ChainSpec& spec, const VectorC& psi, double t) {
    check_spec(spec);
    unit_qubit(psi);
    int L = spec.sites;
    VectorC v = VectorC::Zero(L + 1);
    v(0) = psi(0);
    v(1) = psi(1);
    VectorC w = evolution_operator(sector_hamiltonian(spec), t) * v;

    VectorC target = VectorC::Zero(L + 1);
    target(0) = psi(0);
    target(L) = psi(1);
    TransferResult res;
    res.fidelity = std::norm(target.dot(w));

    res.final_state = VectorC::Zero(1LL << L);
    res.final_state(0) = w(0);
    for (int s = 0; s < L; ++s) res.final_state(1LL << (L - 1 - s)) = w(s + 1);
    return res;
}

CouplingSearch min_coupling_search(int sites, double eps) {
    if (eps <= 0 || eps >= 1) throw invalid_argument_error("tolerance must be inside (0,1)");
    ChainSpec spec;
    spec.sites = sites;
    spec.coupling = 1;
    check_spec(spec);

    VectorC one(2), plus(2), plus_i(2);
    one << 0, 1;
    plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
    plus_i << 1 / std::sqrt(2.0), complexd(0, 1 / std::sqrt(2.0));
    const VectorC probes[] = {one, plus, plus_i};

    double t = std::numbers::pi / 2.0;
    CouplingSearch out;
    for (double tau = 0.5; tau <= 256.0; tau *= 1.01) {
        spec.coupling = tau;
        double worst = 0;
        for (const VectorC& psi : probes)
            worst = std::max(worst, 1.0 - chain_transfer_fidelity(spec, psi, t).fidelity);
        if (worst <= eps) {
            out.found = true;
            out.coupling = tau;
            out.infidelity = worst;
            return out;
        }
    }
    return out;
}

double heuristic_chain_error(int links, double coupling) {
    if (links < 1) throw invalid_argument_error("need at least one link");
    double c = std::cos(coupling * std::numbers::pi / (2.0 * links));
    return std::pow(c, 2 * links);
}

}  // namespace holosim
