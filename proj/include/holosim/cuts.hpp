#pragma once

#include "holosim/contraction.hpp"
#include "holosim/network.hpp"

#include <vector>

namespace holosim {

using RegionSpec = std::vector<int>;  // boundary leg ids

struct CutResult {
    std::vector<int> severed;  // ascending leg ids; lexicographically smallest minimum cut
    long long capacity = 0;    // qubits
    std::vector<int> region_side;      // tensors on the region side
    std::vector<int> complement_side;  // remaining tensors
};

struct GreedyResult {
    std::vector<int> cut_region;      // final cut grown from the region
    std::vector<int> cut_complement;  // final cut grown from the complement
    long long capacity_region = 0;
    long long capacity_complement = 0;
    long long overlap_qubits = 0;  // capacity of cut_region intersect cut_complement
    bool converged = false;
};

struct MIBudget {
    long long upper_bits = 0;  // gamma_v + gamma_w - overlap
    long long gamma_v = 0;
    long long gamma_w = 0;
    long long overlap = 0;
    double c1_bits_per_n = 0.0;  // (gamma_v + gamma_w)/n, the loose per-spin constant
};

// Minimum-capacity cut separating the region legs from the rest of the
// boundary. Leg capacities are qubit counts; bulk legs stay uncut terminals
// unless count_bulk. Ties broken toward the lexicographically smallest
// severed-leg id set.
CutResult min_cut(const LayeredNetwork& net, const RegionSpec& region, bool count_bulk = false);

// Max-flow value plus the region-side residual tensor set (the entanglement
// wedge). No lexicographic post-processing; used by the cone profiler.
std::pair<long long, std::vector<int>> min_cut_wedge(const LayeredNetwork& net,
                                                     const RegionSpec& region,
                                                     bool count_bulk = false);

// Absorbs any tensor at least half of whose legs the cut crosses, sweeping in
// tensor order until a fixpoint; the absorption rule is monotone, so the
// fixpoint does not depend on sweep order. Run from the region and from its
// complement.
GreedyResult greedy_geodesic(const LayeredNetwork& net, const RegionSpec& region);

// (lower, upper) entropy bounds in bits: greedy overlap capacity and min-cut
// capacity.
std::pair<long long, long long> entropy_bounds(const LayeredNetwork& net, const RegionSpec& region);

// Von Neumann entropy (base 2) of the reduced state on the region legs;
// eigenvalues below 1e-12 are treated as zero.
double exact_region_entropy(const BoundaryState& state, const RegionSpec& region);

MIBudget mutual_info_budget(const LayeredNetwork& net, const RegionSpec& v, const RegionSpec& w);

// Two-round pre-shared entanglement bound 2*(gamma_v + gamma_w)*n bits; the
// defaulted overload uses gamma = 2R per player per round.
double qpv_total_entanglement(int R, int n, int gamma_v, int gamma_w);
double qpv_total_entanglement(int R, int n);

// Exhaustive minimum over all tensor bipartitions; only for small networks.
long long brute_force_min_cut(const LayeredNetwork& net, const RegionSpec& region,
                              bool count_bulk = false);

// Min-cut capacities for many regions. The plain version fans out across
// OpenMP threads when available; the serial one is the reference.
std::vector<long long> batch_min_cut_capacities(const LayeredNetwork& net,
                                                const std::vector<RegionSpec>& regions,
                                                bool count_bulk = false);
std::vector<long long> batch_min_cut_capacities_serial(const LayeredNetwork& net,
                                                       const std::vector<RegionSpec>& regions,
                                                       bool count_bulk = false);

}  // namespace holosim
