#pragma once

#include "holosim/dense.hpp"
#include "holosim/network.hpp"

#include <vector>

namespace holosim {

// Row-major dense tensor. Axis 0 is the most significant index.
struct DenseTensor {
    std::vector<long long> dims;
    std::vector<complexd> data;

    long long size() const;
};

DenseTensor permute_axes(const DenseTensor& t, const std::vector<int>& perm);
// numpy-style tensordot: contracts axes_a of a against axes_b of b; result
// axes are a's kept axes (original order) followed by b's kept axes.
DenseTensor tensordot(const DenseTensor& a, const DenseTensor& b, const std::vector<int>& axes_a,
                      const std::vector<int>& axes_b);

struct BoundaryState {
    int qubits = 0;
    VectorC amps;                // normalized
    double norm = 0.0;           // norm before normalization
    std::vector<int> leg_order;  // boundary leg ids, ascending; axis i has qubits_per_leg qubits
    int qubits_per_leg = 1;
};

// Contracts the network with every bulk leg fixed to the given state (default
// all basis-0). Node tensors come from spec.tensor_kind: "five_qubit" needs
// n = m = 1 and 5 slots, "identity" n = m and 1 slot, "bell" n = 1 and 2 slots.
BoundaryState contract_to_boundary_state(const LayeredNetwork& net,
                                         const std::vector<VectorC>& bulk_assignment = {});

// Bulk space (product of bulk legs, ascending id) to boundary space, rescaled
// so that M^dag M = identity.
MatrixC bulk_to_boundary_isometry(const LayeredNetwork& net);

}  // namespace holosim
