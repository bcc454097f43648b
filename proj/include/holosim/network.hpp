#pragma once

#include <string>
#include <vector>

namespace holosim {

struct TessellationSpec {
    int p = 5;   // polygon sides
    int q = 4;   // polygons meeting at a vertex
    int R = 0;   // truncation radius in layers
    int n = 1;   // qubits per bulk leg bundle
    int m = 1;   // qubits per contracted/boundary leg bundle
    std::string tensor_kind = "five_qubit";
    int dense_limit = 20;
};

enum class LegKind { contracted, boundary, bulk };

struct Leg {
    LegKind kind;
    int qubits;
    int tensor_a;
    int slot_a;
    int tensor_b = -1;  // -1: dangling (boundary or bulk)
    int slot_b = -1;
};

struct TensorNode {
    int layer;
    std::vector<int> legs;  // polygon slots in face order, bulk leg last
};

struct LayeredNetwork {
    TessellationSpec spec;
    std::vector<TensorNode> tensors;
    std::vector<Leg> legs;
    std::vector<int> boundary_legs;  // ascending leg id
    std::vector<int> boundary_walk;  // perimeter order, same legs
    std::vector<int> layer_counts;   // tensors per layer, x = 0..R
    int first_bulk_leg = 0;          // ids >= this are bulk legs

    bool is_bulk(int leg) const { return leg >= first_bulk_leg; }
    bool is_boundary(int leg) const {
        return leg >= 0 && leg < first_bulk_leg && legs[leg].kind == LegKind::boundary;
    }
    int tensor_count() const { return static_cast<int>(tensors.size()); }
    int leg_count() const { return static_cast<int>(legs.size()); }
    // Other endpoint of a contracted leg seen from (tensor, slot).
    std::pair<int, int> other_end(int leg, int tensor, int slot) const;
};

// Deterministic truncated {p,q} tessellation populated with one tensor per
// face. Faces are kept when their edge-adjacency BFS distance from the
// central face is at most R; that distance is the layer index.
LayeredNetwork build_tessellation(const TessellationSpec& spec);

// One tensor with `boundary_count` boundary legs plus its bulk leg. Used by
// the degenerate examples (identity and Bell-pair networks).
LayeredNetwork star_network(int boundary_count, const TessellationSpec& base);

// Growth rate tau: least-squares slope of log(layer count) vs layer, fitted
// on layers x >= 1 (the seed cell is excluded as a transient).
double measure_growth_rate(const LayeredNetwork& net);

// One line per leg: tensor_id_a leg_index_a {tensor_id_b|BOUNDARY|BULK}
// {leg_index_b|global leg id} qubit_count.
std::string export_edge_list(const LayeredNetwork& net);

}  // namespace holosim
