#include "holosim/contraction.hpp"

#include "holosim/errors.hpp"
#include "holosim/tensors.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace holosim {

long long DenseTensor::size() const {
    long long s = 1;
    for (long long d : dims) s *= d;
    return s;
}

DenseTensor permute_axes(const DenseTensor& t, const std::vector<int>& perm) {
    int rank = static_cast<int>(t.dims.size());
    if (static_cast<int>(perm.size()) != rank)
        throw invalid_argument_error("permute_axes: axis list length does not match rank");
    std::vector<char> seen(rank, 0);
    for (int ax : perm) {
        if (ax < 0 || ax >= rank || seen[ax])
            throw invalid_argument_error("permute_axes: axis list is not a permutation");
        seen[ax] = 1;
    }
    DenseTensor out;
    out.dims.resize(rank);
    for (int i = 0; i < rank; ++i) out.dims[i] = t.dims[perm[i]];
    out.data.resize(t.data.size());
    std::vector<long long> in_stride(rank, 1);
    for (int i = rank - 2; i >= 0; --i) in_stride[i] = in_stride[i + 1] * t.dims[i + 1];
    // stride of output axis i inside the input layout
    std::vector<long long> src_stride(rank);
    for (int i = 0; i < rank; ++i) src_stride[i] = in_stride[perm[i]];
    std::vector<long long> idx(rank, 0);
    long long src = 0;
    for (long long dst = 0; dst < static_cast<long long>(out.data.size()); ++dst) {
        out.data[dst] = t.data[src];
        for (int ax = rank - 1; ax >= 0; --ax) {
            src += src_stride[ax];
            if (++idx[ax] < out.dims[ax]) break;
            src -= src_stride[ax] * out.dims[ax];
            idx[ax] = 0;
        }
    }
    return out;
}

DenseTensor tensordot(const DenseTensor& a, const DenseTensor& b, const std::vector<int>& axes_a,
                      const std::vector<int>& axes_b) {
    if (axes_a.size() != axes_b.size())
        throw invalid_argument_error("tensordot: axis lists differ in length");
    auto split = [](const DenseTensor& t, const std::vector<int>& contracted, bool shared_first) {
        std::vector<int> keep;
        for (int i = 0; i < static_cast<int>(t.dims.size()); ++i)
            if (std::find(contracted.begin(), contracted.end(), i) == contracted.end())
                keep.push_back(i);
        std::vector<int> perm;
        if (shared_first) {
            perm = contracted;
            perm.insert(perm.end(), keep.begin(), keep.end());
        } else {
            perm = keep;
            perm.insert(perm.end(), contracted.begin(), contracted.end());
        }
        return std::make_pair(perm, keep);
    };
    auto [perm_a, keep_a] = split(a, axes_a, false);
    auto [perm_b, keep_b] = split(b, axes_b, true);
    long long shared = 1;
    for (size_t i = 0; i < axes_a.size(); ++i) {
        if (a.dims[axes_a[i]] != b.dims[axes_b[i]])
            throw structural_mismatch_error("tensordot: contracted dimensions differ");
        shared *= a.dims[axes_a[i]];
    }
    DenseTensor pa = permute_axes(a, perm_a);
    DenseTensor pb = permute_axes(b, perm_b);
    long long rows = pa.size() / shared, cols = pb.size() / shared;
    using RM = Eigen::Matrix<complexd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    Eigen::Map<const RM> ma(pa.data.data(), rows, shared);
    Eigen::Map<const RM> mb(pb.data.data(), shared, cols);
    DenseTensor out;
    for (int i : keep_a) out.dims.push_back(a.dims[i]);
    for (int i : keep_b) out.dims.push_back(b.dims[i]);
    if (out.dims.empty()) out.dims.push_back(1);
    out.data.resize(rows * cols);
    Eigen::Map<RM>(out.data.data(), rows, cols) = ma * mb;
    return out;
}

namespace {

// Node tensor for one network cell, axes: slot 0..k-1 then the bulk axis.
DenseTensor node_tensor(const TessellationSpec& spec, int slots) {
    long long dm = 1LL << spec.m, dn = 1LL << spec.n;
    DenseTensor t;
    if (spec.tensor_kind == "five_qubit") {
        if (spec.m != 1 || spec.n != 1)
            throw unsupported_error("five_qubit tensors are defined at n = m = 1");
        if (slots != 5) throw structural_mismatch_error("five_qubit tensor needs 5 slots");
        PerfectTensorData p = make_perfect_tensor(6, 2);
        t.dims.assign(6, 2);
        t.data = p.amps;  // each logical column normalized; overall scale fixed downstream
        return t;
    }
    if (spec.tensor_kind == "identity") {
        if (spec.n != spec.m) throw unsupported_error("identity tensors need n = m");
        if (slots != 1) throw structural_mismatch_error("identity tensor needs 1 slot");
        t.dims = {dm, dn};
        t.data.assign(dm * dn, 0.0);
        for (long long i = 0; i < dm; ++i) t.data[i * dn + i] = 1.0;
        return t;
    }
    if (spec.tensor_kind == "bell") {
        if (spec.n != 1) throw unsupported_error("bell tensors need n = 1");
        if (slots != 2) throw structural_mismatch_error("bell tensor needs 2 slots");
        t.dims = {dm, dm, 2};
        t.data.assign(dm * dm * 2, 0.0);
        double a = 1.0 / std::sqrt(static_cast<double>(dm));
        for (long long i = 0; i < dm; ++i) {
            t.data[(i * dm + i) * 2] = a;            // bulk 0: maximally entangled pair
            t.data[(i * dm + (dm - 1 - i)) * 2 + 1] = a;  // bulk 1: index-reversed partner
        }
        return t;
    }
    throw config_error("unknown tensor_kind '" + spec.tensor_kind + "'");
}

struct Accumulated {
    DenseTensor t;
    std::vector<int> axis_legs;
};

// Contract tensors in network order, optionally fixing bulk legs to vectors.
Accumulated contract_network(const LayeredNetwork& net, const std::vector<VectorC>* bulk) {
    if (net.tensor_count() == 0) throw invalid_argument_error("cannot contract an empty network");
    Accumulated acc;
    bool first = true;
    for (int i = 0; i < net.tensor_count(); ++i) {
        int slots = static_cast<int>(net.tensors[i].legs.size()) - 1;
        DenseTensor cur = node_tensor(net.spec, slots);
        std::vector<int> cur_legs(net.tensors[i].legs.begin(), net.tensors[i].legs.end());
        if (bulk) {
            const VectorC& v = (*bulk)[i];
            if (v.size() != cur.dims.back())
                throw invalid_argument_error("bulk state dimension mismatch on tensor " +
                                             std::to_string(i));
            DenseTensor vec;
            vec.dims = {cur.dims.back()};
            vec.data.assign(v.data(), v.data() + v.size());
            cur = tensordot(cur, vec, {slots}, {0});
            cur_legs.pop_back();
        }
        if (first) {
            acc.t = std::move(cur);
            acc.axis_legs = std::move(cur_legs);
            first = false;
            continue;
        }
        std::vector<int> ax_a, ax_b, next_legs;
        for (size_t k = 0; k < acc.axis_legs.size(); ++k) {
            auto it = std::find(cur_legs.begin(), cur_legs.end(), acc.axis_legs[k]);
            if (it != cur_legs.end()) {
                ax_a.push_back(static_cast<int>(k));
                ax_b.push_back(static_cast<int>(it - cur_legs.begin()));
            } else {
                next_legs.push_back(acc.axis_legs[k]);
            }
        }
        for (size_t k = 0; k < cur_legs.size(); ++k)
            if (std::find(acc.axis_legs.begin(), acc.axis_legs.end(), cur_legs[k]) ==
                acc.axis_legs.end())
                next_legs.push_back(cur_legs[k]);
        acc.t = tensordot(acc.t, cur, ax_a, ax_b);
        acc.axis_legs = std::move(next_legs);
    }
    return acc;
}

std::vector<int> sorted_positions(const std::vector<int>& legs) {
    std::vector<int> order(legs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return legs[a] < legs[b]; });
    return order;
}

}  // namespace

BoundaryState contract_to_boundary_state(const LayeredNetwork& net,
                                         const std::vector<VectorC>& bulk_assignment) {
    long long boundary_qubits =
        static_cast<long long>(net.boundary_legs.size()) * net.spec.m;
    if (boundary_qubits > net.spec.dense_limit)
        throw size_limit_error("boundary needs " + std::to_string(boundary_qubits) +
                               " qubits, dense limit is " + std::to_string(net.spec.dense_limit));
    std::vector<VectorC> bulk = bulk_assignment;
    if (bulk.empty()) {
        VectorC zero = VectorC::Zero(1LL << net.spec.n);
        zero(0) = 1.0;
        bulk.assign(net.tensor_count(), zero);
    }
    if (static_cast<int>(bulk.size()) != net.tensor_count())
        throw invalid_argument_error("bulk assignment needs one state per tensor");
    Accumulated acc = contract_network(net, &bulk);
    acc.t = permute_axes(acc.t, sorted_positions(acc.axis_legs));
    BoundaryState st;
    st.qubits = static_cast<int>(boundary_qubits);
    st.qubits_per_leg = net.spec.m;
    st.leg_order = net.boundary_legs;
    st.amps = Eigen::Map<const VectorC>(acc.t.data.data(), acc.t.size());
    st.norm = st.amps.norm();
    if (st.norm < 1e-14) throw ill_conditioned_error("contracted state has zero norm");
    st.amps /= st.norm;
    return st;
}

MatrixC bulk_to_boundary_isometry(const LayeredNetwork& net) {
    long long boundary_qubits = static_cast<long long>(net.boundary_legs.size()) * net.spec.m;
    long long bulk_qubits = static_cast<long long>(net.tensor_count()) * net.spec.n;
    if (boundary_qubits + bulk_qubits > net.spec.dense_limit)
        throw size_limit_error("isometry needs " + std::to_string(boundary_qubits + bulk_qubits) +
                               " qubits, dense limit is " + std::to_string(net.spec.dense_limit));
    Accumulated acc = contract_network(net, nullptr);
    // boundary legs ascending, then bulk legs ascending
    std::vector<int> order = sorted_positions(acc.axis_legs);
    std::stable_partition(order.begin(), order.end(),
                          [&](int k) { return !net.is_bulk(acc.axis_legs[k]); });
    acc.t = permute_axes(acc.t, order);
    long long rows = 1LL << boundary_qubits, cols = 1LL << bulk_qubits;
    using RM = Eigen::Matrix<complexd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    MatrixC M = Eigen::Map<const RM>(acc.t.data.data(), rows, cols);
    MatrixC gram = M.adjoint() * M;
    double scale = gram(0, 0).real();
    if (scale < 1e-14) throw ill_conditioned_error("network contracts to a rank-deficient map");
    return M / std::sqrt(scale);
}

}  // namespace holosim
