#include "holosim/causal.hpp"

#include "holosim/cuts.hpp"
#include "holosim/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>

namespace holosim {
namespace {

void check_params(const DilationParams& p) {
    if (p.tau <= 1.0) throw invalid_argument_error("growth rate must exceed 1");
    if (p.R < 0) throw invalid_argument_error("radius must be non-negative");
    if (p.n < 1 || p.m < 1) throw invalid_argument_error("bundle sizes must be positive");
}

constexpr int kUnreached = std::numeric_limits<int>::max();

// Shallowest layer inside the entanglement wedge of a centered arc of k
// consecutive boundary legs at walk position anchor.
int arc_depth(const LayeredNetwork& net, int anchor, int k) {
    int nb = static_cast<int>(net.boundary_walk.size());
    RegionSpec region;
    region.reserve(k);
    for (int off = -((k - 1) / 2); off <= k / 2; ++off)
        region.push_back(net.boundary_walk[((anchor + off) % nb + nb) % nb]);
    auto [flow, wedge] = min_cut_wedge(net, region);
    (void)flow;
    int depth = kUnreached;
    for (int t : wedge) depth = std::min(depth, net.tensors[t].layer);
    return depth;
}

// Smallest arc at this anchor reaching layer <= x, or 0 when no arc shorter
// than ub does. Depth is monotone non-increasing in the arc size.
int anchor_need(const LayeredNetwork& net, int anchor, int x, int ub) {
    int nb = static_cast<int>(net.boundary_walk.size());
    int hi = std::min(ub - 1, nb - 1);
    if (hi < 1) return 0;
    if (arc_depth(net, anchor, hi) > x) return 0;
    int lo = 1;
    while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        if (arc_depth(net, anchor, mid) <= x)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

std::vector<long long> need_per_layer_serial(const LayeredNetwork& net) {
    int R = net.spec.R;
    int nb = static_cast<int>(net.boundary_walk.size());
    std::vector<long long> need(R + 1, 0);
    for (int x = R; x >= 0; --x) {
        int ub = nb;
        for (int a = 0; a < nb; ++a)
            if (int c = anchor_need(net, a, x, ub)) ub = std::min(ub, c);
        if (ub >= nb) throw structural_mismatch_error("no boundary arc reaches layer " +
                                                      std::to_string(x));
        need[x] = ub;
    }
    return need;
}

std::vector<long long> need_per_layer_parallel(const LayeredNetwork& net) {
    int R = net.spec.R;
    int nb = static_cast<int>(net.boundary_walk.size());
    std::vector<long long> need(R + 1, 0);
    for (int x = R; x >= 0; --x) {
        // Min-reduction over anchors. Pruning against a stale bound only
        // skips anchors that cannot improve it, so the result matches the
        // serial sweep exactly.
        std::atomic<int> ub{nb};
#pragma omp parallel for schedule(dynamic)
        for (int a = 0; a < nb; ++a) {
            int c = anchor_need(net, a, x, ub.load());
            if (!c) continue;
            int prev = ub.load();
            while (c < prev && !ub.compare_exchange_weak(prev, c)) {
            }
        }
        if (ub.load() >= nb)
            throw structural_mismatch_error("no boundary arc reaches layer " + std::to_string(x));
        need[x] = ub.load();
    }
    return need;
}

ConeProfile profile_from_need(const LayeredNetwork& net, const NormSchedule& schedule,
                              std::vector<long long> need) {
    ConeProfile p;
    p.need = std::move(need);
    for (int x = net.spec.R - 1; x >= 0; --x) {
        ConeRow row;
        row.layer = x;
        row.bulk_time = net.spec.n / (2.0 * schedule.h[x]);
        row.cone_qubits = net.spec.m * (p.need[x] - p.need[x + 1]);
        row.velocity = row.cone_qubits / row.bulk_time;
        p.rows.push_back(row);
    }
    return p;
}

void check_butterfly_inputs(const LayeredNetwork& net, const NormSchedule& schedule) {
    if (net.spec.R < 1) throw invalid_argument_error("cone profile needs at least two layers");
    if (static_cast<int>(schedule.h.size()) != net.spec.R + 1)
        throw invalid_argument_error("schedule must carry one norm per layer");
    for (double h : schedule.h)
        if (h <= 0) throw invalid_argument_error("interaction norms must be positive");
}

}  // namespace

double layer_radius(int x, double tau, int n) {
    if (x < 0) throw invalid_argument_error("layer must be non-negative");
    if (tau <= 1.0) throw invalid_argument_error("growth rate must exceed 1");
    if (n < 1) throw invalid_argument_error("bundle size must be positive");
    return x * std::log(tau) + std::log(static_cast<double>(n));
}

double dilation_factor(int x, const DilationParams& params, bool exact) {
    check_params(params);
    if (x < 0 || x > params.R) throw invalid_argument_error("layer out of range");
    if (!exact) return std::pow(params.tau, params.R - x);
    double outer = params.n * std::pow(params.tau, params.R);
    double inner = params.n * std::pow(params.tau, x);
    return (outer + 1.0 / outer) / (inner + 1.0 / inner);
}

NormSchedule norm_schedule(const DilationParams& params) {
    check_params(params);
    NormSchedule s;
    for (int x = 0; x <= params.R; ++x) s.h.push_back(std::pow(params.tau, x - params.R));
    return s;
}

NormSchedule uniform_schedule(int R) {
    if (R < 0) throw invalid_argument_error("radius must be non-negative");
    NormSchedule s;
    s.h.assign(R + 1, 1.0);
    return s;
}

TransitTimes transit_times(const DilationParams& params) {
    check_params(params);
    TransitTimes t;
    t.t1 = 2.0 * params.n * (std::pow(params.tau, params.R + 1) - 1.0) / (params.tau - 1.0);
    t.t2 = params.m * std::pow(params.tau, params.R);
    t.ratio = t.t1 / t.t2;
    return t;
}

double lr_velocity(const LRParams& params) {
    if (params.k < 1) throw invalid_argument_error("locality must be at least 1");
    if (params.s < 0) throw invalid_argument_error("strength bound must be non-negative");
    if (params.mu <= 0) throw invalid_argument_error("decay rate must be positive");
    return 2.0 * params.k * params.s / params.mu;
}

std::vector<double> bulk_lr_profile(const NormSchedule& schedule) {
    std::vector<double> v;
    for (double h : schedule.h) {
        if (h <= 0) throw invalid_argument_error("interaction norms must be positive");
        v.push_back(2.0 * h);
    }
    return v;
}

ConeProfile butterfly_profile_serial(const LayeredNetwork& net, const NormSchedule& schedule) {
    check_butterfly_inputs(net, schedule);
    return profile_from_need(net, schedule, need_per_layer_serial(net));
}

ConeProfile butterfly_profile(const LayeredNetwork& net, const NormSchedule& schedule) {
    check_butterfly_inputs(net, schedule);
    return profile_from_need(net, schedule, need_per_layer_parallel(net));
}

}  // namespace holosim
