#include "holosim/cuts.hpp"

#include "holosim/errors.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace holosim {
namespace {

constexpr long long kInfCap = 1LL << 50;

struct Dinic {
    struct Arc {
        int to;
        long long cap;
    };
    std::vector<Arc> arcs;  // arc 2k and 2k+1 are mutual reverses
    std::vector<std::vector<int>> head;
    std::vector<int> level, iter;

    explicit Dinic(int n) : head(n), level(n), iter(n) {}

    void add_undirected(int u, int v, long long c) {
        head[u].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({v, c});
        head[v].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({u, c});
    }

    bool bfs(int s, int t) {
        std::fill(level.begin(), level.end(), -1);
        std::deque<int> q{s};
        level[s] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int a : head[u])
                if (arcs[a].cap > 0 && level[arcs[a].to] < 0) {
                    level[arcs[a].to] = level[u] + 1;
                    q.push_back(arcs[a].to);
                }
        }
        return level[t] >= 0;
    }

    long long dfs(int u, int t, long long lim) {
        if (u == t) return lim;
        for (int& i = iter[u]; i < static_cast<int>(head[u].size()); ++i) {
            int a = head[u][i];
            if (arcs[a].cap <= 0 || level[arcs[a].to] != level[u] + 1) continue;
            long long d = dfs(arcs[a].to, t, std::min(lim, arcs[a].cap));
            if (d > 0) {
                arcs[a].cap -= d;
                arcs[a ^ 1].cap += d;
                return d;
            }
        }
        return 0;
    }

    long long max_flow(int s, int t) {
        long long flow = 0;
        while (bfs(s, t)) {
            std::fill(iter.begin(), iter.end(), 0);
            while (long long d = dfs(s, t, kInfCap)) flow += d;
        }
        return flow;
    }

    std::vector<char> residual_reachable(int s) {
        std::vector<char> seen(head.size(), 0);
        std::deque<int> q{s};
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int a : head[u])
                if (arcs[a].cap > 0 && !seen[arcs[a].to]) {
                    seen[arcs[a].to] = 1;
                    q.push_back(arcs[a].to);
                }
        }
        return seen;
    }
};

std::vector<char> region_flags(const LayeredNetwork& net, const RegionSpec& region) {
    std::vector<char> in(net.leg_count(), 0);
    for (int l : region) {
        if (!net.is_boundary(l))
            throw invalid_argument_error("leg " + std::to_string(l) + " is not a boundary leg");
        in[l] = 1;
    }
    return in;
}

// Flow graph: node 0 source, 1 sink, 2+i tensor i. Region boundary legs hang
// off the source, the rest off the sink; contracted legs join tensors.
// cap_override: per-leg forced capacity (-1 keeps the qubit count).
Dinic build_graph(const LayeredNetwork& net, const std::vector<char>& in_region, bool count_bulk,
                  const std::vector<long long>* cap_override) {
    Dinic d(2 + net.tensor_count());
    for (int l = 0; l < net.leg_count(); ++l) {
        const Leg& leg = net.legs[l];
        long long cap = leg.qubits;
        if (cap_override && (*cap_override)[l] >= 0) cap = (*cap_override)[l];
        switch (leg.kind) {
            case LegKind::contracted:
                d.add_undirected(2 + leg.tensor_a, 2 + leg.tensor_b, cap);
                break;
            case LegKind::boundary:
                d.add_undirected(in_region[l] ? 0 : 1, 2 + leg.tensor_a, cap);
                break;
            case LegKind::bulk:
                if (count_bulk) d.add_undirected(2 + leg.tensor_a, 1, cap);
                break;
        }
    }
    return d;
}

long long flow_value(const LayeredNetwork& net, const std::vector<char>& in_region, bool count_bulk,
                     const std::vector<long long>* cap_override = nullptr) {
    Dinic d = build_graph(net, in_region, count_bulk, cap_override);
    return d.max_flow(0, 1);
}

}  // namespace

std::pair<long long, std::vector<int>> min_cut_wedge(const LayeredNetwork& net,
                                                     const RegionSpec& region, bool count_bulk) {
    std::vector<char> in = region_flags(net, region);
    Dinic d = build_graph(net, in, count_bulk, nullptr);
    long long f = d.max_flow(0, 1);
    std::vector<char> seen = d.residual_reachable(0);
    std::vector<int> wedge;
    for (int i = 0; i < net.tensor_count(); ++i)
        if (seen[2 + i]) wedge.push_back(i);
    return {f, wedge};
}

CutResult min_cut(const LayeredNetwork& net, const RegionSpec& region, bool count_bulk) {
    std::vector<char> in = region_flags(net, region);
    long long base = flow_value(net, in, count_bulk);
    CutResult res;
    res.capacity = base;

    // Lexicographic minimum cut: walk legs in id order, force each severed
    // (capacity 0, counted) if a minimum cut through it still exists,
    // otherwise pin it uncuttable (infinite capacity).
    std::vector<long long> cap(net.leg_count(), -1);
    long long removed = 0;
    for (int l = 0; l < net.leg_count() && removed < base; ++l) {
        if (net.legs[l].kind == LegKind::bulk && !count_bulk) continue;
        long long c = net.legs[l].qubits;
        cap[l] = 0;
        if (flow_value(net, in, count_bulk, &cap) + removed + c == base) {
            removed += c;
            res.severed.push_back(l);
        } else {
            cap[l] = kInfCap;
        }
    }
    Dinic fin = build_graph(net, in, count_bulk, &cap);
    fin.max_flow(0, 1);
    std::vector<char> seen = fin.residual_reachable(0);
    for (int i = 0; i < net.tensor_count(); ++i)
        (seen[2 + i] ? res.region_side : res.complement_side).push_back(i);
    return res;
}

GreedyResult greedy_geodesic(const LayeredNetwork& net, const RegionSpec& region) {
    std::vector<char> in = region_flags(net, region);
    auto run = [&](const std::vector<char>& start) {
        std::vector<char> cut = start;
        std::vector<char> absorbed(net.tensor_count(), 0);
        int sweeps = 0;
        bool changed = true;
        while (changed && sweeps <= net.tensor_count() + 1) {
            changed = false;
            ++sweeps;
            for (int i = 0; i < net.tensor_count(); ++i) {
                if (absorbed[i]) continue;
                const std::vector<int>& legs = net.tensors[i].legs;
                int crossed = 0;
                for (int l : legs) crossed += cut[l];
                if (2 * crossed < static_cast<int>(legs.size())) continue;
                absorbed[i] = 1;
                changed = true;
                for (int l : legs)
                    if (!net.is_bulk(l)) cut[l] = !cut[l];
            }
        }
        return std::make_pair(cut, !changed);
    };
    std::vector<char> comp(net.leg_count(), 0);
    for (int l : net.boundary_legs) comp[l] = !in[l];

    auto [cut_a, ok_a] = run(in);
    auto [cut_b, ok_b] = run(comp);
    GreedyResult g;
    g.converged = ok_a && ok_b;
    for (int l = 0; l < net.leg_count(); ++l) {
        if (cut_a[l]) {
            g.cut_region.push_back(l);
            g.capacity_region += net.legs[l].qubits;
        }
        if (cut_b[l]) {
            g.cut_complement.push_back(l);
            g.capacity_complement += net.legs[l].qubits;
        }
        if (cut_a[l] && cut_b[l]) g.overlap_qubits += net.legs[l].qubits;
    }
    return g;
}

std::pair<long long, long long> entropy_bounds(const LayeredNetwork& net,
                                               const RegionSpec& region) {
    GreedyResult g = greedy_geodesic(net, region);
    CutResult c = min_cut(net, region);
    return {g.overlap_qubits, c.capacity};
}

double exact_region_entropy(const BoundaryState& state, const RegionSpec& region) {
    std::vector<int> axes;
    for (int l : region) {
        auto it = std::find(state.leg_order.begin(), state.leg_order.end(), l);
        if (it == state.leg_order.end())
            throw invalid_argument_error("leg " + std::to_string(l) + " not carried by the state");
        axes.push_back(static_cast<int>(it - state.leg_order.begin()));
    }
    int nlegs = static_cast<int>(state.leg_order.size());
    DenseTensor t;
    t.dims.assign(nlegs, 1LL << state.qubits_per_leg);
    t.data.assign(state.amps.data(), state.amps.data() + state.amps.size());
    std::vector<int> perm = axes;
    for (int i = 0; i < nlegs; ++i)
        if (std::find(axes.begin(), axes.end(), i) == axes.end()) perm.push_back(i);
    DenseTensor pt = permute_axes(t, perm);
    long long rows = 1;
    for (size_t i = 0; i < axes.size(); ++i) rows *= pt.dims[i];
    long long cols = pt.size() / rows;
    using RM = Eigen::Matrix<complexd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    Eigen::Map<const RM> A(pt.data.data(), rows, cols);
    MatrixC rho = rows <= cols ? MatrixC(A * A.adjoint()) : MatrixC(A.adjoint() * A);
    Eigen::SelfAdjointEigenSolver<MatrixC> es(rho, Eigen::EigenvaluesOnly);
    double s = 0;
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        double w = es.eigenvalues()(i);
        if (w > 1e-12) s -= w * std::log2(w);
    }
    return s;
}

MIBudget mutual_info_budget(const LayeredNetwork& net, const RegionSpec& v, const RegionSpec& w) {
    std::set<int> vs(v.begin(), v.end());
    for (int l : w)
        if (vs.count(l))
            throw invalid_argument_error("regions share leg " + std::to_string(l));
    MIBudget b;
    b.gamma_v = min_cut(net, v).capacity;
    b.gamma_w = min_cut(net, w).capacity;
    RegionSpec joint = v;
    joint.insert(joint.end(), w.begin(), w.end());
    b.overlap = greedy_geodesic(net, joint).overlap_qubits;
    b.upper_bits = b.gamma_v + b.gamma_w - b.overlap;
    b.c1_bits_per_n = static_cast<double>(b.gamma_v + b.gamma_w) / net.spec.n;
    return b;
}

double qpv_total_entanglement(int R, int n, int gamma_v, int gamma_w) {
    if (R < 0 || n < 0 || gamma_v < 0 || gamma_w < 0)
        throw invalid_argument_error("entanglement bound needs non-negative inputs");
    return 2.0 * (gamma_v + gamma_w) * n;
}

double qpv_total_entanglement(int R, int n) { return qpv_total_entanglement(R, n, 2 * R, 2 * R); }

long long brute_force_min_cut(const LayeredNetwork& net, const RegionSpec& region,
                              bool count_bulk) {
    if (net.tensor_count() > 20)
        throw size_limit_error("exhaustive cut enumeration capped at 20 tensors");
    std::vector<char> in = region_flags(net, region);
    long long best = kInfCap;
    for (unsigned mask = 0; mask < (1u << net.tensor_count()); ++mask) {
        // mask bit set: tensor on the region (source) side
        long long cap = 0;
        for (int l = 0; l < net.leg_count(); ++l) {
            const Leg& leg = net.legs[l];
            bool a = mask >> leg.tensor_a & 1;
            switch (leg.kind) {
                case LegKind::contracted:
                    if (a != static_cast<bool>(mask >> leg.tensor_b & 1)) cap += leg.qubits;
                    break;
                case LegKind::boundary:
                    if (a != static_cast<bool>(in[l])) cap += leg.qubits;
                    break;
                case LegKind::bulk:
                    if (count_bulk && a) cap += leg.qubits;
                    break;
            }
        }
        best = std::min(best, cap);
    }
    return best;
}

std::vector<long long> batch_min_cut_capacities_serial(const LayeredNetwork& net,
                                                       const std::vector<RegionSpec>& regions,
                                                       bool count_bulk) {
    std::vector<long long> out(regions.size());
    for (size_t i = 0; i < regions.size(); ++i) {
        std::vector<char> in = region_flags(net, regions[i]);
        out[i] = flow_value(net, in, count_bulk);
    }
    return out;
}

std::vector<long long> batch_min_cut_capacities(const LayeredNetwork& net,
                                                const std::vector<RegionSpec>& regions,
                                                bool count_bulk) {
    std::vector<long long> out(regions.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(regions.size()); ++i) {
        std::vector<char> in = region_flags(net, regions[i]);
        out[i] = flow_value(net, in, count_bulk);
    }
    return out;
}

}  // namespace holosim
