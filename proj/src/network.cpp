#include "holosim/network.hpp"
#include "holosim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <sstream>

namespace holosim {
namespace {

constexpr int kDefaultTensorCap = 20000;

// Annular {p,q} tiling grown face ring by face ring. All face cycles share one
// orientation so that a new face sitting on old boundary edge (u -> v)
// traverses it as v -> u.
struct Tiling {
    int p, q;
    std::vector<std::vector<int>> fv;  // face -> vertex cycle
    std::vector<std::vector<int>> fe;  // face -> edge cycle, fe[f][i] joins fv[f][i], fv[f][i+1]
    std::vector<std::vector<int>> ef;  // edge -> incident faces (1 or 2)
    std::vector<int> vc;               // vertex -> face count so far
    int nv = 0;
    int ne = 0;

    Tiling(int p_, int q_, int rings, int face_cap) : p(p_), q(q_) {
        std::vector<int> vs(p), es(p);
        for (int i = 0; i < p; ++i) vs[i] = new_vert();
        for (int i = 0; i < p; ++i) es[i] = new_edge();
        add_face(vs, es);
        std::vector<int> bv = vs, be = es;
        for (int r = 1; r <= rings; ++r) {
            grow_ring(bv, be);
            if (static_cast<int>(fv.size()) > face_cap)
                throw size_limit_error("tessellation face count exceeds cap while growing ring " +
                                       std::to_string(r));
        }
    }

    int new_vert() {
        vc.push_back(0);
        return nv++;
    }
    int new_edge() {
        ef.emplace_back();
        return ne++;
    }
    int add_face(const std::vector<int>& verts, const std::vector<int>& edges) {
        int fid = static_cast<int>(fv.size());
        fv.push_back(verts);
        fe.push_back(edges);
        for (int e : edges) ef[e].push_back(fid);
        for (int v : verts) ++vc[v];
        return fid;
    }

    // One inflation step. Boundary arrives as vertex cycle bv and edge cycle
    // be (be[i] joins bv[i], bv[i+1]); returns the new boundary the same way.
    void grow_ring(std::vector<int>& bv, std::vector<int>& be) {
        int k = static_cast<int>(bv.size());
        // Angular plan: an edge face over be[i], then one vertex face per
        // missing polygon at the head vertex. vc must be read before any face
        // of this ring is added, hence the separate planning pass.
        struct Slot {
            bool edge_face;
            int at;
        };
        std::vector<Slot> plan;
        for (int i = 0; i < k; ++i) {
            plan.push_back({true, i});
            int head = bv[(i + 1) % k];
            for (int d = 0; d < q - vc[head] - 2; ++d) plan.push_back({false, (i + 1) % k});
        }
        int F = static_cast<int>(plan.size());
        std::vector<std::vector<int>> own(F);
        std::vector<int> endlat(F);
        for (int j = 0; j < F; ++j) {
            int fresh = plan[j].edge_face ? p - 3 : p - 2;
            own[j].resize(fresh);
            for (int& v : own[j]) v = new_vert();
            endlat[j] = new_edge();
        }
        std::vector<int> nbv, nbe;
        for (int j = 0; j < F; ++j) {
            int jp = (j + F - 1) % F;
            std::vector<int> chain;
            chain.push_back(own[jp].back());
            chain.insert(chain.end(), own[j].begin(), own[j].end());
            std::vector<int> inner(chain.size() - 1);
            for (int& e : inner) e = new_edge();
            std::vector<int> verts, edges;
            if (plan[j].edge_face) {
                int a = plan[j].at;
                verts = {bv[(a + 1) % k], bv[a]};
                edges = {be[a], endlat[jp]};
            } else {
                verts = {bv[plan[j].at]};
                edges = {endlat[jp]};
            }
            verts.insert(verts.end(), chain.begin(), chain.end());
            edges.insert(edges.end(), inner.begin(), inner.end());
            edges.push_back(endlat[j]);
            add_face(verts, edges);
            nbv.insert(nbv.end(), chain.begin(), chain.end() - 1);
            nbe.insert(nbe.end(), inner.begin(), inner.end());
        }
        bv = std::move(nbv);
        be = std::move(nbe);
    }
};

std::vector<int> face_distances(const Tiling& t) {
    std::vector<int> dist(t.fv.size(), -1);
    dist[0] = 0;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int f = queue.front();
        queue.pop_front();
        for (int e : t.fe[f])
            for (int g : t.ef[e])
                if (dist[g] < 0) {
                    dist[g] = dist[f] + 1;
                    queue.push_back(g);
                }
    }
    return dist;
}

}  // namespace

std::pair<int, int> LayeredNetwork::other_end(int leg, int tensor, int slot) const {
    const Leg& l = legs.at(leg);
    if (l.tensor_a == tensor && l.slot_a == slot) return {l.tensor_b, l.slot_b};
    return {l.tensor_a, l.slot_a};
}

LayeredNetwork build_tessellation(const TessellationSpec& spec) {
    if ((spec.p - 2) * (spec.q - 2) <= 4)
        throw invalid_argument_error("tiling {" + std::to_string(spec.p) + "," +
                                     std::to_string(spec.q) + "} is not hyperbolic");
    if (spec.p < 4 || spec.q < 4)
        throw unsupported_error("annular generator requires p >= 4 and q >= 4");
    if (spec.R < 0 || spec.n < 1 || spec.m < 1)
        throw invalid_argument_error("R must be >= 0 and n, m >= 1");

    // Two rings past R so every kept face has its full edge neighbourhood.
    Tiling tiling(spec.p, spec.q, spec.R + 2, kDefaultTensorCap * 8);
    std::vector<int> dist = face_distances(tiling);

    std::vector<int> keep;
    for (int f = 0; f < static_cast<int>(dist.size()); ++f)
        if (dist[f] >= 0 && dist[f] <= spec.R) keep.push_back(f);
    std::sort(keep.begin(), keep.end(),
              [&](int a, int b) { return std::make_pair(dist[a], a) < std::make_pair(dist[b], b); });
    if (static_cast<int>(keep.size()) > kDefaultTensorCap)
        throw size_limit_error("tensor count " + std::to_string(keep.size()) + " exceeds cap " +
                               std::to_string(kDefaultTensorCap));

    LayeredNetwork net;
    net.spec = spec;
    net.tensors.resize(keep.size());
    net.layer_counts.assign(spec.R + 1, 0);
    for (size_t i = 0; i < keep.size(); ++i) {
        net.tensors[i].layer = dist[keep[i]];
        net.tensors[i].legs.assign(spec.p + 1, -1);
        ++net.layer_counts[dist[keep[i]]];
    }

    // Leg ids follow ascending tiling edge id: an edge with two kept faces is
    // one contracted leg, with one kept face a boundary leg. Bulk legs are
    // appended after all edge legs, in tensor order.
    std::vector<std::vector<std::pair<int, int>>> loc(tiling.ne);
    for (size_t i = 0; i < keep.size(); ++i) {
        const std::vector<int>& edges = tiling.fe[keep[i]];
        for (int pos = 0; pos < spec.p; ++pos)
            loc[edges[pos]].push_back({static_cast<int>(i), pos});
    }
    for (int e = 0; e < tiling.ne; ++e) {
        if (loc[e].empty()) continue;
        int id = static_cast<int>(net.legs.size());
        Leg leg;
        leg.qubits = spec.m;
        leg.tensor_a = loc[e][0].first;
        leg.slot_a = loc[e][0].second;
        if (loc[e].size() == 2) {
            leg.kind = LegKind::contracted;
            leg.tensor_b = loc[e][1].first;
            leg.slot_b = loc[e][1].second;
            net.tensors[leg.tensor_b].legs[leg.slot_b] = id;
        } else {
            leg.kind = LegKind::boundary;
            net.boundary_legs.push_back(id);
        }
        net.tensors[leg.tensor_a].legs[leg.slot_a] = id;
        net.legs.push_back(leg);
    }
    net.first_bulk_leg = static_cast<int>(net.legs.size());
    for (size_t i = 0; i < keep.size(); ++i) {
        Leg leg;
        leg.kind = LegKind::bulk;
        leg.qubits = spec.n;
        leg.tensor_a = static_cast<int>(i);
        leg.slot_a = spec.p;
        net.tensors[i].legs[spec.p] = static_cast<int>(net.legs.size());
        net.legs.push_back(leg);
    }

    // Perimeter walk. From slot (i, pos) the next boundary slot is found by
    // rotating around the shared vertex: step to (i, pos+1) and hop across
    // contracted legs until a dangling slot appears.
    if (!net.boundary_legs.empty()) {
        int start_leg = net.boundary_legs.front();
        std::pair<int, int> start{net.legs[start_leg].tensor_a, net.legs[start_leg].slot_a};
        std::pair<int, int> cur = start;
        do {
            net.boundary_walk.push_back(net.tensors[cur.first].legs[cur.second]);
            int j = cur.first, pos = (cur.second + 1) % spec.p;
            while (net.legs[net.tensors[j].legs[pos]].kind == LegKind::contracted) {
                auto [j2, p2] = net.other_end(net.tensors[j].legs[pos], j, pos);
                j = j2;
                pos = (p2 + 1) % spec.p;
            }
            cur = {j, pos};
        } while (cur != start);
        if (net.boundary_walk.size() != net.boundary_legs.size())
            throw structural_mismatch_error("perimeter walk missed boundary legs");
    }
    return net;
}

LayeredNetwork star_network(int boundary_count, const TessellationSpec& base) {
    if (boundary_count < 1) throw invalid_argument_error("star network needs >= 1 boundary leg");
    LayeredNetwork net;
    net.spec = base;
    net.spec.R = 0;
    net.tensors.resize(1);
    net.tensors[0].layer = 0;
    for (int i = 0; i < boundary_count; ++i) {
        Leg leg;
        leg.kind = LegKind::boundary;
        leg.qubits = base.m;
        leg.tensor_a = 0;
        leg.slot_a = i;
        net.tensors[0].legs.push_back(static_cast<int>(net.legs.size()));
        net.boundary_legs.push_back(static_cast<int>(net.legs.size()));
        net.boundary_walk.push_back(static_cast<int>(net.legs.size()));
        net.legs.push_back(leg);
    }
    net.first_bulk_leg = boundary_count;
    Leg bulk;
    bulk.kind = LegKind::bulk;
    bulk.qubits = base.n;
    bulk.tensor_a = 0;
    bulk.slot_a = boundary_count;
    net.tensors[0].legs.push_back(boundary_count);
    net.legs.push_back(bulk);
    net.layer_counts = {1};
    return net;
}

double measure_growth_rate(const LayeredNetwork& net) {
    int R = static_cast<int>(net.layer_counts.size()) - 1;
    if (R < 2) throw invalid_argument_error("growth fit needs R >= 2 (got R = " +
                                            std::to_string(R) + ")");
    // Least squares on log counts for x >= 1; the seed cell is a transient.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int npts = R;
    for (int x = 1; x <= R; ++x) {
        double y = std::log(static_cast<double>(net.layer_counts[x]));
        sx += x;
        sy += y;
        sxx += static_cast<double>(x) * x;
        sxy += x * y;
    }
    double slope = (npts * sxy - sx * sy) / (npts * sxx - sx * sx);
    return std::exp(slope);
}

std::string export_edge_list(const LayeredNetwork& net) {
    std::ostringstream out;
    for (int id = 0; id < net.leg_count(); ++id) {
        const Leg& leg = net.legs[id];
        out << leg.tensor_a << ',' << leg.slot_a << ',';
        switch (leg.kind) {
            case LegKind::contracted:
                out << leg.tensor_b << ',' << leg.slot_b;
                break;
            case LegKind::boundary:
                out << "BOUNDARY," << id;  // dangling partner slot is the global leg id
                break;
            case LegKind::bulk:
                out << "BULK," << id;
                break;
        }
        out << ',' << leg.qubits << '\n';
    }
    return out.str();
}

}  // namespace holosim
