// Shared helpers for the unit and acceptance suites: hand-built tables and
// trees, brute-force graph oracles, and small statistics utilities.
#pragma once

#include "crmcast/radio.hpp"
#include "crmcast/rng.hpp"
#include "crmcast/topology.hpp"
#include "crmcast/tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace testing {

using namespace crmcast;

// ---- hand-built tables, topologies, and trees -------------------------------

struct TestLink {
    TestLink(NodeId a_, NodeId b_, std::vector<double> pos_, std::vector<double> rate_ = {})
        : a(a_), b(b_), pos(std::move(pos_)), rate(std::move(rate_)) {}

    NodeId a;
    NodeId b;
    std::vector<double> pos;   // one entry per channel
    std::vector<double> rate;  // optional; defaults to 1e6 per channel
};

inline LinkChannelTable make_table(int num_nodes, int num_channels,
                                   const std::vector<TestLink>& links) {
    LinkChannelTable t;
    t.num_nodes = num_nodes;
    t.num_channels = num_channels;
    for (const auto& link : links) {
        t.edges.push_back({std::min(link.a, link.b), std::max(link.a, link.b)});
        t.dist.push_back(1.0);
        for (int ch = 0; ch < num_channels; ++ch) {
            const double p = link.pos[ch];
            const double r = link.rate.empty() ? 1e6 : link.rate[ch];
            t.pos.push_back(p);
            t.rate.push_back(r);
            t.req_time.push_back(r > 0 ? 32768.0 / r : std::numeric_limits<double>::infinity());
            t.rx_power.push_back(0.0);
        }
        const auto row = std::span<const double>(t.pos).last(num_channels);
        t.etx.push_back(etx_link(row));
    }
    t.rebuild_lookup();
    return t;
}

// Topology stub for session-level tests: only destinations, channel count, and
// mu are consulted by run_session.
inline Topology make_topology_stub(int num_nodes, NodeId source,
                                   std::vector<NodeId> destinations,
                                   std::vector<double> mu) {
    Topology topo;
    topo.num_channels = static_cast<int>(mu.size());
    topo.positions.resize(num_nodes);
    topo.source = source;
    topo.destinations = std::move(destinations);
    std::sort(topo.destinations.begin(), topo.destinations.end());
    topo.mu = std::move(mu);
    return topo;
}

// Tree from explicit (child, parent) hops; groups derived.
inline MulticastTree make_tree(TreeKind kind, int num_nodes, NodeId source,
                               const std::vector<std::pair<NodeId, NodeId>>& child_parent) {
    MulticastTree tree;
    tree.kind = kind;
    tree.source = source;
    tree.parent.assign(num_nodes, -1);
    tree.in_tree.assign(num_nodes, 0);
    tree.in_tree[source] = 1;
    for (const auto& [child, parent] : child_parent) {
        tree.parent[child] = parent;
        tree.in_tree[child] = 1;
    }
    tree.groups = decompose_groups(tree);
    return tree;
}

// ---- graph oracles -----------------------------------------------------------

inline std::vector<double> bellman_ford(int num_nodes, std::span<const WeightedEdge> edges,
                                        NodeId source) {
    std::vector<double> dist(num_nodes, std::numeric_limits<double>::infinity());
    dist[source] = 0.0;
    for (int round = 0; round < num_nodes; ++round) {
        bool changed = false;
        for (const auto& e : edges) {
            if (dist[e.a] + e.weight < dist[e.b]) {
                dist[e.b] = dist[e.a] + e.weight;
                changed = true;
            }
            if (dist[e.b] + e.weight < dist[e.a]) {
                dist[e.a] = dist[e.b] + e.weight;
                changed = true;
            }
        }
        if (!changed) {
            break;
        }
    }
    return dist;
}

// Minimum spanning-tree weight by exhaustive search over edge subsets of size
// n-1. Returns +inf when the graph is disconnected. Feasible for n <= 8 and a
// handful of edges.
inline double mst_brute_force(int num_nodes, std::span<const WeightedEdge> edges) {
    const int m = static_cast<int>(edges.size());
    const int need = num_nodes - 1;
    double best = std::numeric_limits<double>::infinity();
    if (need > m) {
        return best;
    }
    std::vector<int> pick(need);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
        std::vector<NodeId> uf(num_nodes);
        std::iota(uf.begin(), uf.end(), 0);
        auto find = [&](NodeId v) {
            while (uf[v] != v) {
                uf[v] = uf[uf[v]];
                v = uf[v];
            }
            return v;
        };
        int merged = 0;
        double weight = 0.0;
        for (const int i : pick) {
            const NodeId ra = find(edges[i].a);
            const NodeId rb = find(edges[i].b);
            if (ra != rb) {
                uf[ra] = rb;
                ++merged;
            }
            weight += edges[i].weight;
        }
        if (merged == need && weight < best) {
            best = weight;
        }
        // next combination
        int k = need - 1;
        while (k >= 0 && pick[k] == m - need + k) {
            --k;
        }
        if (k < 0) {
            break;
        }
        ++pick[k];
        for (int j = k + 1; j < need; ++j) {
            pick[j] = pick[j - 1] + 1;
        }
    }
    return best;
}

// Minimum simple-path cost to every node by depth-first enumeration.
inline std::vector<double> all_paths_min_cost(int num_nodes,
                                              std::span<const WeightedEdge> edges,
                                              NodeId source) {
    std::vector<std::vector<std::pair<NodeId, double>>> adj(num_nodes);
    for (const auto& e : edges) {
        adj[e.a].emplace_back(e.b, e.weight);
        adj[e.b].emplace_back(e.a, e.weight);
    }
    std::vector<double> best(num_nodes, std::numeric_limits<double>::infinity());
    best[source] = 0.0;
    std::vector<char> on_path(num_nodes, 0);
    auto dfs = [&](auto&& self, NodeId u, double cost) -> void {
        on_path[u] = 1;
        for (const auto& [v, w] : adj[u]) {
            if (!on_path[v]) {
                if (cost + w < best[v]) {
                    best[v] = cost + w;
                }
                self(self, v, cost + w);
            }
        }
        on_path[u] = 0;
    };
    dfs(dfs, source, 0.0);
    return best;
}

// Random connected weighted graph on up to max_nodes nodes with distinct
// continuous weights; retries until connected.
inline std::pair<int, std::vector<WeightedEdge>> random_connected_graph(RngStream& rng,
                                                                        int max_nodes,
                                                                        int max_edges) {
    for (;;) {
        const int n = 2 + static_cast<int>(rng.uniform_int(max_nodes - 1));
        std::vector<WeightedEdge> edges;
        for (NodeId a = 0; a < n; ++a) {
            for (NodeId b = a + 1; b < n; ++b) {
                if (rng.bernoulli(0.5)) {
                    edges.push_back({a, b, rng.uniform(0.1, 10.0)});
                }
            }
        }
        if (static_cast<int>(edges.size()) > max_edges || edges.size() < std::size_t(n) - 1) {
            continue;
        }
        const auto dist = bellman_ford(n, edges, 0);
        const bool connected =
            std::none_of(dist.begin(), dist.end(), [](double d) { return std::isinf(d); });
        if (connected) {
            return {n, std::move(edges)};
        }
    }
}

// ---- statistics ---------------------------------------------------------------

inline double mean_of(std::span<const double> xs) {
    double s = 0.0;
    for (const double x : xs) {
        s += x;
    }
    return s / static_cast<double>(xs.size());
}

inline double stderr_of(std::span<const double> xs) {
    if (xs.size() < 2) {
        return 0.0;
    }
    const double m = mean_of(xs);
    double ss = 0.0;
    for (const double x : xs) {
        ss += (x - m) * (x - m);
    }
    return std::sqrt(ss / static_cast<double>(xs.size() - 1)) /
           std::sqrt(static_cast<double>(xs.size()));
}

// One-sample Kolmogorov-Smirnov statistic against U(lo, hi).
inline double ks_statistic_uniform(std::vector<double> xs, double lo, double hi) {
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = (xs[i] - lo) / (hi - lo);
        d = std::max(d, std::abs((static_cast<double>(i) + 1.0) / n - f));
        d = std::max(d, std::abs(static_cast<double>(i) / n - f));
    }
    return d;
}

} // namespace testing
