#include "crmcast/tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace crmcast {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_edges(int num_nodes, std::span<const WeightedEdge> edges) {
    for (const auto& e : edges) {
        if (e.a < 0 || e.a >= num_nodes || e.b < 0 || e.b >= num_nodes || e.a == e.b) {
            throw std::invalid_argument("tree: edge endpoints out of range");
        }
        if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
            throw std::invalid_argument("tree: edge weights must be positive and finite");
        }
    }
}

// Marks the union of root-to-destination paths, drops everything else from the
// parent map, and records which destinations have no path at all.
void prune_to_destinations(MulticastTree& tree, std::span<const NodeId> destinations) {
    const int m = static_cast<int>(tree.parent.size());
    std::vector<char> keep(m, 0);
    keep[tree.source] = 1;
    tree.unreachable.clear();
    for (const NodeId d : destinations) {
        if (d != tree.source && (tree.parent[d] < 0 || !tree.in_tree[d])) {
            tree.unreachable.push_back(d);
            continue;
        }
        for (NodeId v = d; !keep[v]; v = tree.parent[v]) {
            keep[v] = 1;
        }
    }
    std::sort(tree.unreachable.begin(), tree.unreachable.end());
    for (NodeId v = 0; v < m; ++v) {
        tree.in_tree[v] = keep[v];
        if (!keep[v]) {
            tree.parent[v] = -1;
        }
    }
}

} // namespace

std::string metric_kind_name(MetricKind kind) {
    return kind == MetricKind::Etx ? "ETX" : "Distance";
}

std::string tree_kind_name(TreeKind kind) {
    return kind == TreeKind::Spt ? "SPT" : "MST";
}

std::vector<WeightedEdge> edge_weights(const LinkChannelTable& table, MetricKind metric) {
    std::vector<WeightedEdge> out;
    out.reserve(table.edges.size());
    for (std::size_t e = 0; e < table.edges.size(); ++e) {
        const double w = metric == MetricKind::Etx ? table.etx[e] : table.dist[e];
        if (metric == MetricKind::Etx && std::isinf(w)) {
            continue;
        }
        out.push_back({table.edges[e].a, table.edges[e].b, w});
    }
    return out;
}

MulticastTree dijkstra_spt(int num_nodes, std::span<const WeightedEdge> edges,
                           NodeId source, std::span<const NodeId> destinations) {
    check_edges(num_nodes, edges);

    std::vector<std::vector<std::pair<NodeId, double>>> adj(num_nodes);
    for (const auto& e : edges) {
        adj[e.a].emplace_back(e.b, e.weight);
        adj[e.b].emplace_back(e.a, e.weight);
    }

    MulticastTree tree;
    tree.kind = TreeKind::Spt;
    tree.source = source;
    tree.parent.assign(num_nodes, -1);
    tree.in_tree.assign(num_nodes, 0);
    tree.cost.assign(num_nodes, kInf);
    tree.cost[source] = 0.0;

    using Entry = std::pair<double, NodeId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    heap.emplace(0.0, source);
    std::vector<char> done(num_nodes, 0);
    while (!heap.empty()) {
        const auto [du, u] = heap.top();
        heap.pop();
        if (done[u]) {
            continue;
        }
        done[u] = 1;
        tree.in_tree[u] = 1;
        for (const auto& [v, w] : adj[u]) {
            const double nd = du + w;
            if (nd < tree.cost[v]) {
                tree.cost[v] = nd;
                tree.parent[v] = u;
                heap.emplace(nd, v);
            } else if (nd == tree.cost[v] && u < tree.parent[v]) {
                // Equal-cost path whose final hop has a smaller transmitter id.
                tree.parent[v] = u;
            }
        }
    }

    prune_to_destinations(tree, destinations);
    tree.groups = decompose_groups(tree);
    return tree;
}

MulticastTree kruskal_mst(int num_nodes, std::span<const WeightedEdge> edges,
                          NodeId source, std::span<const NodeId> destinations) {
    check_edges(num_nodes, edges);

    std::vector<std::size_t> order(edges.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        const auto& x = edges[i];
        const auto& y = edges[j];
        if (x.weight != y.weight) {
            return x.weight < y.weight;
        }
        if (x.a != y.a) {
            return x.a < y.a;
        }
        return x.b < y.b;
    });

    std::vector<NodeId> uf(num_nodes);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](NodeId v) {
        while (uf[v] != v) {
            uf[v] = uf[uf[v]];
            v = uf[v];
        }
        return v;
    };

    std::vector<std::vector<std::pair<NodeId, std::size_t>>> adj(num_nodes);
    std::vector<WeightedEdge> forest;
    for (const std::size_t i : order) {
        const auto& e = edges[i];
        const NodeId ra = find(e.a);
        const NodeId rb = find(e.b);
        if (ra != rb) {
            uf[ra] = rb;
            adj[e.a].emplace_back(e.b, forest.size());
            adj[e.b].emplace_back(e.a, forest.size());
            forest.push_back(e);
        }
    }

    MulticastTree tree;
    tree.kind = TreeKind::Mst;
    tree.source = source;
    tree.parent.assign(num_nodes, -1);
    tree.in_tree.assign(num_nodes, 0);

    // Root the source's component of the forest at the source (breadth-first,
    // neighbors in ascending id order for a deterministic parent map).
    for (auto& nbrs : adj) {
        std::sort(nbrs.begin(), nbrs.end());
    }
    std::vector<char> used(forest.size(), 0);
    std::queue<NodeId> queue;
    queue.push(source);
    tree.in_tree[source] = 1;
    while (!queue.empty()) {
        const NodeId u = queue.front();
        queue.pop();
        for (const auto& [v, ei] : adj[u]) {
            if (!tree.in_tree[v]) {
                tree.in_tree[v] = 1;
                tree.parent[v] = u;
                used[ei] = 1;
                queue.push(v);
            }
        }
    }
    tree.spanning_weight = 0.0;
    for (std::size_t i = 0; i < forest.size(); ++i) {
        if (used[i]) {
            tree.spanning_edges.push_back(forest[i]);
            tree.spanning_weight += forest[i].weight;
        }
    }

    prune_to_destinations(tree, destinations);
    tree.groups = decompose_groups(tree);
    return tree;
}

std::vector<TransmissionGroup> decompose_groups(const MulticastTree& tree) {
    const int m = static_cast<int>(tree.parent.size());
    std::vector<std::vector<NodeId>> children(m);
    for (NodeId v = 0; v < m; ++v) {
        if (v != tree.source && tree.in_tree[v] && tree.parent[v] >= 0) {
            children[tree.parent[v]].push_back(v);  // ascending by construction
        }
    }
    std::vector<TransmissionGroup> groups;
    std::queue<NodeId> queue;
    queue.push(tree.source);
    while (!queue.empty()) {
        const NodeId u = queue.front();
        queue.pop();
        if (!children[u].empty()) {
            TransmissionGroup g;
            g.transmitter = u;
            g.receivers = children[u];
            g.mode = g.receivers.size() == 1 ? GroupMode::Unicast : GroupMode::Multicast;
            groups.push_back(std::move(g));
        }
        for (const NodeId v : children[u]) {
            queue.push(v);
        }
    }
    return groups;
}

} // namespace crmcast
