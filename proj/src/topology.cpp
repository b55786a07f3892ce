#include "crmcast/topology.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace crmcast {

Topology generate_topology(const NetworkParams& params, std::uint64_t seed) {
    validate(params);
    RngStream rng(seed);
    Topology topo;
    topo.field_side = params.field_side;
    topo.num_channels = params.num_channels;

    const int m = params.num_nodes;
    topo.positions.resize(m);
    for (auto& p : topo.positions) {
        p.x = rng.uniform(0.0, params.field_side);
        p.y = rng.uniform(0.0, params.field_side);
    }

    // Source and destinations: the first num_destinations + 1 entries of a
    // partial Fisher-Yates shuffle of the node ids.
    std::vector<NodeId> ids(m);
    std::iota(ids.begin(), ids.end(), 0);
    const int picks = params.num_destinations + 1;
    for (int k = 0; k < picks; ++k) {
        const auto j = k + static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(m - k)));
        std::swap(ids[k], ids[j]);
    }
    topo.source = ids[0];
    topo.destinations.assign(ids.begin() + 1, ids.begin() + picks);
    std::sort(topo.destinations.begin(), topo.destinations.end());

    const double range_sq = params.tx_range * params.tx_range;
    for (NodeId a = 0; a < m; ++a) {
        for (NodeId b = a + 1; b < m; ++b) {
            const double dx = topo.positions[a].x - topo.positions[b].x;
            const double dy = topo.positions[a].y - topo.positions[b].y;
            if (dx * dx + dy * dy <= range_sq) {
                topo.edges.push_back({a, b});
            }
        }
    }

    topo.gains.resize(topo.edges.size() * static_cast<std::size_t>(params.num_channels));
    for (auto& g : topo.gains) {
        g = rng.exponential(1.0);
    }

    topo.mu.resize(params.num_channels);
    if (params.fixed_mu) {
        std::fill(topo.mu.begin(), topo.mu.end(), *params.fixed_mu);
    } else {
        for (auto& d : topo.mu) {
            d = rng.uniform(params.mu_low, params.mu_high);
        }
    }
    return topo;
}

std::vector<NodeId> reachable_destinations(const Topology& topo) {
    const int m = static_cast<int>(topo.positions.size());
    std::vector<std::vector<NodeId>> adj(m);
    for (const auto& e : topo.edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    std::vector<char> seen(m, 0);
    std::vector<NodeId> stack{topo.source};
    seen[topo.source] = 1;
    while (!stack.empty()) {
        const NodeId u = stack.back();
        stack.pop_back();
        for (const NodeId v : adj[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                stack.push_back(v);
            }
        }
    }
    std::vector<NodeId> reached;
    for (const NodeId d : topo.destinations) {
        if (seen[d]) {
            reached.push_back(d);
        }
    }
    return reached;
}

ConnectedTopology regenerate_until_connected(const NetworkParams& params,
                                             std::uint64_t seed,
                                             int max_attempts) {
    ConnectedTopology result;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        result.topology = generate_topology(params, mix_seed(seed, static_cast<std::uint64_t>(attempt)));
        result.attempts = attempt + 1;
        const auto reached = reachable_destinations(result.topology);
        result.unreachable.clear();
        std::set_difference(result.topology.destinations.begin(), result.topology.destinations.end(),
                            reached.begin(), reached.end(), std::back_inserter(result.unreachable));
        if (result.unreachable.empty()) {
            break;
        }
    }
    return result;
}

} // namespace crmcast
