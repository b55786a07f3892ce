#pragma once

#include "crmcast/params.hpp"
#include "crmcast/rng.hpp"

#include <cstdint>
#include <vector>

namespace crmcast {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

// Undirected link between nodes a < b.
struct Edge {
    NodeId a = 0;
    NodeId b = 0;
};

// One realization of the network: node placement, multicast session roles,
// links within transmission range, and the per-(link, channel) fading gains
// plus per-channel mean idle durations for this realization.
struct Topology {
    double field_side = 0.0;
    int num_channels = 0;
    std::vector<Vec2> positions;        // one per node
    NodeId source = 0;
    std::vector<NodeId> destinations;   // sorted ascending, source excluded
    std::vector<Edge> edges;            // a < b, lexicographic order
    std::vector<double> gains;          // Rayleigh power gains, edge-major, channel-minor
    std::vector<double> mu;             // mean idle duration per channel, s

    double gain(int edge, ChannelId channel) const {
        return gains[static_cast<std::size_t>(edge) * num_channels + channel];
    }
};

// Samples one topology from the given seed. Draw order is fixed: positions
// (x, y per node in node order), then source and destinations (partial
// Fisher-Yates over node ids), then one exponential(1) gain per (edge, channel)
// in edge-major channel-minor order, then one uniform mean idle duration per
// channel. When params.fixed_mu is set every channel gets that duration and the
// uniform draws are skipped. Edges connect every node pair within tx_range.
Topology generate_topology(const NetworkParams& params, std::uint64_t seed);

// Destinations reachable from the source over the link graph, sorted ascending.
std::vector<NodeId> reachable_destinations(const Topology& topology);

struct ConnectedTopology {
    Topology topology;
    int attempts = 0;                 // topologies generated, including the returned one
    std::vector<NodeId> unreachable;  // empty iff all destinations reachable
};

// Regenerates (attempt k uses mix_seed(seed, k)) until every destination is
// reachable, up to max_attempts; if exhausted, returns the last topology with
// its unreachable destinations flagged.
ConnectedTopology regenerate_until_connected(const NetworkParams& params,
                                             std::uint64_t seed,
                                             int max_attempts);

} // namespace crmcast
