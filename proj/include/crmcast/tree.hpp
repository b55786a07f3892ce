#pragma once

#include "crmcast/radio.hpp"

#include <span>
#include <string>
#include <vector>

namespace crmcast {

enum class MetricKind { Etx, Distance };
enum class TreeKind { Spt, Mst };
enum class GroupMode { Unicast, Multicast };

std::string metric_kind_name(MetricKind kind);   // "ETX" / "Distance"
std::string tree_kind_name(TreeKind kind);       // "SPT" / "MST"

struct WeightedEdge {
    NodeId a = 0;
    NodeId b = 0;
    double weight = 0.0;
};

// Projects the table onto one scalar weight per link. ETX skips links whose
// ETX is infinite (no working channel); Distance keeps every link.
std::vector<WeightedEdge> edge_weights(const LinkChannelTable& table, MetricKind metric);

// One hop of the multicast session: a transmitter and the tree children it
// serves with a single transmission on one shared channel.
struct TransmissionGroup {
    NodeId transmitter = 0;
    std::vector<NodeId> receivers;  // sorted ascending, never empty
    GroupMode mode = GroupMode::Unicast;
};

// A routing tree rooted at the source, pruned so that every leaf is a
// destination, decomposed into transmission groups in breadth-first order.
struct MulticastTree {
    TreeKind kind = TreeKind::Spt;
    NodeId source = 0;
    std::vector<NodeId> parent;          // -1 for the source and non-members
    std::vector<char> in_tree;           // membership flags, source included
    std::vector<NodeId> unreachable;     // destinations with no path, sorted
    std::vector<TransmissionGroup> groups;

    // Shortest-path trees: cost from the source per node (+inf if unreached).
    std::vector<double> cost;

    // Spanning trees: the un-pruned minimum spanning tree of the source's
    // component, as found by Kruskal, and its total weight.
    std::vector<WeightedEdge> spanning_edges;
    double spanning_weight = 0.0;
};

// Union of minimum-cost paths from the source to each destination (Dijkstra).
// Equal-cost paths resolve to the one whose final hop has the smaller
// transmitter id, independent of edge order. Unreachable destinations are
// flagged and the rest of the tree is still produced.
MulticastTree dijkstra_spt(int num_nodes, std::span<const WeightedEdge> edges,
                           NodeId source, std::span<const NodeId> destinations);

// Minimum spanning tree of the source's component (Kruskal; edges sorted by
// weight then endpoint pair, so the result is deterministic under ties),
// rooted at the source and pruned of branches that reach no destination.
MulticastTree kruskal_mst(int num_nodes, std::span<const WeightedEdge> edges,
                          NodeId source, std::span<const NodeId> destinations);

// Transmitter groups of the tree in breadth-first order from the source: one
// group per node with children, receivers = its children sorted ascending,
// Unicast iff there is exactly one receiver.
std::vector<TransmissionGroup> decompose_groups(const MulticastTree& tree);

} // namespace crmcast
