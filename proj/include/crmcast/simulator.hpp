#pragma once

#include "crmcast/assignment.hpp"
#include "crmcast/params.hpp"
#include "crmcast/radio.hpp"
#include "crmcast/rng.hpp"
#include "crmcast/topology.hpp"
#include "crmcast/tree.hpp"

#include <cstdint>
#include <vector>

namespace crmcast {

// What to simulate: channel-assignment scheme, tree type, and link metric.
struct SimConfig {
    Scheme scheme = Scheme::Pos;
    TreeKind tree = TreeKind::Spt;
    MetricKind metric = MetricKind::Etx;
};

struct TrialResult {
    double throughput = 0.0;  // bits/s
    double pdr = 0.0;         // delivered / (packets * destinations)
};

struct SimResult {
    double throughput = 0.0;
    double throughput_stderr = 0.0;
    double pdr = 0.0;
    double pdr_stderr = 0.0;
    int trials = 0;
};

struct SessionOutcome {
    std::int64_t delivered = 0;  // (packet, destination) pairs that made it
    double airtime = 0.0;        // total transmission time spent, s
};

// Topology regeneration budget per trial before giving up on connectivity.
inline constexpr int kMaxTopologyAttempts = 100;

// Streams params.num_packets packets through the tree. Per packet, each group
// in order samples its idle candidates, picks a channel under `scheme`, and
// every receiver succeeds independently with that channel's POS on its link;
// a packet reaches a destination iff every hop on its path succeeded. Groups
// with no candidate (or a zero-rate channel) spend no airtime and fail all
// receivers. Unreachable destinations count as failures in every packet.
SessionOutcome run_session(const NetworkParams& params, const Topology& topology,
                           const LinkChannelTable& table, const MulticastTree& tree,
                           Scheme scheme, RngStream& rng);

// One independent trial: regenerate a connected topology (seeded from
// trial_seed), build its metric table and tree, and run one session.
TrialResult simulate_trial(const NetworkParams& params, const SimConfig& config,
                           std::uint64_t trial_seed);

// All trials, trial t seeded with mix_seed(params.master_seed, t). Results are
// stored by trial index, so the parallel and serial paths are bit-identical.
std::vector<TrialResult> run_trials(const NetworkParams& params, const SimConfig& config,
                                    bool parallel);

// Mean and standard error over the trial list, reduced in index order.
SimResult summarize(const std::vector<TrialResult>& trials);

// OpenMP over trials.
SimResult run_monte_carlo(const NetworkParams& params, const SimConfig& config);

// Single-threaded reference; identical output to run_monte_carlo.
SimResult run_monte_carlo_serial(const NetworkParams& params, const SimConfig& config);

} // namespace crmcast
