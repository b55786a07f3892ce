#include "crmcast/simulator.hpp"

#include <cmath>
#include <limits>

namespace crmcast {

namespace {

// Sub-stream tags under a trial seed.
constexpr std::uint64_t kTopologyStream = 1;
constexpr std::uint64_t kTrafficStream = 2;

std::optional<ChannelId> pick_channel(Scheme scheme, const TransmissionGroup& group,
                                      const Topology& topo, const LinkChannelTable& table,
                                      std::span<const ChannelId> candidates, RngStream& rng) {
    switch (scheme) {
    case Scheme::Pos:
        return assign_pos(group, table, candidates);
    case Scheme::Masa:
        return assign_masa(candidates, topo.mu);
    case Scheme::Mdr:
        return assign_mdr(group, table, candidates);
    case Scheme::Rs:
        return assign_rs(candidates, rng);
    }
    return std::nullopt;
}

} // namespace

SessionOutcome run_session(const NetworkParams& params, const Topology& topo,
                           const LinkChannelTable& table, const MulticastTree& tree,
                           Scheme scheme, RngStream& rng) {
    SessionOutcome outcome;
    const int num_nodes = static_cast<int>(tree.parent.size());
    std::vector<char> hop_ok(num_nodes, 0);
    std::vector<ChannelId> candidates;

    for (int packet = 0; packet < params.num_packets; ++packet) {
        std::fill(hop_ok.begin(), hop_ok.end(), 0);
        for (const auto& group : tree.groups) {
            sample_candidates(topo.num_channels, params.idle_prob, rng, candidates);
            const auto choice = pick_channel(scheme, group, topo, table, candidates, rng);
            if (!choice) {
                continue;  // no idle channel: every receiver misses this packet
            }
            double min_rate = std::numeric_limits<double>::infinity();
            for (const NodeId r : group.receivers) {
                const int e = table.edge_index(group.transmitter, r);
                min_rate = std::min(min_rate, table.rate_at(e, *choice));
                hop_ok[r] = rng.bernoulli(table.pos_at(e, *choice));
            }
            if (min_rate > 0.0) {
                outcome.airtime += params.packet_bits / min_rate;
            }
        }
        for (const NodeId d : topo.destinations) {
            if (!tree.in_tree[d]) {
                continue;  // flagged unreachable: counts as a failure
            }
            bool ok = true;
            for (NodeId v = d; v != tree.source; v = tree.parent[v]) {
                if (!hop_ok[v]) {
                    ok = false;
                    break;
                }
            }
            outcome.delivered += ok;
        }
    }
    return outcome;
}

TrialResult simulate_trial(const NetworkParams& params, const SimConfig& config,
                           std::uint64_t trial_seed) {
    const auto connected = regenerate_until_connected(
        params, mix_seed(trial_seed, kTopologyStream), kMaxTopologyAttempts);
    const Topology& topo = connected.topology;
    const LinkChannelTable table = build_table(topo, params);
    const auto weights = edge_weights(table, config.metric);
    const MulticastTree tree =
        config.tree == TreeKind::Spt
            ? dijkstra_spt(static_cast<int>(topo.positions.size()), weights, topo.source,
                           topo.destinations)
            : kruskal_mst(static_cast<int>(topo.positions.size()), weights, topo.source,
                          topo.destinations);

    RngStream traffic(mix_seed(trial_seed, kTrafficStream));
    const SessionOutcome outcome = run_session(params, topo, table, tree, config.scheme, traffic);

    TrialResult result;
    const double pairs = static_cast<double>(params.num_packets) * params.num_destinations;
    result.pdr = static_cast<double>(outcome.delivered) / pairs;
    result.throughput = outcome.airtime > 0.0
                            ? static_cast<double>(outcome.delivered) * params.packet_bits /
                                  outcome.airtime
                            : 0.0;
    return result;
}

std::vector<TrialResult> run_trials(const NetworkParams& params, const SimConfig& config,
                                    bool parallel) {
    validate(params);
    std::vector<TrialResult> results(params.num_trials);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int t = 0; t < params.num_trials; ++t) {
        results[t] = simulate_trial(params, config, mix_seed(params.master_seed,
                                                             static_cast<std::uint64_t>(t)));
    }
    return results;
}

SimResult summarize(const std::vector<TrialResult>& trials) {
    SimResult r;
    r.trials = static_cast<int>(trials.size());
    if (trials.empty()) {
        return r;
    }
    double sum_thr = 0.0;
    double sum_pdr = 0.0;
    for (const auto& t : trials) {
        sum_thr += t.throughput;
        sum_pdr += t.pdr;
    }
    r.throughput = sum_thr / r.trials;
    r.pdr = sum_pdr / r.trials;
    if (r.trials > 1) {
        double ss_thr = 0.0;
        double ss_pdr = 0.0;
        for (const auto& t : trials) {
            ss_thr += (t.throughput - r.throughput) * (t.throughput - r.throughput);
            ss_pdr += (t.pdr - r.pdr) * (t.pdr - r.pdr);
        }
        r.throughput_stderr = std::sqrt(ss_thr / (r.trials - 1)) / std::sqrt(double(r.trials));
        r.pdr_stderr = std::sqrt(ss_pdr / (r.trials - 1)) / std::sqrt(double(r.trials));
    }
    return r;
}

SimResult run_monte_carlo(const NetworkParams& params, const SimConfig& config) {
    return summarize(run_trials(params, config, true));
}

SimResult run_monte_carlo_serial(const NetworkParams& params, const SimConfig& config) {
    return summarize(run_trials(params, config, false));
}

} // namespace crmcast
