#pragma once

#include "crmcast/params.hpp"
#include "crmcast/topology.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace crmcast {

// Received power over a fading link:
//   P_r = (P_t / d^n) * (lambda / 4*pi)^2 * gain.
// Throws std::domain_error for d <= 0.
double received_power(double tx_power, double distance, double path_loss_exp,
                      double wavelength, double gain);

// Shannon capacity of one channel: R = BW * log2(1 + P_r / (BW * N_0)).
// rx_power = 0 gives R = 0.
double link_rate(double bandwidth, double rx_power, double noise_density);

// Time to send a packet: T = D / R. R = 0 gives +infinity.
double required_time(double packet_bits, double rate);

// Probability of success: exp(-T / mu), the chance an exponential idle period
// of mean mu outlasts the transmission. T = +infinity gives 0.
// Throws std::domain_error for mu <= 0.
double pos_value(double req_time, double mu);

// Expected transmissions on the link's best channel: 1 / max_j pos_j.
// All-zero rows give +infinity.
double etx_link(std::span<const double> pos_per_channel);

// Per-link, per-channel metrics for one topology realization. Entries are laid
// out edge-major, channel-minor, matching Topology::gains.
struct LinkChannelTable {
    int num_nodes = 0;
    int num_channels = 0;
    std::vector<Edge> edges;
    std::vector<double> dist;      // per edge, m
    std::vector<double> etx;       // per edge; +inf when no channel works
    std::vector<double> rx_power;  // per (edge, channel), W
    std::vector<double> rate;      // per (edge, channel), bits/s
    std::vector<double> req_time;  // per (edge, channel), s; +inf sentinel
    std::vector<double> pos;       // per (edge, channel), in [0, 1]

    // Lookup by unordered node pair; -1 when the pair is not linked.
    int edge_index(NodeId i, NodeId j) const {
        return lookup[static_cast<std::size_t>(i) * num_nodes + j];
    }

    double rx_power_at(int edge, ChannelId ch) const { return rx_power[flat(edge, ch)]; }
    double rate_at(int edge, ChannelId ch) const { return rate[flat(edge, ch)]; }
    double req_time_at(int edge, ChannelId ch) const { return req_time[flat(edge, ch)]; }
    double pos_at(int edge, ChannelId ch) const { return pos[flat(edge, ch)]; }

    void rebuild_lookup();  // fills `lookup` from num_nodes and edges

    std::vector<std::int32_t> lookup;  // dense num_nodes x num_nodes pair index

private:
    std::size_t flat(int edge, ChannelId ch) const {
        return static_cast<std::size_t>(edge) * num_channels + ch;
    }
};

// Composes the per-link metrics for every (edge, channel): received_power ->
// link_rate -> required_time -> pos_value, then the per-edge ETX. When
// params.fixed_rate is set, link_rate is bypassed and every (edge, channel)
// uses the override (rx_power is still recorded).
LinkChannelTable build_table(const Topology& topology, const NetworkParams& params);

} // namespace crmcast
