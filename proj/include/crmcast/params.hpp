#pragma once

#include <cstdint>
#include <optional>

namespace crmcast {

using NodeId = int;
using ChannelId = int;

// Scenario parameters. Defaults describe the baseline scenario: a 200 m square
// field, 40 nodes (1 source, 16 destinations), 20 licensed channels, 1 MHz per
// channel, 4 KB packets, and channel idle durations uniform on [2, 70] ms.
struct NetworkParams {
    double field_side = 200.0;        // side of the square deployment area, m
    int num_nodes = 40;               // total nodes, source included
    int num_destinations = 16;        // multicast group size (excluding source)
    int num_channels = 20;            // licensed channels
    double bandwidth = 1e6;           // per-channel bandwidth, Hz
    double tx_power = 0.1;            // transmit power, W
    double packet_bits = 32768.0;     // packet size, bits
    double noise_density = 1e-18;     // noise power spectral density, W/Hz
    double path_loss_exp = 4.0;       // path-loss exponent
    double wavelength = 1.0;          // carrier wavelength, m
    double tx_range = 100.0;          // maximum transmission range, m
    double idle_prob = 0.5;           // probability a channel is idle per transmission
    double mu_low = 0.002;            // channel mean idle duration, lower bound, s
    double mu_high = 0.070;           // channel mean idle duration, upper bound, s
    int num_packets = 100;            // packets per trial
    int num_trials = 200;             // Monte-Carlo trials
    std::uint64_t master_seed = 1;    // root seed for all randomness

    // Extreme-scenario overrides; at most one may be set.
    std::optional<double> fixed_rate; // force every (link, channel) rate, bits/s
    std::optional<double> fixed_mu;   // force every channel's mean idle duration, s
};

// Throws ValidationError naming the offending field. Checks positivity,
// num_destinations < num_nodes, idle_prob in [0, 1], mu bounds ordered, and
// that fixed_rate / fixed_mu are not both set.
void validate(const NetworkParams& params);

} // namespace crmcast
