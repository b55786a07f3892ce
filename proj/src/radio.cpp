#include "crmcast/radio.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace crmcast {

double received_power(double tx_power, double distance, double path_loss_exp,
                      double wavelength, double gain) {
    if (!(distance > 0.0)) {
        throw std::domain_error("received_power: distance must be positive");
    }
    const double aperture = wavelength / (4.0 * std::numbers::pi);
    return tx_power / std::pow(distance, path_loss_exp) * (aperture * aperture) * gain;
}

double link_rate(double bandwidth, double rx_power, double noise_density) {
    return bandwidth * std::log2(1.0 + rx_power / (bandwidth * noise_density));
}

double required_time(double packet_bits, double rate) {
    if (rate <= 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return packet_bits / rate;
}

double pos_value(double req_time, double mu) {
    if (!(mu > 0.0)) {
        throw std::domain_error("pos_value: mu must be positive");
    }
    if (std::isinf(req_time)) {
        return 0.0;
    }
    return std::exp(-req_time / mu);
}

double etx_link(std::span<const double> pos_per_channel) {
    const double best = *std::max_element(pos_per_channel.begin(), pos_per_channel.end());
    if (best <= 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return 1.0 / best;
}

void LinkChannelTable::rebuild_lookup() {
    lookup.assign(static_cast<std::size_t>(num_nodes) * num_nodes, -1);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto [a, b] = edges[e];
        lookup[static_cast<std::size_t>(a) * num_nodes + b] = static_cast<std::int32_t>(e);
        lookup[static_cast<std::size_t>(b) * num_nodes + a] = static_cast<std::int32_t>(e);
    }
}

LinkChannelTable build_table(const Topology& topo, const NetworkParams& params) {
    LinkChannelTable t;
    t.num_nodes = static_cast<int>(topo.positions.size());
    t.num_channels = topo.num_channels;
    t.edges = topo.edges;

    const std::size_t n_edges = t.edges.size();
    const std::size_t n_ch = static_cast<std::size_t>(t.num_channels);
    t.dist.resize(n_edges);
    t.etx.resize(n_edges);
    t.rx_power.resize(n_edges * n_ch);
    t.rate.resize(n_edges * n_ch);
    t.req_time.resize(n_edges * n_ch);
    t.pos.resize(n_edges * n_ch);

    for (std::size_t e = 0; e < n_edges; ++e) {
        const auto [a, b] = t.edges[e];
        const double dx = topo.positions[a].x - topo.positions[b].x;
        const double dy = topo.positions[a].y - topo.positions[b].y;
        t.dist[e] = std::hypot(dx, dy);
        for (std::size_t ch = 0; ch < n_ch; ++ch) {
            const std::size_t k = e * n_ch + ch;
            t.rx_power[k] = received_power(params.tx_power, t.dist[e], params.path_loss_exp,
                                           params.wavelength, topo.gain(static_cast<int>(e),
                                                                        static_cast<ChannelId>(ch)));
            t.rate[k] = params.fixed_rate
                            ? *params.fixed_rate
                            : link_rate(params.bandwidth, t.rx_power[k], params.noise_density);
            t.req_time[k] = required_time(params.packet_bits, t.rate[k]);
            t.pos[k] = pos_value(t.req_time[k], topo.mu[ch]);
        }
        t.etx[e] = etx_link(std::span<const double>(t.pos).subspan(e * n_ch, n_ch));
    }
    t.rebuild_lookup();
    return t;
}

} // namespace crmcast
