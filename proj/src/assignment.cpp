#include "crmcast/assignment.hpp"

#include <limits>

namespace crmcast {

namespace {

// Worst-receiver value of `per_channel_value(edge, ch)` for the group on one
// channel; shared by the POS and MDR rules.
template <typename ValueAt>
std::optional<ChannelId> argmax_min_over_receivers(const TransmissionGroup& group,
                                                   const LinkChannelTable& table,
                                                   std::span<const ChannelId> candidates,
                                                   ValueAt value_at) {
    std::optional<ChannelId> best;
    double best_value = -std::numeric_limits<double>::infinity();
    for (const ChannelId ch : candidates) {
        double worst = std::numeric_limits<double>::infinity();
        for (const NodeId r : group.receivers) {
            const int e = table.edge_index(group.transmitter, r);
            const double v = value_at(e, ch);
            if (v < worst) {
                worst = v;
            }
        }
        if (worst > best_value) {  // strict: first maximum keeps the smallest id
            best_value = worst;
            best = ch;
        }
    }
    return best;
}

} // namespace

std::string scheme_name(Scheme scheme) {
    switch (scheme) {
    case Scheme::Pos:
        return "POS";
    case Scheme::Masa:
        return "MASA";
    case Scheme::Mdr:
        return "MDR";
    case Scheme::Rs:
        return "RS";
    }
    return {};
}

std::vector<ChannelId> candidate_channels(const NetworkParams& params, RngStream& rng) {
    std::vector<ChannelId> out;
    sample_candidates(params.num_channels, params.idle_prob, rng, out);
    return out;
}

void sample_candidates(int num_channels, double idle_prob, RngStream& rng,
                       std::vector<ChannelId>& out) {
    out.clear();
    for (ChannelId ch = 0; ch < num_channels; ++ch) {
        if (rng.bernoulli(idle_prob)) {
            out.push_back(ch);
        }
    }
}

std::optional<ChannelId> assign_pos(const TransmissionGroup& group,
                                    const LinkChannelTable& table,
                                    std::span<const ChannelId> candidates) {
    return argmax_min_over_receivers(group, table, candidates,
                                     [&](int e, ChannelId ch) { return table.pos_at(e, ch); });
}

std::optional<ChannelId> assign_masa(std::span<const ChannelId> candidates,
                                     std::span<const double> mu) {
    std::optional<ChannelId> best;
    double best_mu = -std::numeric_limits<double>::infinity();
    for (const ChannelId ch : candidates) {
        if (mu[ch] > best_mu) {
            best_mu = mu[ch];
            best = ch;
        }
    }
    return best;
}

std::optional<ChannelId> assign_mdr(const TransmissionGroup& group,
                                    const LinkChannelTable& table,
                                    std::span<const ChannelId> candidates) {
    return argmax_min_over_receivers(group, table, candidates,
                                     [&](int e, ChannelId ch) { return table.rate_at(e, ch); });
}

std::optional<ChannelId> assign_rs(std::span<const ChannelId> candidates, RngStream& rng) {
    if (candidates.empty()) {
        return std::nullopt;
    }
    return candidates[rng.uniform_int(candidates.size())];
}

} // namespace crmcast
