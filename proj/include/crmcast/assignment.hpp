#pragma once

#include "crmcast/radio.hpp"
#include "crmcast/rng.hpp"
#include "crmcast/tree.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace crmcast {

// Unified channel-assignment schemes: every receiver of a transmission group
// listens on the single channel picked for that group.
enum class Scheme { Pos, Masa, Mdr, Rs };

std::string scheme_name(Scheme scheme);  // "POS" / "MASA" / "MDR" / "RS"

// Channels found idle for one transmission: independent Bernoulli(idle_prob)
// per channel, returned in ascending id order. May be empty.
std::vector<ChannelId> candidate_channels(const NetworkParams& params, RngStream& rng);

// In-place variant used by the per-packet loop; appends to `out` (cleared
// first). Identical draws to candidate_channels.
void sample_candidates(int num_channels, double idle_prob, RngStream& rng,
                       std::vector<ChannelId>& out);

// Each assign_* returns the chosen channel, or nullopt when `candidates` is
// empty (the group's transmission is skipped and all its receivers fail).
// Ties resolve to the smallest channel id; candidates must be ascending.

// Maximizes the worst receiver's probability of success.
std::optional<ChannelId> assign_pos(const TransmissionGroup& group,
                                    const LinkChannelTable& table,
                                    std::span<const ChannelId> candidates);

// Maximizes the channel's mean idle duration, regardless of link quality.
std::optional<ChannelId> assign_masa(std::span<const ChannelId> candidates,
                                     std::span<const double> mu);

// Maximizes the transmission's data rate: the worst receiver's rate for a
// multicast group, the single receiver's rate for unicast.
std::optional<ChannelId> assign_mdr(const TransmissionGroup& group,
                                    const LinkChannelTable& table,
                                    std::span<const ChannelId> candidates);

// Picks uniformly at random among the candidates.
std::optional<ChannelId> assign_rs(std::span<const ChannelId> candidates, RngStream& rng);

} // namespace crmcast
