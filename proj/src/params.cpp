#include "crmcast/params.hpp"

#include "crmcast/errors.hpp"

#include <cmath>
#include <string>

namespace crmcast {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) {
        throw ValidationError(message);
    }
}

void require_positive(double value, const char* name) {
    require(std::isfinite(value) && value > 0.0, std::string(name) + " must be positive");
}

} // namespace

void validate(const NetworkParams& p) {
    require_positive(p.field_side, "field_side");
    require(p.num_nodes >= 2, "num_nodes must be at least 2");
    require(p.num_destinations >= 1, "num_destinations must be at least 1");
    require(p.num_destinations < p.num_nodes,
            "num_destinations must be less than num_nodes");
    require(p.num_channels >= 1, "num_channels must be at least 1");
    require_positive(p.bandwidth, "bandwidth");
    require_positive(p.tx_power, "tx_power");
    require_positive(p.packet_bits, "packet_bits");
    require_positive(p.noise_density, "noise_density");
    require_positive(p.path_loss_exp, "path_loss_exp");
    require_positive(p.wavelength, "wavelength");
    require_positive(p.tx_range, "tx_range");
    require(p.idle_prob >= 0.0 && p.idle_prob <= 1.0, "idle_prob must be in [0, 1]");
    require_positive(p.mu_low, "mu_low");
    require_positive(p.mu_high, "mu_high");
    require(p.mu_low <= p.mu_high, "mu_low must not exceed mu_high");
    require(p.num_packets >= 1, "num_packets must be at least 1");
    require(p.num_trials >= 1, "num_trials must be at least 1");
    if (p.fixed_rate) {
        require_positive(*p.fixed_rate, "fixed_rate");
    }
    if (p.fixed_mu) {
        require_positive(*p.fixed_mu, "fixed_mu");
    }
    require(!(p.fixed_rate && p.fixed_mu),
            "fixed_rate and fixed_mu are mutually exclusive");
}

} // namespace crmcast
