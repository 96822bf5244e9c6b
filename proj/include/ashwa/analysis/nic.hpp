#pragma once

#include <cstdint>

#include "ashwa/agents/game.hpp"

namespace ashwa::analysis {

struct NicReport {
    /// Byzantine seats stay below the fault threshold; margin = n_f - n_B.
    bool fault_tolerance = false;
    std::int64_t fault_margin = 0;
    /// phi <= kappa_R * delta_min / c_val; slack = kappa_R * delta_min - phi * c_val.
    bool maximum_payload = false;
    Rational payload_slack;
    /// TR >= phi * c_val + c_mine / n_TX; slack is the difference.
    bool minimum_reward = false;
    Rational reward_slack;
    /// c_val is zero while phi is positive, so the payload bound holds vacuously.
    bool degenerate_payload = false;

    bool nic() const { return fault_tolerance && maximum_payload && minimum_reward; }
};

NicReport nic_check(const agents::GameParams& params, std::size_t n_byzantine, std::size_t committee_size,
                    const Rational& delta_min);

}  // namespace ashwa::analysis
