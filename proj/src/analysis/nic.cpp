#include "ashwa/analysis/nic.hpp"

#include "ashwa/bft/thresholds.hpp"

namespace ashwa::analysis {

NicReport nic_check(const agents::GameParams& params, std::size_t n_byzantine, std::size_t committee_size,
                    const Rational& delta_min)
{
    params.validate();
    NicReport r;
    const auto n_f = static_cast<std::int64_t>(bft::fault_threshold(committee_size));
    r.fault_margin = n_f - static_cast<std::int64_t>(n_byzantine);
    r.fault_tolerance = r.fault_margin > 0;

    r.payload_slack = params.kappa_r * delta_min - params.validation_cost();
    if (params.c_val == 0) {
        r.maximum_payload = true;
        r.degenerate_payload = params.phi > 0;
    } else {
        r.maximum_payload = params.phi <= params.kappa_r * delta_min / params.c_val;
    }

    r.reward_slack = params.reward - params.validation_cost() - params.mining_cost_per_block();
    r.minimum_reward = r.reward_slack >= 0;
    return r;
}

}  // namespace ashwa::analysis
