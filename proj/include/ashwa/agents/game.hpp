#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ashwa/agents/agent.hpp"
#include "ashwa/core/rational.hpp"

namespace ashwa::agents {

struct GameParams {
    /// Minimum total reward per transaction block.
    Rational reward = 10;
    /// Cost of mining one ACL block.
    Rational c_mine = 100;
    /// Cost of validating one byte.
    Rational c_val = 0;
    /// Bytes validated per block.
    Rational phi = 0;
    /// Transaction blocks per committee session.
    std::uint64_t n_tx = 50;
    /// Smallest rational stake.
    Rational kappa_r = 100;

    void validate() const;
    Rational validation_cost() const { return phi * c_val; }
    Rational mining_cost_per_block() const { return c_mine / Rational(static_cast<unsigned long>(n_tx)); }
};

/// What a seat believes about the other seats.
struct BeliefModel {
    /// Adversary share of resources.
    Rational alpha_a = 0;
    /// Chance a rational peer signs without validating.
    Rational rho_s1 = 0;
    std::size_t committee_size = 4;

    void validate() const;
    /// Chance that another seat signs an invalid operation.
    Rational sign_probability() const { return alpha_a + (1 - alpha_a) * rho_s1; }
};

/// Chance an invalid proposal collects threshold signatures when every other
/// seat signs it independently and the own seat signs iff it plays S1.
Rational p_invalid(const BeliefModel& belief, Strategy own, std::size_t threshold);
Rational p_invalid(const BeliefModel& belief, Strategy own);

/// p_invalid(S1) - p_invalid(S2).
Rational delta(const BeliefModel& belief, std::size_t threshold);
Rational delta(const BeliefModel& belief);

/// C(m, k-1) q^(k-1) (1-q)^(m-k+1): chance that exactly k-1 of m others sign.
Rational pivotal_probability(std::size_t others, std::size_t threshold, const Rational& q);

/// Smallest delta over a set of operating points (supermajority threshold each).
Rational delta_min(std::span<const BeliefModel> envelope);

/// Expected utility per transaction block of a rational seat.
Rational utility(const AgentProfile& profile, const GameParams& params, const BeliefModel& belief,
                 Strategy strategy);

/// Utility-maximising choice between S1 and S2; ties go to S2.
Strategy best_response(const AgentProfile& profile, const GameParams& params, const BeliefModel& belief);

/// A committee in which only the rational seats choose a strategy.
struct CommitteeGame {
    GameParams params;
    std::size_t n_honest = 0;
    std::size_t n_byzantine = 0;
    /// One stake per rational seat.
    std::vector<Rational> kappas;
    Rational alpha_a = 0;

    std::size_t n_rational() const { return kappas.size(); }
    std::size_t size() const { return n_honest + n_byzantine + kappas.size(); }
    std::size_t threshold() const;
    void validate() const;
};

/// Strategy of each rational seat, in seat order.
using StrategyProfile = std::vector<Strategy>;

StrategyProfile uniform_profile(const CommitteeGame& game, Strategy s);

/// Belief of rational seat i: its peers' S1 rate is the fraction of the
/// other n - 1 seats that are rationals playing S1.
BeliefModel belief_of(const CommitteeGame& game, const StrategyProfile& profile, std::size_t i);

/// Expected utility of rational seat i when it plays s and the others follow profile.
Rational profile_utility(const CommitteeGame& game, const StrategyProfile& profile, std::size_t i, Strategy s);

Strategy best_response(const CommitteeGame& game, const StrategyProfile& profile, std::size_t i);

/// No rational seat gains strictly by deviating alone.
bool is_equilibrium(const CommitteeGame& game, const StrategyProfile& profile);

/// Every pure-strategy equilibrium, by exhaustive search over 2^n_R profiles.
std::vector<StrategyProfile> pure_equilibria(const CommitteeGame& game);

/// Iterates simultaneous best responses from start until a fixed point.
/// Throws std::runtime_error if none is reached within 2^n_R + 1 steps.
StrategyProfile best_response_dynamics(const CommitteeGame& game, StrategyProfile start);

/// Smallest delta any rational seat faces over all reachable profiles.
Rational game_delta_min(const CommitteeGame& game);

/// Whether an invalid proposal is actually accepted: Byzantine seats plus
/// rational S1 seats reach the threshold.
bool invalid_accepted(const CommitteeGame& game, const StrategyProfile& profile);

/// Utility of rational seat i with the realised acceptance in place of the belief.
Rational realized_utility(const CommitteeGame& game, const StrategyProfile& profile, std::size_t i);

}  // namespace ashwa::agents
