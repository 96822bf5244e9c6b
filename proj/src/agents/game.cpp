#include "ashwa/agents/game.hpp"

#include <algorithm>
#include <stdexcept>

#include "ashwa/analysis/binomial.hpp"
#include "ashwa/bft/thresholds.hpp"

namespace ashwa::agents {

namespace {

Rational ratio(std::size_t num, std::size_t den)
{
    Rational r(mpz_class(static_cast<unsigned long>(num)), mpz_class(static_cast<unsigned long>(den)));
    r.canonicalize();
    return r;
}

AgentProfile rational_seat(const CommitteeGame& game, std::size_t i)
{
    AgentProfile p;
    p.type = AgentType::Rational;
    p.kappa = game.kappas.at(i);
    return p;
}

}  // namespace

void GameParams::validate() const
{
    if (reward < 0 || c_mine < 0 || c_val < 0 || phi < 0 || kappa_r < 0)
        throw std::invalid_argument("game parameters must be non-negative");
    if (n_tx < 1) throw std::invalid_argument("n_tx must be at least 1");
}

void BeliefModel::validate() const
{
    if (alpha_a < 0 || alpha_a > 1) throw std::invalid_argument("alpha_a must lie in [0, 1]");
    if (rho_s1 < 0 || rho_s1 > 1) throw std::invalid_argument("rho_s1 must lie in [0, 1]");
    if (committee_size < 1) throw std::invalid_argument("committee size must be at least 1");
}

Rational p_invalid(const BeliefModel& belief, Strategy own, std::size_t threshold)
{
    belief.validate();
    const auto others = static_cast<std::int64_t>(belief.committee_size - 1);
    std::int64_t needed = static_cast<std::int64_t>(threshold) - (own == Strategy::S1 ? 1 : 0);
    needed = std::max<std::int64_t>(needed, 0);
    if (needed > others) return 0;
    return analysis::binomial_tail_exact(others, belief.sign_probability(), needed);
}

Rational p_invalid(const BeliefModel& belief, Strategy own)
{
    return p_invalid(belief, own, bft::supermajority_threshold(belief.committee_size));
}

Rational delta(const BeliefModel& belief, std::size_t threshold)
{
    return p_invalid(belief, Strategy::S1, threshold) - p_invalid(belief, Strategy::S2, threshold);
}

Rational delta(const BeliefModel& belief) { return delta(belief, bft::supermajority_threshold(belief.committee_size)); }

Rational pivotal_probability(std::size_t others, std::size_t threshold, const Rational& q)
{
    if (threshold < 1 || threshold - 1 > others) return 0;
    return analysis::binomial_pmf_exact(static_cast<std::int64_t>(others), q,
                                        static_cast<std::int64_t>(threshold - 1));
}

Rational delta_min(std::span<const BeliefModel> envelope)
{
    if (envelope.empty()) throw std::invalid_argument("delta_min: empty envelope");
    Rational best = delta(envelope.front());
    for (const auto& b : envelope.subspan(1)) best = std::min(best, delta(b));
    return best;
}

Rational utility(const AgentProfile& profile, const GameParams& params, const BeliefModel& belief,
                 Strategy strategy)
{
    if (strategy == Strategy::S3) throw std::invalid_argument("utility: only S1 and S2 are rational choices");
    const Rational& reward = profile.reward ? *profile.reward : params.reward;
    Rational u = reward - params.mining_cost_per_block() - p_invalid(belief, strategy) * profile.kappa;
    if (strategy == Strategy::S2) u -= params.validation_cost();
    return u;
}

Strategy best_response(const AgentProfile& profile, const GameParams& params, const BeliefModel& belief)
{
    if (profile.type != AgentType::Rational) throw std::invalid_argument("best_response: agent is not rational");
    return utility(profile, params, belief, Strategy::S1) > utility(profile, params, belief, Strategy::S2)
               ? Strategy::S1
               : Strategy::S2;
}

std::size_t CommitteeGame::threshold() const { return bft::supermajority_threshold(size()); }

void CommitteeGame::validate() const
{
    params.validate();
    if (size() < 2) throw std::invalid_argument("committee game needs at least two seats");
    if (alpha_a < 0 || alpha_a > 1) throw std::invalid_argument("alpha_a must lie in [0, 1]");
    for (const auto& k : kappas)
        if (k < 0) throw std::invalid_argument("kappa must be non-negative");
}

StrategyProfile uniform_profile(const CommitteeGame& game, Strategy s) { return StrategyProfile(game.n_rational(), s); }

BeliefModel belief_of(const CommitteeGame& game, const StrategyProfile& profile, std::size_t i)
{
    if (profile.size() != game.n_rational() || i >= profile.size())
        throw std::invalid_argument("belief_of: profile does not match the game");
    std::size_t s1_peers = 0;
    for (std::size_t j = 0; j < profile.size(); ++j)
        if (j != i && profile[j] == Strategy::S1) ++s1_peers;
    BeliefModel b;
    b.alpha_a = game.alpha_a;
    b.rho_s1 = ratio(s1_peers, game.size() - 1);
    b.committee_size = game.size();
    return b;
}

Rational profile_utility(const CommitteeGame& game, const StrategyProfile& profile, std::size_t i, Strategy s)
{
    return utility(rational_seat(game, i), game.params, belief_of(game, profile, i), s);
}

Strategy best_response(const CommitteeGame& game, const StrategyProfile& profile, std::size_t i)
{
    return best_response(rational_seat(game, i), game.params, belief_of(game, profile, i));
}

bool is_equilibrium(const CommitteeGame& game, const StrategyProfile& profile)
{
    for (std::size_t i = 0; i < profile.size(); ++i) {
        const Strategy other = profile[i] == Strategy::S1 ? Strategy::S2 : Strategy::S1;
        if (profile_utility(game, profile, i, other) > profile_utility(game, profile, i, profile[i])) return false;
    }
    return true;
}

std::vector<StrategyProfile> pure_equilibria(const CommitteeGame& game)
{
    game.validate();
    const std::size_t n = game.n_rational();
    if (n > 20) throw std::invalid_argument("pure_equilibria: too many rational seats for exhaustive search");
    std::vector<StrategyProfile> found;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        StrategyProfile p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = (mask >> i) & 1 ? Strategy::S1 : Strategy::S2;
        if (is_equilibrium(game, p)) found.push_back(std::move(p));
    }
    return found;
}

StrategyProfile best_response_dynamics(const CommitteeGame& game, StrategyProfile start)
{
    const std::uint64_t limit = (std::uint64_t{1} << std::min<std::size_t>(game.n_rational(), 40)) + 1;
    for (std::uint64_t step = 0; step < limit; ++step) {
        StrategyProfile next(start.size());
        for (std::size_t i = 0; i < start.size(); ++i) next[i] = best_response(game, start, i);
        if (next == start) return start;
        start = std::move(next);
    }
    throw std::runtime_error("best_response_dynamics: no fixed point reached");
}

Rational game_delta_min(const CommitteeGame& game)
{
    game.validate();
    if (game.n_rational() == 0) throw std::invalid_argument("game_delta_min: no rational seats");
    std::vector<BeliefModel> envelope;
    for (std::size_t peers = 0; peers < game.n_rational(); ++peers) {
        BeliefModel b;
        b.alpha_a = game.alpha_a;
        b.rho_s1 = ratio(peers, game.size() - 1);
        b.committee_size = game.size();
        envelope.push_back(b);
    }
    return delta_min(envelope);
}

bool invalid_accepted(const CommitteeGame& game, const StrategyProfile& profile)
{
    const auto s1 = static_cast<std::size_t>(std::count(profile.begin(), profile.end(), Strategy::S1));
    return game.n_byzantine + s1 >= game.threshold();
}

Rational realized_utility(const CommitteeGame& game, const StrategyProfile& profile, std::size_t i)
{
    const auto& params = game.params;
    Rational u = params.reward - params.mining_cost_per_block();
    if (profile.at(i) == Strategy::S2) u -= params.validation_cost();
    if (invalid_accepted(game, profile)) u -= game.kappas.at(i);
    return u;
}

}  // namespace ashwa::agents
