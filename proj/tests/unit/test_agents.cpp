#include <doctest.h>

#include "ashwa/agents/agent.hpp"
#include "ashwa/agents/game.hpp"
#include "ashwa/bft/thresholds.hpp"
#include "ashwa/core/random.hpp"
#include "ashwa/csl/operations.hpp"
#include "oracles/oracles.hpp"

using namespace ashwa;
using namespace ashwa::agents;

namespace {

Rational q_of(std::uint64_t num, std::uint64_t den)
{
    Rational r(mpz_class(static_cast<unsigned long>(num)), mpz_class(static_cast<unsigned long>(den)));
    r.canonicalize();
    return r;
}

BeliefModel belief(const Rational& q, std::size_t n) { return BeliefModel{q, 0, n}; }

}  // namespace

TEST_CASE("strategies per agent type")
{
    const auto id = Keypair::from_seed("a").identity();
    CHECK(make_profile(id, AgentType::Honest).strategy == Strategy::S2);
    CHECK(make_profile(id, AgentType::Byzantine).strategy == Strategy::S3);
    auto p = make_profile(id, AgentType::Honest);
    p.strategy = Strategy::S1;
    CHECK_THROWS(p.validate());
    p = make_profile(id, AgentType::Rational);
    p.strategy = Strategy::S3;
    CHECK_THROWS(p.validate());
    CHECK_THROWS(make_profile(id, AgentType::Rational, -1));
    CHECK(parse_agent_type("byzantine") == AgentType::Byzantine);
    CHECK_THROWS(parse_agent_type("selfish"));
}

TEST_CASE("votes on valid and invalid proposals")
{
    KeyDirectory dir;
    std::vector<Identity> committee;
    for (int i = 0; i < 4; ++i) {
        const auto k = Keypair::from_seed("s" + std::to_string(i));
        dir.add(k);
        committee.push_back(k.identity());
    }
    const auto alice = Keypair::from_seed("alice");
    dir.add(alice);
    const auto state = csl::make_genesis_state(committee, {{alice.identity(), 10}});
    csl::CslContext ctx;
    ctx.keys = &dir;
    const csl::Operation valid{make_tx_block({make_transaction(alice, committee[0], 5, 0, 0)}, committee[0]), {}};
    const csl::Operation invalid{make_tx_block({make_transaction(alice, committee[0], 50, 0, 0)}, committee[0]), {}};

    auto honest = make_profile(committee[0], AgentType::Honest);
    auto lazy = make_profile(committee[1], AgentType::Rational);
    lazy.strategy = Strategy::S1;
    auto byz = make_profile(committee[2], AgentType::Byzantine);

    CHECK(act_on_proposal(honest, invalid, state, ctx) == VoteDecision::Reject);
    CHECK(act_on_proposal(honest, valid, state, ctx) == VoteDecision::SignValid);
    CHECK(act_on_proposal(lazy, invalid, state, ctx) == VoteDecision::SignWithoutCheck);
    CHECK(act_on_proposal(byz, valid, state, ctx) == VoteDecision::Reject);
    CHECK(act_on_proposal(byz, invalid, state, ctx) == VoteDecision::SignInvalidOnly);
    CHECK(signs(VoteDecision::SignWithoutCheck));
    CHECK_FALSE(signs(VoteDecision::Reject));
}

TEST_CASE("p_invalid for a committee of four")
{
    const auto b = belief(q_of(3, 10), 4);
    CHECK(p_invalid(b, Strategy::S1) == q_of(216, 1000));
    CHECK(p_invalid(b, Strategy::S2) == q_of(27, 1000));
    CHECK(delta(b) == q_of(189, 1000));
    CHECK(pivotal_probability(3, 3, q_of(3, 10)) == q_of(189, 1000));
    CHECK(p_invalid(b, Strategy::S1) == oracle::p_invalid_by_subsets(4, q_of(3, 10), 3, true));

    CHECK(p_invalid(belief(0, 4), Strategy::S1) == 0);
    CHECK(p_invalid(belief(0, 4), Strategy::S2) == 0);
    CHECK(delta(belief(0, 4)) == 0);
    CHECK(p_invalid(belief(1, 4), Strategy::S1) == 1);
    CHECK(p_invalid(belief(1, 4), Strategy::S2) == 1);
}

TEST_CASE("sign probability mixes adversary and lazy peers")
{
    BeliefModel b{q_of(1, 5), q_of(1, 2), 7};
    CHECK(b.sign_probability() == q_of(3, 5));
    b.rho_s1 = 2;
    CHECK_THROWS(p_invalid(b, Strategy::S1));
}

TEST_CASE("delta is the pivotal term for random committees")
{
    Rng rng(21);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 2 + rng.below(13);
        const std::size_t k = 1 + rng.below(n);
        const auto q = q_of(rng.below(101), 100);
        CAPTURE(n);
        CAPTURE(k);
        const auto b = belief(q, n);
        const auto d = delta(b, k);
        CHECK(d == pivotal_probability(n - 1, k, q));
        CHECK(d == oracle::p_invalid_by_subsets(n, q, k, true) - oracle::p_invalid_by_subsets(n, q, k, false));
        if (q > 0 && q < 1 && k >= 2) CHECK(d > 0);
    }
}

TEST_CASE("utilities by direct substitution")
{
    GameParams g;
    g.reward = 10;
    g.c_mine = 100;
    g.n_tx = 50;
    g.phi = 1;
    g.c_val = 1;
    auto p = make_profile(Keypair::from_seed("r").identity(), AgentType::Rational, 100);
    CHECK(utility(p, g, belief(0, 4), Strategy::S2) == 7);
    // Two seats with threshold two: the other seat signs with probability 1/5.
    CHECK(p_invalid(belief(q_of(1, 5), 2), Strategy::S1) == q_of(1, 5));
    CHECK(utility(p, g, belief(q_of(1, 5), 2), Strategy::S1) == -12);
    p.reward = Rational(20);
    CHECK(utility(p, g, belief(0, 4), Strategy::S2) == 17);
    CHECK_THROWS(utility(p, g, belief(0, 4), Strategy::S3));
}

TEST_CASE("validation pays exactly when stake times delta covers its cost")
{
    Rng rng(5);
    for (int i = 0; i < 1000; ++i) {
        GameParams g;
        g.reward = q_of(rng.below(1000), 10);
        g.c_mine = q_of(rng.below(1000), 10);
        g.n_tx = 1 + rng.below(100);
        g.phi = rng.below(50);
        g.c_val = q_of(rng.below(100), 100);
        auto p = make_profile(Identity{}, AgentType::Rational, q_of(rng.below(500), 1));
        const auto b = belief(q_of(rng.below(101), 100), 4 + rng.below(10));
        const bool validating_pays = utility(p, g, b, Strategy::S2) >= utility(p, g, b, Strategy::S1);
        CHECK(validating_pays == (p.kappa * delta(b) >= g.validation_cost()));
    }
}

TEST_CASE("best responses")
{
    GameParams g;
    g.phi = 10;
    g.c_val = q_of(1, 100);
    const auto b = belief(q_of(3, 10), 4);
    auto p = make_profile(Identity{}, AgentType::Rational, 100);
    CHECK(best_response(p, g, b) == Strategy::S2);  // 100 * 0.189 > 0.1
    g.c_val = 10;
    CHECK(best_response(p, g, b) == Strategy::S1);  // 100 > 18.9
    p.kappa = 0;
    g.c_val = q_of(1, 100);
    CHECK(best_response(p, g, b) == Strategy::S1);
    g.phi = 0;
    CHECK(best_response(p, g, b) == Strategy::S2);
    CHECK_THROWS(best_response(make_profile(Identity{}, AgentType::Honest), g, b));
}

TEST_CASE("delta is positive inside the unit interval")
{
    for (std::size_t n = 2; n <= 12; ++n)
        for (std::size_t k = 2; k <= n; ++k)
            for (std::uint64_t j = 1; j < 20; ++j) CHECK(delta(belief(q_of(j, 20), n), k) > 0);
}

TEST_CASE("all-s2 is the unique equilibrium when the conditions hold")
{
    CommitteeGame game;
    game.n_honest = 3;
    game.n_byzantine = 1;
    game.kappas = {100, 120, 150};
    game.alpha_a = q_of(1, 10);
    game.params.c_val = q_of(1, 1000);
    game.params.phi = 100;
    game.params.reward = 10;
    game.params.c_mine = 100;
    game.params.n_tx = 50;

    const auto dmin = game_delta_min(game);
    REQUIRE(game.params.kappa_r * dmin > game.params.validation_cost());
    const auto eq = pure_equilibria(game);
    REQUIRE(eq.size() == 1);
    CHECK(eq[0] == uniform_profile(game, Strategy::S2));
    CHECK(best_response_dynamics(game, uniform_profile(game, Strategy::S1)) == uniform_profile(game, Strategy::S2));

    const auto all_s2 = uniform_profile(game, Strategy::S2);
    CHECK_FALSE(invalid_accepted(game, all_s2));
    for (std::size_t i = 0; i < game.n_rational(); ++i) CHECK(realized_utility(game, all_s2, i) >= 0);
}

TEST_CASE("expensive validation makes s1 the best response")
{
    CommitteeGame game;
    game.n_honest = 1;
    game.n_byzantine = 1;
    game.kappas = {10, 10};
    game.alpha_a = q_of(1, 4);
    game.params.c_val = 1;
    game.params.phi = 100;
    const auto all_s1 = uniform_profile(game, Strategy::S1);
    CHECK(best_response(game, all_s1, 0) == Strategy::S1);
    CHECK(is_equilibrium(game, all_s1));
    CHECK(invalid_accepted(game, all_s1));
}
