#include <doctest.h>

#include <cmath>

#include "ashwa/acl/access_layer.hpp"
#include "ashwa/core/digest.hpp"
#include "ashwa/csl/shared_state.hpp"
#include "oracles/oracles.hpp"

using namespace ashwa;
using namespace ashwa::acl;

namespace {

std::vector<Miner> make_miners(std::vector<double> alphas)
{
    std::vector<Miner> miners;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        const auto id = Keypair::from_seed("miner" + std::to_string(i)).identity();
        miners.push_back({id, alphas[i], id});
    }
    return miners;
}

std::vector<int> lottery_counts(const std::vector<Miner>& miners, int draws, std::uint64_t seed)
{
    Rng rng(seed);
    std::vector<int> counts(miners.size());
    for (int i = 0; i < draws; ++i) ++counts[mining_lottery(miners, rng)];
    return counts;
}

}  // namespace

TEST_CASE("lottery frequencies follow alpha")
{
    const auto single = make_miners({1.0});
    CHECK(lottery_counts(single, 1000, 1)[0] == 1000);

    constexpr int kDraws = 100000;
    const auto pair = lottery_counts(make_miners({0.5, 0.5}), kDraws, 2);
    CHECK(std::abs(pair[0] - 50000) <= 3 * std::sqrt(kDraws * 0.25));

    const std::vector<double> alphas{0.5, 0.3, 0.2};
    const auto counts = lottery_counts(make_miners(alphas), kDraws, 3);
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        const double sigma = std::sqrt(kDraws * alphas[i] * (1 - alphas[i]));
        CHECK(std::abs(counts[i] - kDraws * alphas[i]) <= 3 * sigma);
    }
}

TEST_CASE("miner shares are validated")
{
    CHECK_THROWS_AS(validate_miners(make_miners({0.5, 0.4})), std::invalid_argument);
    CHECK_THROWS_AS(validate_miners(make_miners({1.2, -0.2})), std::invalid_argument);
    CHECK_NOTHROW(validate_miners(make_miners({0.7, 0.3})));
    Rng rng(1);
    CHECK_THROWS_AS(mining_lottery(std::vector<Miner>{}, rng), std::invalid_argument);
}

TEST_CASE("mined blocks meet their difficulty")
{
    const auto miners = make_miners({1.0});
    const auto genesis = make_genesis_block(miners[0].id);
    Rng rng(4);
    AclConfig easy;
    easy.difficulty = 0;
    const auto b0 = mine_next_block(genesis, 0.0, miners[0], easy, rng);
    CHECK(verify_pow(b0.block, genesis));

    AclConfig cfg;
    cfg.difficulty = 12;
    const auto b = mine_next_block(genesis, 0.0, miners[0], cfg, rng);
    CHECK(oracle::leading_zeros(block_digest(b.block).bytes) >= 12);
    CHECK(verify_pow(b.block, genesis));
    CHECK(b.block.candidate == miners[0].pending_identity);
    CHECK(b.timestamp > 0.0);

    AclConfig impossible;
    impossible.difficulty = 40;
    impossible.max_nonce_attempts = 100;
    CHECK_THROWS_AS(mine_next_block(genesis, 0.0, miners[0], impossible, rng), MiningError);
}

TEST_CASE("mean inter-arrival matches the configured interval")
{
    const auto miners = make_miners({1.0});
    AclConfig cfg;
    cfg.difficulty = 0;
    cfg.expected_block_interval = 60.0;
    const auto genesis = make_genesis_block(miners[0].id);
    AccessLayer layer(miners, cfg, std::vector<PowBlock>{genesis});
    Rng rng(8);
    double last = 0.0;
    constexpr int kBlocks = 10000;
    for (int i = 0; i < kBlocks; ++i) last = layer.mine(rng).second.timestamp;
    CHECK(last / kBlocks == doctest::Approx(60.0).epsilon(0.05));
    CHECK(layer.tree().tip_height() == kBlocks);
}

TEST_CASE("finality depth")
{
    AclConfig k6;
    CHECK(is_final(10, 4, k6));
    CHECK_FALSE(is_final(10, 5, k6));
    AclConfig k1;
    k1.finality_depth = 1;
    CHECK(is_final(1, 0, k1));
    CHECK_THROWS_AS(is_final(3, 4, k6), std::out_of_range);
}

TEST_CASE("block tree keeps the longest anchored chain")
{
    const auto miners = make_miners({0.5, 0.5});
    const auto genesis = make_genesis_block(miners[0].id);
    BlockTree tree(std::vector<PowBlock>{genesis});
    auto child = [](const PowBlock& parent, std::uint64_t nonce, const Identity& who) {
        return PowBlock{block_digest(parent), 0, nonce, who, parent.height + 1};
    };
    const auto a1 = child(genesis, 1, miners[0].id);
    const auto b1 = child(genesis, 2, miners[1].id);
    CHECK(tree.add(a1, 1.0));
    CHECK(tree.add(b1, 1.0));
    CHECK_FALSE(tree.add(a1, 1.0));
    // Equal height: the lower digest wins.
    const auto expected = std::min(block_digest(a1), block_digest(b1));
    CHECK(tree.tip().digest == expected);

    const auto b2 = child(b1, 3, miners[1].id);
    CHECK(tree.add(b2, 2.0));
    CHECK(tree.tip().digest == block_digest(b2));
    CHECK(tree.canonical_chain().size() == 3);

    // Once a1 is committed, the b branch can not become canonical again.
    tree.on_commit(a1);
    CHECK(tree.on_canonical_chain(block_digest(a1)));
    CHECK(tree.tip().digest == block_digest(a1));
    CHECK(tree.anchored_height() == 1);
    CHECK(tree.add(child(b2, 4, miners[1].id), 3.0));
    CHECK(tree.tip().digest == block_digest(a1));
    const auto a2 = child(a1, 5, miners[0].id);
    CHECK(tree.add(a2, 3.0));
    CHECK(tree.tip().digest == block_digest(a2));

    PowBlock orphan{digest("nowhere"), 0, 0, miners[0].id, 5};
    CHECK_FALSE(tree.add(orphan, 4.0));
}

TEST_CASE("only final blocks reach the proposal queue")
{
    const auto miners = make_miners({1.0});
    AclConfig cfg;
    cfg.difficulty = 0;
    cfg.finality_depth = 2;
    const auto prefix = csl::make_genesis_pow_chain(std::vector<Identity>{miners[0].id});
    AccessLayer layer(miners, cfg, prefix);
    ProposalQueue inbox;
    Rng rng(1);
    const auto first = layer.mine(rng).second.block;
    CHECK_THROWS_AS(inbox.propose_block(layer.tree(), first, cfg), ProposalRejected);
    layer.mine(rng);
    CHECK(layer.propose_final_blocks(inbox).empty());
    layer.mine(rng);
    const auto proposed = layer.propose_final_blocks(inbox);
    REQUIRE(proposed.size() == 1);
    CHECK(proposed[0] == first);
    CHECK_FALSE(inbox.propose_block(layer.tree(), first, cfg));
    CHECK(inbox.size() == 1);
    inbox.discard_below(first.height + 1);
    CHECK(inbox.empty());
}
