#include "ashwa/sim/fairness.hpp"

#include <fmt/format.h>

#include <cmath>

#include "ashwa/csl/shared_state.hpp"

namespace ashwa::sim {

bool FairnessReport::pass() const
{
    if (!sufficient_sample) return false;
    for (const auto& m : miners)
        if (!m.within_3_sigma) return false;
    return true;
}

FairnessReport fairness_report(const std::vector<bft::TraceEvent>& trace,
                               const std::map<std::string, double>& expected)
{
    std::map<std::string, std::uint64_t> counts;
    for (const auto& [miner, alpha] : expected) counts[miner] = 0;
    FairnessReport r;
    for (const auto& e : trace) {
        if (e.kind != "mine") continue;
        ++counts[e.actor];
        ++r.total_blocks;
    }
    r.sufficient_sample = r.total_blocks >= 100;
    const double total = static_cast<double>(r.total_blocks);
    for (const auto& [miner, blocks] : counts) {
        MinerShare s;
        s.miner = miner;
        s.blocks = blocks;
        const auto it = expected.find(miner);
        s.expected = it == expected.end() ? 0.0 : it->second;
        if (r.total_blocks > 0) {
            s.share = static_cast<double>(blocks) / total;
            s.sigma = std::sqrt(s.expected * (1 - s.expected) / total);
        }
        s.within_3_sigma = std::abs(s.share - s.expected) <= 3 * s.sigma + 1e-12;
        r.miners.push_back(s);
    }
    return r;
}

MiningRun run_mining(const std::vector<double>& alphas, std::uint64_t blocks, std::uint64_t seed,
                     const acl::AclConfig& config)
{
    std::vector<acl::Miner> miners;
    MiningRun run;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        const auto keys = Keypair::from_seed(fmt::format("miner/{}/{}", seed, i));
        miners.push_back(acl::Miner{keys.identity(), alphas[i], keys.identity()});
        run.expected[keys.identity().display()] = alphas[i];
    }
    const auto genesis = csl::make_genesis_pow_chain(std::vector<Identity>{miners.front().id});
    acl::AccessLayer layer(miners, config, genesis);
    Rng rng(seed);
    for (std::uint64_t i = 0; i < blocks; ++i) {
        const auto [winner, mined] = layer.mine(rng);
        run.trace.push_back({mined.timestamp, "mine", miners[winner].id.display(), block_digest(mined.block).short_hex()});
    }
    return run;
}

}  // namespace ashwa::sim
