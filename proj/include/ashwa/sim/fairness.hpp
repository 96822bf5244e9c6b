#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ashwa/acl/access_layer.hpp"
#include "ashwa/bft/trace.hpp"

namespace ashwa::sim {

struct MinerShare {
    std::string miner;
    std::uint64_t blocks = 0;
    double share = 0.0;
    double expected = 0.0;
    /// Binomial standard deviation of the share.
    double sigma = 0.0;
    bool within_3_sigma = false;
};

struct FairnessReport {
    std::uint64_t total_blocks = 0;
    /// False below 100 mined blocks; shares are still reported.
    bool sufficient_sample = false;
    std::vector<MinerShare> miners;

    /// Every miner within 3 sigma on a sufficient sample.
    bool pass() const;
};

/// Block shares from the "mine" events of a trace, against the expected
/// share of each miner (keyed by the actor field).
FairnessReport fairness_report(const std::vector<bft::TraceEvent>& trace,
                               const std::map<std::string, double>& expected);

struct MiningRun {
    std::vector<bft::TraceEvent> trace;
    std::map<std::string, double> expected;
};

/// Mines blocks on a single chain with the given hash-power shares.
MiningRun run_mining(const std::vector<double>& alphas, std::uint64_t blocks, std::uint64_t seed,
                     const acl::AclConfig& config = {});

}  // namespace ashwa::sim
