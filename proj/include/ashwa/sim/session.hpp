#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ashwa/acl/access_layer.hpp"
#include "ashwa/agents/agent.hpp"
#include "ashwa/agents/game.hpp"
#include "ashwa/bft/trace.hpp"
#include "ashwa/csl/shared_state.hpp"
#include "ashwa/sim/latency.hpp"

namespace ashwa::sim {

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// What a Byzantine primary does with its turn.
enum class ByzantineMode {
    /// Proposes an operation that fails validation.
    Invalid,
    /// Sends conflicting transaction blocks to two halves of the correct
    /// seats; Byzantine seats sign both.
    Equivocate,
};

const char* to_string(ByzantineMode m);
ByzantineMode parse_byzantine_mode(std::string_view text);

struct SessionConfig {
    std::uint64_t seed = 1;
    std::size_t committee_size = 4;
    std::size_t n_honest = 4;
    std::size_t n_rational = 0;
    std::size_t n_byzantine = 0;
    /// Hash power per agent in order honest, rational, Byzantine. Empty
    /// means an equal split.
    std::vector<double> alphas;
    /// Stake per agent in the same order. Empty means kappa_r for everyone.
    std::vector<Rational> kappas;

    agents::GameParams game;
    /// Belief rational agents hold when choosing a strategy.
    Rational belief_alpha = 0;
    Rational belief_rho = 0;

    acl::AclConfig acl;
    LatencyModel latency;
    std::optional<Calibration> calibration;

    std::uint64_t block_bytes = std::uint64_t{16} << 20;
    std::uint64_t tx_bytes = 200;
    std::uint64_t duration_rounds = 20;

    /// Poisson arrival rate of workload transactions per simulated second.
    double tx_rate = 0.1;
    std::size_t accounts = 8;
    Amount fee = 1;
    Amount block_reward = 0;

    ByzantineMode byzantine_mode = ByzantineMode::Invalid;
    /// Randomise the genesis seat order.
    bool shuffle_seats = true;
    /// Log every delivery and vote, not only proposals and outcomes.
    bool trace_messages = false;
    /// Extra rounds on top of committee_size a transaction may wait.
    std::uint64_t liveness_slack = 10;

    /// Throws ConfigError naming the violated constraint.
    void validate() const;
};

struct SessionMetrics {
    std::uint64_t committed_pow_blocks = 0;
    std::uint64_t committed_tx_blocks = 0;
    std::uint64_t committed_com_blocks = 0;
    std::uint64_t committed_transactions = 0;
    std::uint64_t submitted_transactions = 0;
    std::uint64_t invalid_blocks_committed = 0;
    std::uint64_t conflicting_commits = 0;
    std::uint64_t view_changes = 0;
    std::uint64_t resets = 0;
    std::vector<std::uint64_t> messages_per_round;
    /// Mean simulated seconds from the first proposal of a transaction block
    /// to its commit.
    double avg_tx_block_time = 0.0;
    double tps = 0.0;
    double simulated_seconds = 0.0;
    std::vector<double> per_agent_utility;
    std::uint64_t max_tx_delay_rounds = 0;
    /// Transactions that waited longer than committee_size + liveness_slack rounds.
    std::uint64_t late_transactions = 0;
    bool liveness_lost = false;
    bool replicas_agree = true;
    std::size_t max_adversary_seats = 0;
    std::vector<std::string> violations;

    bool safety_violated() const { return invalid_blocks_committed > 0 || conflicting_commits > 0 || !replicas_agree; }
    double mean_messages_per_round() const;
    bool operator==(const SessionMetrics&) const = default;
};

struct SessionResult {
    SessionMetrics metrics;
    std::vector<bft::TraceEvent> trace;
    std::vector<agents::AgentProfile> agents;
    csl::SharedState final_state;
    /// Final state digest of every non-Byzantine replica.
    std::vector<Digest> replica_digests;
};

SessionResult run_session(const SessionConfig& config);

/// Committees announced in the trace that differ from the latest
/// committee_size identities committed before them.
std::size_t rotation_mismatches(const std::vector<bft::TraceEvent>& trace, std::size_t committee_size);

/// Epoch boundaries (committee announcements) found in the trace.
std::size_t epochs_in_trace(const std::vector<bft::TraceEvent>& trace);

void write_metrics_header(std::ostream& out);
void write_metrics_row(std::ostream& out, const SessionConfig& config, const SessionMetrics& m);

}  // namespace ashwa::sim
