#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "ashwa/core/blocks.hpp"
#include "ashwa/core/random.hpp"

namespace ashwa::acl {

struct Miner {
    Identity id;
    /// Share of total network hash power.
    double alpha = 0.0;
    /// Identity written into the blocks this miner wins.
    Identity pending_identity;
};

struct AclConfig {
    std::uint32_t difficulty = 8;
    std::uint64_t finality_depth = 6;
    double expected_block_interval = 60.0;
    /// Upper bound on nonces tried per block.
    std::uint64_t max_nonce_attempts = std::uint64_t{1} << 24;

    void validate() const;
};

class MiningError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Checks that alphas are non-negative and sum to one.
void validate_miners(std::span<const Miner> miners);

/// Picks the next block winner with probability equal to its alpha.
std::size_t mining_lottery(std::span<const Miner> miners, Rng& rng);

struct MinedBlock {
    PowBlock block;
    double timestamp = 0.0;
};

/// Builds and solves the child of tip for winner. The timestamp advances by
/// an exponential inter-arrival with the configured mean.
MinedBlock mine_next_block(const PowBlock& tip, double tip_time, const Miner& winner,
                           const AclConfig& config, Rng& rng);

/// True iff the block at height has at least finality_depth confirmations.
bool is_final(std::uint64_t tip_height, std::uint64_t height, const AclConfig& config);

/// All blocks seen by one ACL node, with longest-chain selection.
///
/// Ties between equally long chains go to the tip with the lowest digest.
/// Once CSL commits a block, the canonical chain must extend it.
class BlockTree {
public:
    struct Entry {
        PowBlock block;
        Digest digest;
        double timestamp = 0.0;
        /// Block is the anchor or one of its descendants.
        bool anchored = false;
    };

    /// Starts from a prefix of already agreed blocks (genesis first).
    explicit BlockTree(std::span<const PowBlock> prefix);

    /// Adds a block whose parent is already known. Returns false if the block
    /// is a duplicate, has an unknown parent, or fails verify_pow.
    bool add(const PowBlock& block, double timestamp);

    const Entry& tip() const { return entries_.at(tip_); }
    std::uint64_t tip_height() const { return tip().block.height; }

    /// Canonical chain from genesis to tip.
    std::vector<PowBlock> canonical_chain() const;
    /// Canonical block at height; throws std::out_of_range above the tip.
    const Entry& at_height(std::uint64_t height) const;

    bool contains(const Digest& d) const { return entries_.contains(d); }
    bool on_canonical_chain(const Digest& d) const;

    /// commitBlock(b): anchors the canonical chain at b.
    void on_commit(const PowBlock& block);
    std::uint64_t anchored_height() const { return entries_.at(anchor_).block.height; }

    std::size_t size() const { return entries_.size(); }

private:
    bool better_tip(const Entry& candidate) const;

    std::map<Digest, Entry> entries_;
    Digest tip_{};
    Digest anchor_{};
};

bool is_final(const BlockTree& chain, std::uint64_t height, const AclConfig& config);

class ProposalRejected : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The CSL inbox fed by proposeBlock(b).
class ProposalQueue {
public:
    /// Enqueues a finalized block. Throws ProposalRejected if the block is
    /// not final on chain; a block already proposed is ignored.
    /// Returns true if the proposal was enqueued.
    bool propose_block(const BlockTree& chain, const PowBlock& block, const AclConfig& config);

    bool empty() const { return pending_.empty(); }
    std::size_t size() const { return pending_.size(); }
    const PowBlock& front() const { return pending_.front(); }
    void pop() { pending_.pop_front(); }
    std::span<const PowBlock> pending() const;

    /// Drops proposals that can no longer extend a chain whose tip has height.
    void discard_below(std::uint64_t next_height);

private:
    std::deque<PowBlock> pending_;
    mutable std::vector<PowBlock> view_;
    std::set<Digest> proposed_;
};

/// One ACL network view: miners plus their block tree.
class AccessLayer {
public:
    AccessLayer(std::vector<Miner> miners, AclConfig config, std::span<const PowBlock> prefix);

    /// Runs one mining race on the canonical tip; returns the winner index and the new block.
    std::pair<std::size_t, MinedBlock> mine(Rng& rng);

    /// Proposes every canonical block that became final since the last call.
    std::vector<PowBlock> propose_final_blocks(ProposalQueue& inbox);

    void on_commit(const PowBlock& block) { tree_.on_commit(block); }

    const BlockTree& tree() const { return tree_; }
    const std::vector<Miner>& miners() const { return miners_; }
    const AclConfig& config() const { return config_; }

private:
    std::vector<Miner> miners_;
    AclConfig config_;
    BlockTree tree_;
    std::uint64_t next_to_propose_;
};

}  // namespace ashwa::acl
