#include "ashwa/acl/access_layer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ashwa/core/digest.hpp"

namespace ashwa::acl {

void AclConfig::validate() const
{
    if (finality_depth < 1) throw std::invalid_argument("finality_depth must be at least 1");
    if (!(expected_block_interval > 0)) throw std::invalid_argument("expected_block_interval must be positive");
    if (difficulty > 256) throw std::invalid_argument("difficulty exceeds digest width");
}

void validate_miners(std::span<const Miner> miners)
{
    if (miners.empty()) throw std::invalid_argument("mining_lottery: no miners");
    double total = 0.0;
    for (const auto& m : miners) {
        if (!(m.alpha >= 0.0) || m.alpha > 1.0)
            throw std::invalid_argument("miner alpha outside [0, 1]");
        total += m.alpha;
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw std::invalid_argument("miner alphas sum to " + std::to_string(total) + ", expected 1");
}

std::size_t mining_lottery(std::span<const Miner> miners, Rng& rng)
{
    validate_miners(miners);
    const double u = rng.uniform();
    double cumulative = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < miners.size(); ++i) {
        if (miners[i].alpha <= 0.0) continue;
        cumulative += miners[i].alpha;
        last_positive = i;
        if (u < cumulative) return i;
    }
    // Rounding left a sliver above the cumulative sum.
    return last_positive;
}

MinedBlock mine_next_block(const PowBlock& tip, double tip_time, const Miner& winner,
                           const AclConfig& config, Rng& rng)
{
    PowBlock block;
    block.parent = block_digest(tip);
    block.difficulty = config.difficulty;
    block.candidate = winner.pending_identity;
    block.height = tip.height + 1;
    block.nonce = rng.next_u64();
    for (std::uint64_t attempt = 0;; ++attempt) {
        if (attempt >= config.max_nonce_attempts)
            throw MiningError("nonce search exceeded " + std::to_string(config.max_nonce_attempts) +
                              " attempts at difficulty " + std::to_string(config.difficulty));
        if (meets_difficulty(block)) break;
        ++block.nonce;
    }
    return {block, tip_time + rng.exponential(config.expected_block_interval)};
}

bool is_final(std::uint64_t tip_height, std::uint64_t height, const AclConfig& config)
{
    if (height > tip_height) throw std::out_of_range("is_final: height above tip");
    return tip_height - height >= config.finality_depth;
}

BlockTree::BlockTree(std::span<const PowBlock> prefix)
{
    if (prefix.empty()) throw std::invalid_argument("BlockTree needs a genesis block");
    const auto& genesis = prefix.front();
    if (genesis.height != 0 || !genesis.parent.is_zero())
        throw std::invalid_argument("BlockTree: first block is not a genesis block");
    auto d = block_digest(genesis);
    entries_.emplace(d, Entry{genesis, d, 0.0, true});
    tip_ = anchor_ = d;
    for (std::size_t i = 1; i < prefix.size(); ++i) {
        if (!add(prefix[i], 0.0)) throw std::invalid_argument("BlockTree: prefix is not hash-linked");
    }
    on_commit(prefix.back());
}

bool BlockTree::better_tip(const Entry& candidate) const
{
    const auto& current = entries_.at(tip_);
    if (candidate.block.height != current.block.height) return candidate.block.height > current.block.height;
    return candidate.digest < current.digest;
}

bool BlockTree::add(const PowBlock& block, double timestamp)
{
    auto d = block_digest(block);
    if (entries_.contains(d)) return false;
    auto parent = entries_.find(block.parent);
    if (parent == entries_.end()) return false;
    if (!verify_pow(block, parent->second.block)) return false;
    const bool anchored = parent->second.anchored;
    const auto& entry = entries_.emplace(d, Entry{block, d, timestamp, anchored}).first->second;
    if (anchored && better_tip(entry)) tip_ = d;
    return true;
}

std::vector<PowBlock> BlockTree::canonical_chain() const
{
    std::vector<PowBlock> chain;
    Digest cur = tip_;
    while (true) {
        const auto& e = entries_.at(cur);
        chain.push_back(e.block);
        if (e.block.height == 0) break;
        cur = e.block.parent;
    }
    return {chain.rbegin(), chain.rend()};
}

const BlockTree::Entry& BlockTree::at_height(std::uint64_t height) const
{
    if (height > tip_height()) throw std::out_of_range("BlockTree::at_height: above tip");
    Digest cur = tip_;
    while (true) {
        const auto& e = entries_.at(cur);
        if (e.block.height == height) return e;
        cur = e.block.parent;
    }
}

bool BlockTree::on_canonical_chain(const Digest& d) const
{
    auto it = entries_.find(d);
    if (it == entries_.end() || it->second.block.height > tip_height()) return false;
    return at_height(it->second.block.height).digest == d;
}

void BlockTree::on_commit(const PowBlock& block)
{
    auto d = block_digest(block);
    if (!entries_.contains(d)) throw std::invalid_argument("on_commit: unknown block");
    anchor_ = d;

    // Recompute descent from the new anchor parent-first, then pick the best anchored tip.
    std::vector<Entry*> by_height;
    by_height.reserve(entries_.size());
    for (auto& [_, e] : entries_) by_height.push_back(&e);
    std::stable_sort(by_height.begin(), by_height.end(),
                     [](const Entry* a, const Entry* b) { return a->block.height < b->block.height; });
    for (auto* e : by_height) {
        e->anchored = e->digest == anchor_ ||
                      (e->block.height > block.height && entries_.at(e->block.parent).anchored);
    }
    tip_ = anchor_;
    for (auto* e : by_height) {
        if (e->anchored && better_tip(*e)) tip_ = e->digest;
    }
}

bool is_final(const BlockTree& chain, std::uint64_t height, const AclConfig& config)
{
    return is_final(chain.tip_height(), height, config);
}

bool ProposalQueue::propose_block(const BlockTree& chain, const PowBlock& block, const AclConfig& config)
{
    auto d = block_digest(block);
    if (!chain.on_canonical_chain(d))
        throw ProposalRejected("proposeBlock: block is not on the canonical chain");
    if (!is_final(chain, block.height, config))
        throw ProposalRejected("proposeBlock: block at height " + std::to_string(block.height) +
                               " is not final");
    if (!proposed_.insert(d).second) return false;
    pending_.push_back(block);
    return true;
}

std::span<const PowBlock> ProposalQueue::pending() const
{
    view_.assign(pending_.begin(), pending_.end());
    return view_;
}

void ProposalQueue::discard_below(std::uint64_t next_height)
{
    while (!pending_.empty() && pending_.front().height < next_height) pending_.pop_front();
}

AccessLayer::AccessLayer(std::vector<Miner> miners, AclConfig config, std::span<const PowBlock> prefix)
    : miners_(std::move(miners)), config_(config), tree_(prefix), next_to_propose_(prefix.back().height + 1)
{
    config_.validate();
    validate_miners(miners_);
}

std::pair<std::size_t, MinedBlock> AccessLayer::mine(Rng& rng)
{
    const auto winner = mining_lottery(miners_, rng);
    const auto& tip = tree_.tip();
    auto mined = mine_next_block(tip.block, tip.timestamp, miners_[winner], config_, rng);
    tree_.add(mined.block, mined.timestamp);
    return {winner, mined};
}

std::vector<PowBlock> AccessLayer::propose_final_blocks(ProposalQueue& inbox)
{
    std::vector<PowBlock> proposed;
    while (next_to_propose_ <= tree_.tip_height() && is_final(tree_, next_to_propose_, config_)) {
        const auto& block = tree_.at_height(next_to_propose_).block;
        if (inbox.propose_block(tree_, block, config_)) proposed.push_back(block);
        ++next_to_propose_;
    }
    return proposed;
}

}  // namespace ashwa::acl
