#pragma once

#include <deque>
#include <set>
#include <vector>

#include "ashwa/core/blocks.hpp"

namespace ashwa::csl {

/// FIFO pool of pending transactions.
class Mempool {
public:
    /// Returns false for a transaction already pooled.
    bool submit(const Transaction& tx);

    /// Longest FIFO prefix whose serialized size fits in max_bytes.
    std::vector<Transaction> next_batch(std::uint64_t max_bytes) const;

    /// Drops the transactions of a committed block.
    void remove_committed(const TxBlock& block);

    bool empty() const { return pending_.empty(); }
    std::size_t size() const { return pending_.size(); }

private:
    std::deque<Transaction> pending_;
    std::set<Digest> index_;
};

}  // namespace ashwa::csl
