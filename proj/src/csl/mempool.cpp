#include "ashwa/csl/mempool.hpp"

#include "ashwa/core/digest.hpp"

namespace ashwa::csl {

bool Mempool::submit(const Transaction& tx)
{
    if (!index_.insert(tx_digest(tx)).second) return false;
    pending_.push_back(tx);
    return true;
}

std::vector<Transaction> Mempool::next_batch(std::uint64_t max_bytes) const
{
    std::vector<Transaction> batch;
    std::uint64_t used = 0;
    for (const auto& tx : pending_) {
        const auto size = encode(tx).size();
        if (used + size > max_bytes) break;
        used += size;
        batch.push_back(tx);
    }
    return batch;
}

void Mempool::remove_committed(const TxBlock& block)
{
    std::set<Digest> gone;
    for (const auto& tx : block.txs) {
        auto d = tx_digest(tx);
        if (index_.erase(d)) gone.insert(d);
    }
    if (gone.empty()) return;
    std::erase_if(pending_, [&](const Transaction& tx) { return gone.contains(tx_digest(tx)); });
}

}  // namespace ashwa::csl
