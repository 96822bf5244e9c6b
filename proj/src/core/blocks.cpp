#include "ashwa/core/blocks.hpp"

#include "ashwa/core/digest.hpp"
#include "ashwa/core/serialize.hpp"

namespace ashwa {

Bytes encode(const PowBlock& b)
{
    Encoder e;
    e.tag("pow")
        .digest(b.parent)
        .u64(b.difficulty)
        .u64(b.nonce)
        .digest(b.candidate.key())
        .u64(b.height);
    return std::move(e).take();
}

Digest block_digest(const PowBlock& b) { return digest(encode(b)); }

PowBlock make_genesis_block(const Identity& candidate)
{
    PowBlock b;
    b.candidate = candidate;
    return b;
}

bool meets_difficulty(const PowBlock& b) { return leading_zero_bits(block_digest(b)) >= b.difficulty; }

bool verify_pow(const PowBlock& block, const PowBlock& parent)
{
    return block.parent == block_digest(parent) && block.height == parent.height + 1 &&
           meets_difficulty(block);
}

Bytes signing_payload(const Transaction& tx)
{
    Encoder e;
    e.tag("tx-sign")
        .digest(tx.from.key())
        .digest(tx.to.key())
        .u64(tx.coins)
        .u64(tx.fee)
        .u64(tx.nonce);
    return std::move(e).take();
}

Bytes encode(const Transaction& tx)
{
    Encoder e;
    e.tag("tx")
        .digest(tx.from.key())
        .digest(tx.to.key())
        .u64(tx.coins)
        .u64(tx.fee)
        .u64(tx.nonce)
        .digest(tx.signature);
    return std::move(e).take();
}

Digest tx_digest(const Transaction& tx) { return digest(encode(tx)); }

Transaction make_transaction(const Keypair& sender, const Identity& to, Amount coins, Amount fee,
                             std::uint64_t nonce)
{
    Transaction tx{sender.identity(), to, coins, fee, nonce, {}};
    tx.signature = sender.sign(signing_payload(tx));
    return tx;
}

bool verify_transaction_static(const Transaction& tx, const KeyDirectory& keys)
{
    // coins and fee are unsigned, so the non-negativity rule holds by construction.
    return keys.verify(tx.from, signing_payload(tx), tx.signature);
}

std::uint64_t serialized_tx_bytes(const std::vector<Transaction>& txs)
{
    std::uint64_t total = 0;
    for (const auto& tx : txs) total += encode(tx).size();
    return total;
}

TxBlock make_tx_block(std::vector<Transaction> txs, const Identity& proposer)
{
    TxBlock t;
    t.byte_size = serialized_tx_bytes(txs);
    t.txs = std::move(txs);
    t.proposer = proposer;
    return t;
}

Bytes encode(const TxBlock& t)
{
    Encoder e;
    e.tag("txblock").u64(t.txs.size());
    for (const auto& tx : t.txs) e.bytes(encode(tx));
    e.u64(t.byte_size).digest(t.proposer.key());
    return std::move(e).take();
}

Digest block_digest(const TxBlock& t) { return digest(encode(t)); }

Bytes encode(const ComBlock& c)
{
    Encoder e;
    e.tag("com").u64(c.members.size());
    for (const auto& m : c.members) e.digest(m.key());
    e.u64(c.epoch);
    return std::move(e).take();
}

Digest block_digest(const ComBlock& c) { return digest(encode(c)); }

}  // namespace ashwa
