#pragma once

#include <cstdint>
#include <vector>

#include "ashwa/core/bytes.hpp"
#include "ashwa/core/identity.hpp"

namespace ashwa {

/// Access-control layer block: parent hash, difficulty, nonce and the
/// identity it promotes to the committee.
struct PowBlock {
    Digest parent{};
    std::uint32_t difficulty = 0;
    std::uint64_t nonce = 0;
    Identity candidate{};
    std::uint64_t height = 0;

    bool operator==(const PowBlock&) const = default;
};

Bytes encode(const PowBlock& b);
Digest block_digest(const PowBlock& b);

/// Height 0, all-zero parent, difficulty 0.
PowBlock make_genesis_block(const Identity& candidate);

bool meets_difficulty(const PowBlock& b);
bool verify_pow(const PowBlock& block, const PowBlock& parent);

struct Transaction {
    Identity from{};
    Identity to{};
    Amount coins = 0;
    Amount fee = 0;
    /// Per-sender sequence number; keeps otherwise identical payments distinct.
    std::uint64_t nonce = 0;
    Signature signature{};

    bool operator==(const Transaction&) const = default;
};

Bytes signing_payload(const Transaction& tx);
Bytes encode(const Transaction& tx);
Digest tx_digest(const Transaction& tx);

Transaction make_transaction(const Keypair& sender, const Identity& to, Amount coins, Amount fee,
                             std::uint64_t nonce);

class KeyDirectory;

/// Signature check only; balance sufficiency is a stateful check done at commit.
bool verify_transaction_static(const Transaction& tx, const KeyDirectory& keys);

struct TxBlock {
    std::vector<Transaction> txs;
    std::uint64_t byte_size = 0;
    Identity proposer{};

    bool operator==(const TxBlock&) const = default;
};

/// Sets byte_size to the serialized size of the transactions.
TxBlock make_tx_block(std::vector<Transaction> txs, const Identity& proposer);
std::uint64_t serialized_tx_bytes(const std::vector<Transaction>& txs);
Bytes encode(const TxBlock& t);
Digest block_digest(const TxBlock& t);

struct ComBlock {
    std::vector<Identity> members;
    std::uint64_t epoch = 0;

    bool operator==(const ComBlock&) const = default;
};

Bytes encode(const ComBlock& c);
Digest block_digest(const ComBlock& c);

}  // namespace ashwa
