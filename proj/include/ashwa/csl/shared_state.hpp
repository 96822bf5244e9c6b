#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ashwa/core/blocks.hpp"
#include "ashwa/core/identity.hpp"

namespace ashwa::csl {

enum class OpKind : std::uint8_t { PowBlock = 1, TxBlock = 2, ComBlock = 3 };

const char* to_string(OpKind kind);

struct SeatSignature {
    Identity signer;
    Signature signature;

    bool operator==(const SeatSignature&) const = default;
};

/// One of the three state-changing operations plus the committee signatures
/// collected for it.
struct Operation {
    std::variant<PowBlock, TxBlock, ComBlock> payload;
    std::vector<SeatSignature> signatures;

    OpKind kind() const { return static_cast<OpKind>(payload.index() + 1); }
};

/// Digest of kind and payload; signatures are not covered.
Digest operation_digest(const Operation& op);
/// Bytes a committee seat signs to vote for op.
Bytes vote_payload(const Digest& op_digest);

struct OpLogEntry {
    OpKind kind;
    Digest op_digest;
    /// Reached quorum but failed validation when committed.
    bool invalid = false;

    bool operator==(const OpLogEntry&) const = default;
};

struct EpochState {
    std::uint64_t epoch_index = 0;
    std::uint64_t round_in_epoch = 0;
    /// powBlock commits since genesis; drives primary rotation.
    std::uint64_t completed_rounds = 0;
    std::vector<Identity> committee;
    bool com_block_due = false;

    bool operator==(const EpochState&) const = default;
};

/// The replicated CSL state.
struct SharedState {
    std::vector<PowBlock> pow_chain;
    /// Signing seats of each committed transaction block.
    std::vector<std::vector<Identity>> tx_signers;
    std::vector<ComBlock> com_chain;
    std::vector<TxBlock> tx_chain;
    std::vector<OpLogEntry> log;
    std::map<Identity, Amount> balances;
    EpochState epoch;

    Amount balance(const Identity& id) const;
    Amount total_supply() const;
    const PowBlock& pow_tip() const { return pow_chain.back(); }

    bool operator==(const SharedState&) const = default;
};

/// Protocol constants every replica shares.
struct CslContext {
    std::size_t committee_size = 4;
    Amount block_reward = 0;
    std::uint64_t max_block_bytes = std::uint64_t{16} << 20;
    const KeyDirectory* keys = nullptr;
};

/// Genesis: a hash-linked PowChain prefix carrying the genesis committee, the
/// genesis ComBlock and initial balances.
SharedState make_genesis_state(std::span<const Identity> committee,
                               const std::map<Identity, Amount>& balances);
std::vector<PowBlock> make_genesis_pow_chain(std::span<const Identity> committee);

/// Identities in the latest n blocks of the PowChain, oldest first.
std::vector<Identity> latest_identities(const SharedState& state, std::size_t n);

/// Line-oriented snapshot: one balance per line, one digest per chain.
std::string snapshot(const SharedState& state);
Digest state_digest(const SharedState& state);

}  // namespace ashwa::csl
