#pragma once

#include <optional>
#include <stdexcept>

#include "ashwa/csl/shared_state.hpp"

namespace ashwa::csl {

class CommitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool validate_pow_block(const SharedState& state, const PowBlock& b);
bool validate_com_block(const SharedState& state, const ComBlock& c, const CslContext& ctx);
bool validate_tx_block(const SharedState& state, const TxBlock& t, const CslContext& ctx);
bool validate(const SharedState& state, const Operation& op, const CslContext& ctx);

/// Committee seats whose identity carries a valid vote signature for op.
/// An identity holding several seats counts once per seat.
std::size_t signing_seats(const SharedState& state, const Operation& op, const CslContext& ctx);

struct CommitResult {
    /// False when the operation reached quorum but failed validation; it is
    /// then logged as invalid and leaves the rest of the state untouched.
    bool valid = true;
    /// Set after a powBlock commit: the commitBlock(b) notification for ACL.
    std::optional<PowBlock> commit_block;
};

/// Each commit rule throws CommitError if the signatures do not reach the
/// supermajority of the current committee, or if the operation is not
/// allowed at this point of the epoch.
CommitResult commit_pow_block(SharedState& state, const Operation& op, const CslContext& ctx);
CommitResult commit_tx_block(SharedState& state, const Operation& op, const CslContext& ctx);
CommitResult commit_com_block(SharedState& state, const Operation& op, const CslContext& ctx);
CommitResult commit(SharedState& state, const Operation& op, const CslContext& ctx);

/// Primary for the current round after view_offset view changes.
Identity select_primary(const SharedState& state, std::uint64_t view_offset);
std::size_t primary_seat(const SharedState& state, std::uint64_t view_offset);

/// ComBlock that closes the current epoch.
ComBlock next_com_block(const SharedState& state, const CslContext& ctx);

}  // namespace ashwa::csl
