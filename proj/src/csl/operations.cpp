#include "ashwa/csl/operations.hpp"

#include <limits>
#include <map>

#include "ashwa/bft/thresholds.hpp"

namespace ashwa::csl {

namespace {

const KeyDirectory& keys_of(const CslContext& ctx)
{
    if (!ctx.keys) throw std::invalid_argument("CslContext has no key directory");
    return *ctx.keys;
}

bool checked_add(Amount& target, Amount delta)
{
    if (target > std::numeric_limits<Amount>::max() - delta) return false;
    target += delta;
    return true;
}

/// Seat-ordered identities whose vote verified.
std::vector<Identity> signer_seats(const SharedState& state, const Operation& op, const CslContext& ctx)
{
    const auto payload = vote_payload(operation_digest(op));
    const auto& keys = keys_of(ctx);
    std::map<Identity, bool> verified;
    for (const auto& s : op.signatures) {
        auto& ok = verified[s.signer];
        ok = ok || keys.verify(s.signer, payload, s.signature);
    }
    std::vector<Identity> seats;
    for (const auto& member : state.epoch.committee) {
        auto it = verified.find(member);
        if (it != verified.end() && it->second) seats.push_back(member);
    }
    return seats;
}

void require_quorum(const SharedState& state, const Operation& op, const CslContext& ctx)
{
    const auto have = signing_seats(state, op, ctx);
    const auto need = bft::supermajority_threshold(state.epoch.committee.size());
    if (have < need)
        throw CommitError(std::string(to_string(op.kind())) + ": " + std::to_string(have) +
                          " signing seats, supermajority needs " + std::to_string(need));
}

CommitResult log_invalid(SharedState& state, const Operation& op)
{
    state.log.push_back({op.kind(), operation_digest(op), true});
    return {false, std::nullopt};
}

}  // namespace

bool validate_pow_block(const SharedState& state, const PowBlock& b)
{
    return verify_pow(b, state.pow_tip());
}

bool validate_com_block(const SharedState& state, const ComBlock& c, const CslContext& ctx)
{
    if (c.members.size() != ctx.committee_size || state.pow_chain.size() < ctx.committee_size) return false;
    return c.epoch == state.com_chain.size() && c.members == latest_identities(state, ctx.committee_size);
}

bool validate_tx_block(const SharedState& state, const TxBlock& t, const CslContext& ctx)
{
    if (t.txs.empty() || t.byte_size > ctx.max_block_bytes) return false;
    if (t.byte_size != serialized_tx_bytes(t.txs)) return false;
    const auto& keys = keys_of(ctx);
    std::map<Identity, Amount> scratch;
    auto balance = [&](const Identity& id) -> Amount& {
        auto it = scratch.find(id);
        if (it == scratch.end()) it = scratch.emplace(id, state.balance(id)).first;
        return it->second;
    };
    for (const auto& tx : t.txs) {
        if (!verify_transaction_static(tx, keys)) return false;
        Amount spend = tx.coins;
        if (!checked_add(spend, tx.fee)) return false;
        auto& from = balance(tx.from);
        if (from < spend) return false;
        from -= spend;
        if (!checked_add(balance(tx.to), tx.coins)) return false;
    }
    return true;
}

bool validate(const SharedState& state, const Operation& op, const CslContext& ctx)
{
    switch (op.kind()) {
    case OpKind::PowBlock:
        return !state.epoch.com_block_due && validate_pow_block(state, std::get<PowBlock>(op.payload));
    case OpKind::TxBlock: return validate_tx_block(state, std::get<TxBlock>(op.payload), ctx);
    case OpKind::ComBlock:
        return state.epoch.com_block_due && validate_com_block(state, std::get<ComBlock>(op.payload), ctx);
    }
    return false;
}

std::size_t signing_seats(const SharedState& state, const Operation& op, const CslContext& ctx)
{
    return signer_seats(state, op, ctx).size();
}

CommitResult commit_pow_block(SharedState& state, const Operation& op, const CslContext& ctx)
{
    if (op.kind() != OpKind::PowBlock) throw std::invalid_argument("commit_pow_block: wrong operation kind");
    require_quorum(state, op, ctx);
    if (state.epoch.com_block_due) throw CommitError("powBlock committed while a comBlock is due");
    const auto& b = std::get<PowBlock>(op.payload);
    if (!validate_pow_block(state, b)) return log_invalid(state, op);

    state.log.push_back({OpKind::PowBlock, operation_digest(op), false});
    state.pow_chain.push_back(b);
    auto& epoch = state.epoch;
    ++epoch.completed_rounds;
    if (++epoch.round_in_epoch == ctx.committee_size) {
        epoch.round_in_epoch = 0;
        epoch.com_block_due = true;
    }
    return {true, b};
}

CommitResult commit_tx_block(SharedState& state, const Operation& op, const CslContext& ctx)
{
    if (op.kind() != OpKind::TxBlock) throw std::invalid_argument("commit_tx_block: wrong operation kind");
    require_quorum(state, op, ctx);
    const auto& t = std::get<TxBlock>(op.payload);
    if (!validate_tx_block(state, t, ctx)) return log_invalid(state, op);

    state.log.push_back({OpKind::TxBlock, operation_digest(op), false});
    Amount fees = 0;
    for (const auto& tx : t.txs) {
        state.balances[tx.from] -= tx.coins + tx.fee;
        state.balances[tx.to] += tx.coins;
        fees += tx.fee;
    }
    auto signers = signer_seats(state, op, ctx);
    const Amount pool = fees + ctx.block_reward;
    const Amount share = pool / signers.size();
    for (const auto& v : signers) state.balances[v] += share;
    if (const Amount remainder = pool - share * signers.size(); remainder > 0)
        state.balances[t.proposer] += remainder;
    state.tx_signers.push_back(std::move(signers));
    state.tx_chain.push_back(t);
    return {true, std::nullopt};
}

CommitResult commit_com_block(SharedState& state, const Operation& op, const CslContext& ctx)
{
    if (op.kind() != OpKind::ComBlock) throw std::invalid_argument("commit_com_block: wrong operation kind");
    require_quorum(state, op, ctx);
    if (!state.epoch.com_block_due) throw CommitError("comBlock committed before the epoch boundary");
    const auto& c = std::get<ComBlock>(op.payload);
    if (!validate_com_block(state, c, ctx)) return log_invalid(state, op);

    state.log.push_back({OpKind::ComBlock, operation_digest(op), false});
    state.com_chain.push_back(c);
    state.epoch.committee = c.members;
    state.epoch.com_block_due = false;
    ++state.epoch.epoch_index;
    return {true, std::nullopt};
}

CommitResult commit(SharedState& state, const Operation& op, const CslContext& ctx)
{
    switch (op.kind()) {
    case OpKind::PowBlock: return commit_pow_block(state, op, ctx);
    case OpKind::TxBlock: return commit_tx_block(state, op, ctx);
    case OpKind::ComBlock: return commit_com_block(state, op, ctx);
    }
    throw std::invalid_argument("commit: unknown operation kind");
}

std::size_t primary_seat(const SharedState& state, std::uint64_t view_offset)
{
    const auto n = state.epoch.committee.size();
    if (n == 0) throw std::logic_error("select_primary: empty committee");
    return static_cast<std::size_t>((state.epoch.completed_rounds + view_offset) % n);
}

Identity select_primary(const SharedState& state, std::uint64_t view_offset)
{
    return state.epoch.committee[primary_seat(state, view_offset)];
}

ComBlock next_com_block(const SharedState& state, const CslContext& ctx)
{
    return ComBlock{latest_identities(state, ctx.committee_size), state.com_chain.size()};
}

}  // namespace ashwa::csl
