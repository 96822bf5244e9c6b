#include "ashwa/csl/shared_state.hpp"

#include <fmt/format.h>

#include "ashwa/core/digest.hpp"
#include "ashwa/core/serialize.hpp"

namespace ashwa::csl {

const char* to_string(OpKind kind)
{
    switch (kind) {
    case OpKind::PowBlock: return "powBlock";
    case OpKind::TxBlock: return "txBlock";
    case OpKind::ComBlock: return "comBlock";
    }
    return "unknown";
}

Digest operation_digest(const Operation& op)
{
    Encoder e;
    e.tag("op").u64(static_cast<std::uint64_t>(op.kind()));
    std::visit([&](const auto& block) { e.bytes(encode(block)); }, op.payload);
    return digest(e.data());
}

Bytes vote_payload(const Digest& op_digest)
{
    Encoder e;
    e.tag("vote").digest(op_digest);
    return std::move(e).take();
}

Amount SharedState::balance(const Identity& id) const
{
    auto it = balances.find(id);
    return it == balances.end() ? 0 : it->second;
}

Amount SharedState::total_supply() const
{
    Amount total = 0;
    for (const auto& [_, amount] : balances) total += amount;
    return total;
}

std::vector<PowBlock> make_genesis_pow_chain(std::span<const Identity> committee)
{
    if (committee.empty()) throw std::invalid_argument("genesis committee is empty");
    std::vector<PowBlock> chain;
    chain.push_back(make_genesis_block(committee.front()));
    for (std::size_t i = 1; i < committee.size(); ++i) {
        PowBlock b;
        b.parent = block_digest(chain.back());
        b.candidate = committee[i];
        b.height = i;
        chain.push_back(b);
    }
    return chain;
}

SharedState make_genesis_state(std::span<const Identity> committee,
                               const std::map<Identity, Amount>& balances)
{
    SharedState state;
    state.pow_chain = make_genesis_pow_chain(committee);
    state.com_chain.push_back(ComBlock{{committee.begin(), committee.end()}, 0});
    state.balances = balances;
    state.epoch.committee.assign(committee.begin(), committee.end());
    return state;
}

std::vector<Identity> latest_identities(const SharedState& state, std::size_t n)
{
    if (n > state.pow_chain.size()) throw std::out_of_range("latest_identities: chain shorter than n");
    std::vector<Identity> ids;
    ids.reserve(n);
    for (auto it = state.pow_chain.end() - static_cast<std::ptrdiff_t>(n); it != state.pow_chain.end(); ++it)
        ids.push_back(it->candidate);
    return ids;
}

namespace {

template <typename Range, typename DigestOf>
Digest chain_digest(const Range& items, DigestOf&& digest_of)
{
    Encoder e;
    e.tag("chain").u64(items.size());
    for (const auto& item : items) e.digest(digest_of(item));
    return digest(e.data());
}

}  // namespace

std::string snapshot(const SharedState& state)
{
    std::string out;
    for (const auto& [id, amount] : state.balances) out += fmt::format("balance {} {}\n", id.key().hex(), amount);
    auto line = [&](const char* name, std::size_t count, const Digest& d) {
        out += fmt::format("chain {} {} {}\n", name, count, d.hex());
    };
    line("pow", state.pow_chain.size(),
         chain_digest(state.pow_chain, [](const PowBlock& b) { return block_digest(b); }));
    line("com", state.com_chain.size(),
         chain_digest(state.com_chain, [](const ComBlock& c) { return block_digest(c); }));
    line("tx", state.tx_chain.size(),
         chain_digest(state.tx_chain, [](const TxBlock& t) { return block_digest(t); }));
    line("signers", state.tx_signers.size(), chain_digest(state.tx_signers, [](const std::vector<Identity>& ids) {
             Encoder e;
             for (const auto& id : ids) e.digest(id.key());
             return digest(e.data());
         }));
    line("log", state.log.size(), chain_digest(state.log, [](const OpLogEntry& entry) {
             Encoder e;
             e.u64(static_cast<std::uint64_t>(entry.kind)).digest(entry.op_digest).u64(entry.invalid ? 1 : 0);
             return digest(e.data());
         }));
    out += fmt::format("epoch {} {} {} {}\n", state.epoch.epoch_index, state.epoch.round_in_epoch,
                       state.epoch.completed_rounds, state.epoch.com_block_due ? 1 : 0);
    out += "committee";
    for (const auto& id : state.epoch.committee) out += " " + id.key().hex();
    out += "\n";
    return out;
}

Digest state_digest(const SharedState& state) { return digest(snapshot(state)); }

}  // namespace ashwa::csl
