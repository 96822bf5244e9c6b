#include "ashwa/sim/session.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <ostream>
#include <queue>

#include "ashwa/bft/agreement.hpp"
#include "ashwa/csl/mempool.hpp"
#include "ashwa/csl/operations.hpp"

namespace ashwa::sim {

const char* to_string(ByzantineMode m)
{
    return m == ByzantineMode::Invalid ? "invalid" : "equivocate";
}

ByzantineMode parse_byzantine_mode(std::string_view text)
{
    if (text == "invalid") return ByzantineMode::Invalid;
    if (text == "equivocate") return ByzantineMode::Equivocate;
    throw ConfigError("unknown byzantine mode '" + std::string(text) + "'");
}

void SessionConfig::validate() const
{
    if (committee_size < 4) throw ConfigError("committee_size must be at least 4");
    if (n_honest + n_rational + n_byzantine != committee_size)
        throw ConfigError(fmt::format("n_honest + n_rational + n_byzantine must equal committee_size ({} + {} + {} != {})",
                                      n_honest, n_rational, n_byzantine, committee_size));
    if (n_byzantine == committee_size) throw ConfigError("at least one agent must be non-Byzantine");
    if (duration_rounds < 1) throw ConfigError("duration_rounds must be at least 1");
    if (!alphas.empty()) {
        if (alphas.size() != committee_size) throw ConfigError("alphas must list one share per agent");
        double sum = 0;
        for (double a : alphas) {
            if (!(a >= 0)) throw ConfigError("alphas must be non-negative");
            sum += a;
        }
        if (std::abs(sum - 1.0) > 1e-9) throw ConfigError("alphas must sum to 1");
    }
    if (!kappas.empty() && kappas.size() != committee_size) throw ConfigError("kappas must list one stake per agent");
    for (const auto& k : kappas)
        if (k < 0) throw ConfigError("kappas must be non-negative");
    try {
        game.validate();
        acl.validate();
        latency.validate();
        if (calibration) consensus_round_time(committee_size, *calibration);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (belief_alpha < 0 || belief_alpha > 1 || belief_rho < 0 || belief_rho > 1)
        throw ConfigError("belief_alpha and belief_rho must lie in [0, 1]");
    if (block_bytes == 0 || tx_bytes == 0) throw ConfigError("block_bytes and tx_bytes must be positive");
    if (!(tx_rate >= 0)) throw ConfigError("tx_rate must be non-negative");
    if (accounts < 2) throw ConfigError("accounts must be at least 2");
}

double SessionMetrics::mean_messages_per_round() const
{
    if (messages_per_round.empty()) return 0.0;
    const auto total = std::accumulate(messages_per_round.begin(), messages_per_round.end(), std::uint64_t{0});
    return static_cast<double>(total) / static_cast<double>(messages_per_round.size());
}

namespace {

constexpr Amount kAgentFunds = 1000;
constexpr Amount kAccountFunds = 1'000'000'000;

enum class EventKind { Mined, TxArrival, AgreementStart, AgreementDone };

struct Event {
    double time;
    std::uint64_t seq;
    EventKind kind;

    bool operator>(const Event& o) const { return std::tie(time, seq) > std::tie(o.time, o.seq); }
};

enum class Phase { Tx, Pow };

struct Agent {
    agents::AgentProfile profile;
    Keypair keys;
    std::uint64_t validations = 0;
    std::uint64_t mined = 0;
    Rational invalid_losses = 0;
};

class Session {
public:
    explicit Session(const SessionConfig& config);
    SessionResult run();

private:
    void schedule(double time, EventKind kind) { queue_.push(Event{time, seq_++, kind}); }
    void trace(double time, std::string kind, std::string actor, std::string payload)
    {
        trace_.push_back({time, std::move(kind), std::move(actor), std::move(payload)});
    }

    void on_mined(double now);
    void on_tx_arrival(double now);
    void on_agreement_start(double now);
    void on_agreement_done(double now);

    void mine_next();
    void next_view(double now);
    std::size_t agent_of(const Identity& id) const { return agent_index_.at(id); }
    /// The last epoch is closed by its comBlock before the session stops.
    bool done() const
    {
        return halted_ || (metrics_.committed_pow_blocks >= config_.duration_rounds && !state_.epoch.com_block_due);
    }

    bft::PrimaryMessage byzantine_message(std::size_t primary, csl::OpKind kind);
    std::vector<bft::Seat> make_seats(bool colluding);
    void apply_commit(double now, const bft::AgreementOutcome& out);
    void finish_round();
    void record_committee();

    SessionConfig config_;
    Rng rng_;
    std::vector<Agent> agents_;
    std::map<Identity, std::size_t> agent_index_;
    std::vector<Keypair> accounts_;
    std::vector<std::uint64_t> account_nonce_;
    KeyDirectory keys_;
    csl::CslContext ctx_;
    bft::BftConfig bft_;

    csl::SharedState state_;
    std::map<std::size_t, csl::SharedState> replicas_;
    std::map<Identity, Amount> genesis_balances_;
    std::optional<acl::AccessLayer> acl_;
    acl::ProposalQueue inbox_;
    std::optional<acl::MinedBlock> next_block_;
    std::size_t next_winner_ = 0;
    csl::Mempool mempool_;
    std::map<Digest, std::uint64_t> submitted_round_;

    std::priority_queue<Event, std::vector<Event>, std::greater<>> queue_;
    std::uint64_t seq_ = 0;
    std::vector<bft::TraceEvent> trace_;
    SessionMetrics metrics_;

    Phase phase_ = Phase::Tx;
    std::uint64_t view_ = 0;
    std::uint64_t views_in_phase_ = 0;
    bool csl_waiting_ = false;
    bool halted_ = false;
    double phase_started_ = 0.0;
    double tx_block_seconds_ = 0.0;
    std::uint64_t round_messages_ = 0;
    std::optional<bft::AgreementOutcome> pending_;
    std::size_t pending_primary_ = 0;
    double now_ = 0.0;
};

Session::Session(const SessionConfig& config) : config_(config), rng_(config.seed)
{
    config_.validate();
    const std::size_t n = config_.committee_size;

    std::vector<agents::AgentType> types;
    types.insert(types.end(), config_.n_honest, agents::AgentType::Honest);
    types.insert(types.end(), config_.n_rational, agents::AgentType::Rational);
    types.insert(types.end(), config_.n_byzantine, agents::AgentType::Byzantine);

    const agents::BeliefModel belief{config_.belief_alpha, config_.belief_rho, n};
    for (std::size_t i = 0; i < n; ++i) {
        auto keys = Keypair::from_seed(fmt::format("agent/{}/{}", config_.seed, i));
        const double alpha = config_.alphas.empty() ? 1.0 / static_cast<double>(n) : config_.alphas[i];
        const Rational kappa = config_.kappas.empty() ? config_.game.kappa_r : config_.kappas[i];
        auto profile = agents::make_profile(keys.identity(), types[i], kappa, alpha);
        if (profile.type == agents::AgentType::Rational)
            profile.strategy = agents::best_response(profile, config_.game, belief);
        keys_.add(keys);
        agents_.push_back(Agent{std::move(profile), keys});
    }
    for (std::size_t i = 0; i < n; ++i) agent_index_.emplace(agents_[i].profile.id, i);

    for (std::size_t i = 0; i < config_.accounts; ++i) {
        accounts_.push_back(Keypair::from_seed(fmt::format("account/{}/{}", config_.seed, i)));
        keys_.add(accounts_.back());
    }
    account_nonce_.assign(accounts_.size(), 0);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (config_.shuffle_seats)
        for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng_.below(i)]);
    std::vector<Identity> committee;
    for (auto i : order) committee.push_back(agents_[i].profile.id);

    for (const auto& a : agents_) genesis_balances_[a.profile.id] = kAgentFunds;
    for (const auto& k : accounts_) genesis_balances_[k.identity()] = kAccountFunds;
    state_ = csl::make_genesis_state(committee, genesis_balances_);
    for (std::size_t i = 0; i < n; ++i)
        if (agents_[i].profile.type != agents::AgentType::Byzantine) replicas_.emplace(i, state_);

    ctx_.committee_size = n;
    ctx_.block_reward = config_.block_reward;
    ctx_.max_block_bytes = config_.block_bytes;
    ctx_.keys = &keys_;

    const double window = config_.calibration ? consensus_round_time(n, *config_.calibration)
                                              : consensus_round_time(n, config_.latency);
    bft_.latency_window = window;
    bft_.view_change_timeout = window;
    bft_.max_message_latency = window / 4;
    bft_.min_message_latency = window / 100;

    std::vector<acl::Miner> miners;
    for (const auto& a : agents_) miners.push_back(acl::Miner{a.profile.id, a.profile.alpha, a.profile.id});
    acl_.emplace(std::move(miners), config_.acl, state_.pow_chain);

    for (const auto& b : state_.pow_chain) trace(0.0, "pow-genesis", b.candidate.display(), block_digest(b).short_hex());
    record_committee();
}

void Session::record_committee()
{
    const auto& com = state_.com_chain.back();
    const auto d = block_digest(com).short_hex();
    std::size_t adversary = 0;
    for (const auto& id : state_.epoch.committee) {
        trace(now_, "committee", id.display(), d);
        if (agents_[agent_of(id)].profile.type == agents::AgentType::Byzantine) ++adversary;
    }
    metrics_.max_adversary_seats = std::max(metrics_.max_adversary_seats, adversary);
}

void Session::mine_next()
{
    auto [winner, mined] = acl_->mine(rng_);
    next_winner_ = winner;
    const double at = mined.timestamp;
    next_block_ = std::move(mined);
    schedule(at, EventKind::Mined);
}

SessionResult Session::run()
{
    mine_next();
    if (config_.tx_rate > 0) schedule(rng_.exponential(1.0 / config_.tx_rate), EventKind::TxArrival);
    schedule(0.0, EventKind::AgreementStart);

    while (!queue_.empty() && !done()) {
        const Event ev = queue_.top();
        queue_.pop();
        now_ = ev.time;
        switch (ev.kind) {
        case EventKind::Mined: on_mined(now_); break;
        case EventKind::TxArrival: on_tx_arrival(now_); break;
        case EventKind::AgreementStart: on_agreement_start(now_); break;
        case EventKind::AgreementDone: on_agreement_done(now_); break;
        }
    }

    auto& m = metrics_;
    m.simulated_seconds = now_;
    m.tps = now_ > 0 ? static_cast<double>(m.committed_transactions) / now_ : 0.0;
    m.avg_tx_block_time = m.committed_tx_blocks > 0 ? tx_block_seconds_ / static_cast<double>(m.committed_tx_blocks) : 0.0;

    const std::uint64_t bound = config_.committee_size + config_.liveness_slack;
    for (const auto& [digest, round] : submitted_round_)
        if (m.committed_pow_blocks - round > bound) ++m.late_transactions;

    SessionResult result;
    for (const auto& [agent, replica] : replicas_) result.replica_digests.push_back(csl::state_digest(replica));
    m.replicas_agree = std::adjacent_find(result.replica_digests.begin(), result.replica_digests.end(),
                                          std::not_equal_to<>()) == result.replica_digests.end();
    if (!m.replicas_agree) m.violations.push_back("replica-divergence");

    for (const auto& a : agents_) {
        const auto id = a.profile.id;
        const Rational earned = Rational(static_cast<unsigned long>(state_.balance(id))) -
                                Rational(static_cast<unsigned long>(genesis_balances_.at(id)));
        Rational u = earned - config_.game.validation_cost() * Rational(static_cast<unsigned long>(a.validations)) -
                     config_.game.c_mine * Rational(static_cast<unsigned long>(a.mined)) /
                         Rational(static_cast<unsigned long>(config_.game.n_tx)) -
                     a.invalid_losses;
        m.per_agent_utility.push_back(to_double(u));
        result.agents.push_back(a.profile);
    }

    std::stable_sort(trace_.begin(), trace_.end(),
                     [](const bft::TraceEvent& a, const bft::TraceEvent& b) { return a.time < b.time; });
    result.metrics = std::move(m);
    result.trace = std::move(trace_);
    result.final_state = std::move(state_);
    return result;
}

void Session::on_mined(double now)
{
    const auto& block = next_block_->block;
    ++agents_[next_winner_].mined;
    trace(now, "mine", agents_[next_winner_].profile.id.display(), block_digest(block).short_hex());
    for (const auto& b : acl_->propose_final_blocks(inbox_))
        trace(now, "propose-block", b.candidate.display(), block_digest(b).short_hex());
    if (csl_waiting_ && !inbox_.empty()) {
        csl_waiting_ = false;
        schedule(now, EventKind::AgreementStart);
    }
    mine_next();
}

void Session::on_tx_arrival(double now)
{
    const auto from = rng_.below(accounts_.size());
    auto to = rng_.below(accounts_.size() - 1);
    if (to >= from) ++to;
    const Amount coins = 1 + rng_.below(10);
    auto tx = make_transaction(accounts_[from], accounts_[to].identity(), coins, config_.fee, account_nonce_[from]++);
    if (mempool_.submit(tx)) {
        submitted_round_.emplace(tx_digest(tx), metrics_.committed_pow_blocks);
        ++metrics_.submitted_transactions;
    }
    schedule(now + rng_.exponential(1.0 / config_.tx_rate), EventKind::TxArrival);
}

std::vector<bft::Seat> Session::make_seats(bool colluding)
{
    std::vector<bft::Seat> seats;
    for (const auto& id : state_.epoch.committee) {
        const auto idx = agent_of(id);
        auto& agent = agents_[idx];
        bft::Seat seat;
        seat.id = id;
        seat.keys = &agent.keys;
        seat.correct = agent.profile.type != agents::AgentType::Byzantine;
        seat.colluding = colluding && !seat.correct;
        const auto& view = seat.correct ? replicas_.at(idx) : state_;
        seat.signs = [this, &agent, &view](const csl::Operation& op) {
            if (agents::validates(agent.profile.strategy)) ++agent.validations;
            return agents::signs(agents::act_on_proposal(agent.profile, op, view, ctx_));
        };
        seats.push_back(std::move(seat));
    }
    return seats;
}

bft::PrimaryMessage Session::byzantine_message(std::size_t primary, csl::OpKind kind)
{
    const auto& byz = agents_[primary];
    bft::PrimaryMessage msg;
    // Double-spend pair, offered in either phase.
    const bool equivocates = config_.byzantine_mode == ByzantineMode::Equivocate && kind != csl::OpKind::ComBlock &&
                             state_.balance(byz.profile.id) > 0;
    if (equivocates) {
        const Amount funds = state_.balance(byz.profile.id);
        const auto nonce = rng_.next_u64();
        auto a = make_transaction(byz.keys, accounts_[0].identity(), funds, 0, nonce);
        auto b = make_transaction(byz.keys, accounts_[1].identity(), funds, 0, nonce);
        msg.conduct = bft::PrimaryConduct::Equivocate;
        msg.operation.payload = make_tx_block({a}, byz.profile.id);
        msg.alternative = csl::Operation{make_tx_block({b}, byz.profile.id), {}};
        std::size_t correct = 0;
        for (const auto& id : state_.epoch.committee) {
            if (agents_[agent_of(id)].profile.type == agents::AgentType::Byzantine) {
                msg.delivery.push_back(bft::PrimaryMessage::Both);
            } else {
                msg.delivery.push_back(correct++ % 2 == 0 ? bft::PrimaryMessage::First
                                                          : bft::PrimaryMessage::Second);
            }
        }
        return msg;
    }
    switch (kind) {
    case csl::OpKind::ComBlock: {
        ComBlock c = csl::next_com_block(state_, ctx_);
        std::fill(c.members.begin(), c.members.end(), byz.profile.id);
        msg.operation.payload = c;
        break;
    }
    case csl::OpKind::PowBlock: {
        PowBlock b = inbox_.front();
        b.parent = Digest{};
        b.candidate = byz.profile.id;
        msg.operation.payload = b;
        break;
    }
    case csl::OpKind::TxBlock: {
        const Amount funds = state_.balance(byz.profile.id);
        auto overdraft = make_transaction(byz.keys, accounts_[0].identity(), funds + 1, 0, rng_.next_u64());
        msg.operation.payload = make_tx_block({overdraft}, byz.profile.id);
        break;
    }
    }
    return msg;
}

void Session::on_agreement_start(double now)
{
    if (pending_ || halted_) return;

    csl::OpKind kind;
    if (state_.epoch.com_block_due) {
        kind = csl::OpKind::ComBlock;
    } else {
        const auto primary = agent_of(csl::select_primary(state_, view_));
        const bool byzantine = agents_[primary].profile.type == agents::AgentType::Byzantine;
        if (phase_ == Phase::Tx && mempool_.empty() && !byzantine) {
            phase_ = Phase::Pow;
            phase_started_ = now;
        }
        kind = phase_ == Phase::Tx ? csl::OpKind::TxBlock : csl::OpKind::PowBlock;
    }
    if (kind == csl::OpKind::PowBlock) {
        inbox_.discard_below(state_.pow_tip().height + 1);
        if (inbox_.empty()) {
            csl_waiting_ = true;
            return;
        }
    }

    const auto primary_seat = csl::primary_seat(state_, view_);
    const auto primary = agent_of(state_.epoch.committee[primary_seat]);
    const auto& primary_agent = agents_[primary];

    bft::PrimaryMessage msg;
    if (primary_agent.profile.type == agents::AgentType::Byzantine) {
        msg = byzantine_message(primary, kind);
    } else if (kind == csl::OpKind::ComBlock) {
        msg.operation.payload = csl::next_com_block(state_, ctx_);
    } else if (kind == csl::OpKind::PowBlock) {
        msg.operation.payload = inbox_.front();
    } else {
        msg.operation.payload = make_tx_block(mempool_.next_batch(config_.block_bytes), primary_agent.profile.id);
    }

    const auto seats = make_seats(msg.conduct == bft::PrimaryConduct::Equivocate);
    bft::AgreementInput input;
    input.seats = seats;
    input.primary_seat = primary_seat;
    input.view = view_;
    input.start = now;
    input.message = std::move(msg);
    input.trace_messages = config_.trace_messages;
    auto out = bft::run_agreement(input, bft_, keys_, rng_);

    round_messages_ += out.messages;
    for (auto& e : out.events) trace_.push_back(std::move(e));
    out.events.clear();
    for (const auto& v : out.violations)
        metrics_.violations.push_back(fmt::format("{} from {}", bft::to_string(v.reason), v.vote.voter.display()));

    const double finished = out.finished_at;
    pending_primary_ = primary;
    pending_ = std::move(out);
    schedule(finished, EventKind::AgreementDone);
}

void Session::next_view(double now)
{
    ++view_;
    ++metrics_.view_changes;
    if (++views_in_phase_ > 3 * config_.committee_size) {
        metrics_.liveness_lost = true;
        metrics_.violations.push_back("liveness-lost");
        trace(now, "liveness-lost", "-", "-");
        halted_ = true;
        return;
    }
    schedule(now, EventKind::AgreementStart);
}

void Session::on_agreement_done(double now)
{
    auto out = std::move(*pending_);
    pending_.reset();
    switch (out.kind) {
    case bft::Outcome::ViewChanged: next_view(now); return;
    case bft::Outcome::Reset:
        ++metrics_.resets;
        next_view(now);
        return;
    case bft::Outcome::Committed: apply_commit(now, out); return;
    }
}

void Session::apply_commit(double now, const bft::AgreementOutcome& out)
{
    const auto& op = *out.committed;
    const auto digest = csl::operation_digest(op);
    const auto& primary = agents_[pending_primary_].profile.id;

    if (out.conflicting) {
        ++metrics_.conflicting_commits;
        metrics_.violations.push_back("conflicting-commit");
        trace(now, "conflicting-commit", primary.display(), csl::operation_digest(*out.conflicting).short_hex());
    }

    // Each correct replica applies what its own seat committed, or the
    // certified operation if it did not commit itself.
    for (auto& [idx, replica] : replicas_) {
        const csl::Operation* chosen = &op;
        if (out.conflicting) {
            const auto conflicting = csl::operation_digest(*out.conflicting);
            const auto& committee = state_.epoch.committee;
            for (std::size_t s = 0; s < committee.size(); ++s) {
                if (committee[s] == agents_[idx].profile.id && out.seats[s].committed &&
                    out.seats[s].op_digest == conflicting) {
                    chosen = &*out.conflicting;
                    break;
                }
            }
        }
        csl::commit(replica, *chosen, ctx_);
    }
    const auto result = csl::commit(state_, op, ctx_);

    if (out.conflicting) {
        halted_ = true;
        return;
    }

    if (!result.valid) {
        ++metrics_.invalid_blocks_committed;
        metrics_.violations.push_back(fmt::format("invalid-commit {}", csl::to_string(op.kind())));
        trace(now, "invalid-commit", primary.display(), digest.short_hex());
        for (const auto& sig : op.signatures) agents_[agent_of(sig.signer)].invalid_losses += agents_[agent_of(sig.signer)].profile.kappa;
        next_view(now);
        return;
    }

    views_in_phase_ = 0;
    switch (op.kind()) {
    case csl::OpKind::TxBlock: {
        const auto& block = std::get<TxBlock>(op.payload);
        mempool_.remove_committed(block);
        for (const auto& tx : block.txs) {
            const auto it = submitted_round_.find(tx_digest(tx));
            if (it == submitted_round_.end()) continue;
            const auto delay = metrics_.committed_pow_blocks - it->second;
            metrics_.max_tx_delay_rounds = std::max(metrics_.max_tx_delay_rounds, delay);
            if (delay > config_.committee_size + config_.liveness_slack) ++metrics_.late_transactions;
            submitted_round_.erase(it);
        }
        ++metrics_.committed_tx_blocks;
        metrics_.committed_transactions += block.txs.size();
        tx_block_seconds_ += now - phase_started_;
        trace(now, "tx-commit", block.proposer.display(), digest.short_hex());
        phase_ = Phase::Pow;
        phase_started_ = now;
        break;
    }
    case csl::OpKind::PowBlock: {
        const auto& block = *result.commit_block;
        acl_->on_commit(block);
        inbox_.discard_below(block.height + 1);
        ++metrics_.committed_pow_blocks;
        trace(now, "pow-commit", block.candidate.display(), block_digest(block).short_hex());
        finish_round();
        break;
    }
    case csl::OpKind::ComBlock: {
        ++metrics_.committed_com_blocks;
        trace(now, "com-commit", primary.display(), block_digest(std::get<ComBlock>(op.payload)).short_hex());
        record_committee();
        view_ = 0;
        phase_ = Phase::Tx;
        phase_started_ = now;
        break;
    }
    }
    schedule(now, EventKind::AgreementStart);
}

void Session::finish_round()
{
    metrics_.messages_per_round.push_back(round_messages_);
    round_messages_ = 0;
    view_ = 0;
    phase_ = Phase::Tx;
    phase_started_ = now_;
}

}  // namespace

SessionResult run_session(const SessionConfig& config)
{
    Session session(config);
    return session.run();
}

std::size_t rotation_mismatches(const std::vector<bft::TraceEvent>& trace, std::size_t committee_size)
{
    std::vector<std::string> chain;
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const auto& e = trace[i];
        if (e.kind == "pow-genesis" || e.kind == "pow-commit") {
            chain.push_back(e.actor);
            continue;
        }
        if (e.kind != "committee") continue;
        // A block of committee_size consecutive announcements.
        std::vector<std::string> members;
        while (i < trace.size() && trace[i].kind == "committee") members.push_back(trace[i++].actor);
        --i;
        if (chain.size() < committee_size || members.size() != committee_size ||
            !std::equal(members.begin(), members.end(), chain.end() - static_cast<std::ptrdiff_t>(committee_size)))
            ++mismatches;
    }
    return mismatches;
}

std::size_t epochs_in_trace(const std::vector<bft::TraceEvent>& trace)
{
    return static_cast<std::size_t>(
        std::count_if(trace.begin(), trace.end(), [](const bft::TraceEvent& e) { return e.kind == "com-commit"; }));
}

void write_metrics_header(std::ostream& out)
{
    out << "# schema: simulate/1\n"
        << "seed,committee_size,n_honest,n_rational,n_byzantine,rounds,committed_pow_blocks,committed_tx_blocks,"
           "committed_com_blocks,committed_transactions,submitted_transactions,invalid_blocks_committed,"
           "conflicting_commits,view_changes,mean_messages_per_round,avg_tx_block_time,tps,simulated_seconds,"
           "max_tx_delay_rounds,late_transactions,liveness_lost,replicas_agree\n";
}

void write_metrics_row(std::ostream& out, const SessionConfig& c, const SessionMetrics& m)
{
    out << fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{:.6f},{:.6f},{:.6f},{:.6f},{},{},{},{}\n", c.seed,
                       c.committee_size, c.n_honest, c.n_rational, c.n_byzantine, c.duration_rounds,
                       m.committed_pow_blocks, m.committed_tx_blocks, m.committed_com_blocks,
                       m.committed_transactions, m.submitted_transactions, m.invalid_blocks_committed,
                       m.conflicting_commits, m.view_changes, m.mean_messages_per_round(), m.avg_tx_block_time,
                       m.tps, m.simulated_seconds, m.max_tx_delay_rounds, m.late_transactions,
                       m.liveness_lost ? 1 : 0, m.replicas_agree ? 1 : 0);
}

}  // namespace ashwa::sim
