#include "ashwa/bft/agreement.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>

namespace ashwa::bft {

void BftConfig::validate() const
{
    if (!(latency_window > 0) || !(view_change_timeout > 0) || !(min_message_latency > 0) ||
        !(max_message_latency > 0))
        throw std::invalid_argument("BftConfig: all timings must be positive");
    if (min_message_latency > max_message_latency)
        throw std::invalid_argument("BftConfig: min_message_latency exceeds max_message_latency");
    if (2 * max_message_latency >= latency_window)
        throw std::invalid_argument("BftConfig: latency_window must exceed two message hops");
}

Vote make_vote(std::size_t seat, const Keypair& keys, std::uint64_t view, const Digest& op_digest,
               double arrival)
{
    return Vote{seat, keys.identity(), view, op_digest, keys.sign(csl::vote_payload(op_digest)), arrival};
}

const char* to_string(VoteRejection r)
{
    switch (r) {
    case VoteRejection::NotMember: return "not-member";
    case VoteRejection::BadSignature: return "bad-signature";
    case VoteRejection::Duplicate: return "duplicate-vote";
    case VoteRejection::WrongView: return "wrong-view";
    case VoteRejection::WrongOperation: return "wrong-operation";
    case VoteRejection::Late: return "late-vote";
    }
    return "unknown";
}

const char* to_string(Outcome o)
{
    switch (o) {
    case Outcome::Committed: return "committed";
    case Outcome::Reset: return "reset";
    case Outcome::ViewChanged: return "view-changed";
    }
    return "unknown";
}

AgreementRound collect_votes(AgreementRound round, std::span<const Vote> incoming,
                             std::span<const Identity> committee, const KeyDirectory& keys,
                             std::vector<DroppedVote>* dropped)
{
    const auto op_digest = csl::operation_digest(round.operation);
    const auto payload = csl::vote_payload(op_digest);
    std::set<std::size_t> seen;
    for (const auto& v : round.collected) seen.insert(v.seat);
    auto drop = [&](const Vote& v, VoteRejection why) {
        if (dropped) dropped->push_back({v, why});
    };
    for (const auto& v : incoming) {
        if (v.seat >= committee.size() || committee[v.seat] != v.voter) drop(v, VoteRejection::NotMember);
        else if (v.view != round.view) drop(v, VoteRejection::WrongView);
        else if (v.op_digest != op_digest) drop(v, VoteRejection::WrongOperation);
        else if (v.arrival > round.deadline) drop(v, VoteRejection::Late);
        else if (!keys.verify(v.voter, payload, v.signature)) drop(v, VoteRejection::BadSignature);
        else if (!seen.insert(v.seat).second) drop(v, VoteRejection::Duplicate);
        else round.collected.push_back(v);
    }
    return round;
}

namespace {

bool is_violation(VoteRejection r)
{
    return r != VoteRejection::WrongOperation && r != VoteRejection::Late;
}

}  // namespace

AgreementOutcome run_agreement(const AgreementInput& input, const BftConfig& config, const KeyDirectory& keys,
                               Rng& rng)
{
    config.validate();
    const auto& seats = input.seats;
    const std::size_t n = seats.size();
    if (n == 0 || input.primary_seat >= n) throw std::invalid_argument("run_agreement: bad committee or primary");
    const auto& msg = input.message;

    std::vector<Identity> committee;
    for (const auto& s : seats) committee.push_back(s.id);
    const std::size_t threshold = supermajority_threshold(n);
    const double t0 = input.start;
    const double deadline = t0 + config.latency_window;
    const auto& primary = seats[input.primary_seat];

    AgreementOutcome out;
    out.seats.resize(n);
    auto latency = [&] { return rng.uniform(config.min_message_latency, config.max_message_latency); };
    auto event = [&](double time, std::string kind, const Identity& actor, const Digest& payload) {
        out.events.push_back({time, std::move(kind), actor.display(), payload.short_hex()});
    };
    auto view_change = [&](const Identity& observer) {
        // Each correct seat broadcasts its view-change request.
        for (std::size_t s = 0; s < n; ++s)
            if (seats[s].correct && s != input.primary_seat) out.messages += n - 1;
        out.kind = Outcome::ViewChanged;
        out.finished_at = t0 + config.view_change_timeout;
        event(out.finished_at, "view-change", observer, Digest::zero());
        return out;
    };

    if (msg.conduct == PrimaryConduct::Silent) return view_change(primary.id);

    std::vector<csl::Operation> variants{msg.operation};
    if (msg.conduct == PrimaryConduct::Equivocate) {
        if (!msg.alternative) throw std::invalid_argument("run_agreement: equivocation needs an alternative");
        if (msg.delivery.size() != n) throw std::invalid_argument("run_agreement: delivery plan size mismatch");
        variants.push_back(*msg.alternative);
    }
    std::vector<Digest> digests;
    for (const auto& v : variants) digests.push_back(csl::operation_digest(v));

    // received[s][v]: arrival time of variant v at seat s, negative if never sent.
    std::vector<std::vector<double>> received(n, std::vector<double>(variants.size(), -1.0));
    for (std::size_t v = 0; v < variants.size(); ++v) {
        received[input.primary_seat][v] = t0;
        event(t0, "propose", primary.id, digests[v]);
    }
    for (std::size_t s = 0; s < n; ++s) {
        if (s == input.primary_seat) continue;
        auto delivery = msg.conduct == PrimaryConduct::Propose ? PrimaryMessage::First : msg.delivery[s];
        for (std::size_t v = 0; v < variants.size(); ++v) {
            const bool send = delivery == PrimaryMessage::Both || (v == 0 && delivery == PrimaryMessage::First) ||
                              (v == 1 && delivery == PrimaryMessage::Second);
            if (!send) continue;
            ++out.messages;
            received[s][v] = t0 + latency();
            if (input.trace_messages) event(received[s][v], "deliver", seats[s].id, digests[v]);
        }
    }

    for (std::size_t s = 0; s < n; ++s) {
        if (s == input.primary_seat || !seats[s].correct) continue;
        if (std::count_if(received[s].begin(), received[s].end(), [](double t) { return t >= 0; }) > 1)
            return view_change(seats[s].id);
    }

    // Vote exchange.
    std::vector<std::vector<Vote>> inbox(n);
    for (std::size_t s = 0; s < n; ++s) {
        const auto& seat = seats[s];
        double first_seen = -1.0;
        for (double t : received[s])
            if (t >= 0 && (first_seen < 0 || t < first_seen)) first_seen = t;
        for (std::size_t v = 0; v < variants.size(); ++v) {
            const bool holds = received[s][v] >= 0;
            double at;
            if (holds) {
                if (!seat.colluding && !(seat.signs && seat.signs(variants[v]))) continue;
                at = received[s][v];
            } else if (seat.colluding) {
                at = first_seen >= 0 ? first_seen : t0 + config.max_message_latency;
            } else {
                continue;
            }
            if (!seat.keys) throw std::invalid_argument("run_agreement: seat without keys");
            auto vote = make_vote(s, *seat.keys, input.view, digests[v], at);
            inbox[s].push_back(vote);
            if (input.trace_messages) event(at, "vote", seat.id, digests[v]);
            for (std::size_t r = 0; r < n; ++r) {
                if (r == s) continue;
                ++out.messages;
                vote.arrival = at + latency();
                inbox[r].push_back(vote);
            }
        }
    }
    for (auto& box : inbox) box.insert(box.end(), input.injected.begin(), input.injected.end());

    std::set<std::tuple<std::size_t, Identity, int>> reported;
    for (std::size_t r = 0; r < n; ++r) {
        if (!seats[r].correct) continue;
        std::optional<std::size_t> held;
        for (std::size_t v = 0; v < variants.size(); ++v)
            if (received[r][v] >= 0) held = v;
        if (!held) continue;

        AgreementRound round{variants[*held], primary.id, input.primary_seat, input.view, {}, deadline};
        std::vector<DroppedVote> dropped;
        round = collect_votes(std::move(round), inbox[r], committee, keys, &dropped);
        for (const auto& d : dropped) {
            if (!is_violation(d.reason)) continue;
            if (reported.emplace(d.vote.seat, d.vote.voter, static_cast<int>(d.reason)).second) {
                out.violations.push_back(d);
                event(d.vote.arrival, to_string(d.reason), d.vote.voter, d.vote.op_digest);
            }
        }

        auto& result = out.seats[r];
        result.op_digest = digests[*held];
        result.votes = round.collected.size();
        result.committed = round.collected.size() >= threshold;
        if (!result.committed) continue;
        event(deadline, "commit", seats[r].id, digests[*held]);

        auto certify = [&] {
            csl::Operation certified = variants[*held];
            std::set<Identity> signers;
            std::sort(round.collected.begin(), round.collected.end(),
                      [](const Vote& a, const Vote& b) { return a.seat < b.seat; });
            for (const auto& v : round.collected)
                if (signers.insert(v.voter).second) certified.signatures.push_back({v.voter, v.signature});
            return certified;
        };
        if (!out.committed) {
            out.committed = certify();
        } else if (!out.conflicting && csl::operation_digest(*out.committed) != digests[*held]) {
            out.conflicting = certify();
        }
    }

    out.finished_at = deadline;
    if (out.committed) {
        out.kind = Outcome::Committed;
    } else {
        out.kind = Outcome::Reset;
        event(deadline, "reset", primary.id, digests.front());
    }
    return out;
}

}  // namespace ashwa::bft
