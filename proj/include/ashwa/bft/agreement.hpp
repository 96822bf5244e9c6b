#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ashwa/bft/thresholds.hpp"
#include "ashwa/bft/trace.hpp"
#include "ashwa/core/random.hpp"
#include "ashwa/csl/shared_state.hpp"

namespace ashwa::bft {

struct BftConfig {
    /// How long seats wait for votes after the primary broadcasts.
    double latency_window = 10.0;
    double view_change_timeout = 10.0;
    /// Per-message delivery delay is uniform in [min, max].
    double min_message_latency = 0.05;
    double max_message_latency = 0.5;

    /// All positive, and two message hops fit inside the window.
    void validate() const;
};

struct Vote {
    std::size_t seat = 0;
    Identity voter;
    std::uint64_t view = 0;
    Digest op_digest;
    Signature signature;
    double arrival = 0.0;
};

Vote make_vote(std::size_t seat, const Keypair& keys, std::uint64_t view, const Digest& op_digest,
               double arrival);

/// State of one agreement instance as seen by one seat.
struct AgreementRound {
    csl::Operation operation;
    Identity primary;
    std::size_t primary_seat = 0;
    std::uint64_t view = 0;
    std::vector<Vote> collected;
    double deadline = 0.0;
};

enum class VoteRejection { NotMember, BadSignature, Duplicate, WrongView, WrongOperation, Late };

const char* to_string(VoteRejection r);

struct DroppedVote {
    Vote vote;
    VoteRejection reason;
};

/// Adds every acceptable vote for round.operation: from a committee seat,
/// correctly signed, for this view, before the deadline, at most once per seat.
AgreementRound collect_votes(AgreementRound round, std::span<const Vote> incoming,
                             std::span<const Identity> committee, const KeyDirectory& keys,
                             std::vector<DroppedVote>* dropped = nullptr);

/// A committee seat as the engine sees it.
struct Seat {
    Identity id;
    const Keypair* keys = nullptr;
    /// Follows the message protocol (honest or rational).
    bool correct = true;
    /// Signs every variant a colluding primary sends, received or not.
    bool colluding = false;
    /// Whether the seat signs an operation it received.
    std::function<bool(const csl::Operation&)> signs;
};

enum class PrimaryConduct { Propose, Silent, Equivocate };

/// What the primary sends in one view.
struct PrimaryMessage {
    enum Delivery : std::uint8_t { First, Second, Both, Nothing };

    PrimaryConduct conduct = PrimaryConduct::Propose;
    csl::Operation operation;
    /// Equivocation only: the conflicting operation.
    std::optional<csl::Operation> alternative;
    /// Equivocation only: per seat, which variants it is sent.
    std::vector<Delivery> delivery;
};

enum class Outcome { Committed, Reset, ViewChanged };

const char* to_string(Outcome o);

struct SeatResult {
    bool committed = false;
    Digest op_digest;
    std::size_t votes = 0;
};

struct AgreementOutcome {
    Outcome kind = Outcome::Reset;
    /// Operation committed by the lowest correct seat that committed, with
    /// its certificate attached as signatures.
    std::optional<csl::Operation> committed;
    /// A different operation committed by another correct seat, also certified.
    std::optional<csl::Operation> conflicting;
    std::vector<SeatResult> seats;
    std::size_t messages = 0;
    double finished_at = 0.0;
    std::vector<TraceEvent> events;
    std::vector<DroppedVote> violations;
};

struct AgreementInput {
    std::span<const Seat> seats;
    std::size_t primary_seat = 0;
    std::uint64_t view = 0;
    double start = 0.0;
    PrimaryMessage message;
    /// Extra messages injected into the vote exchange (e.g. forged votes).
    std::vector<Vote> injected;
    bool trace_messages = true;
};

/// Runs one instance: primary broadcast, validate-sign-broadcast, wait for the
/// latency window, commit on supermajority.
AgreementOutcome run_agreement(const AgreementInput& input, const BftConfig& config, const KeyDirectory& keys,
                               Rng& rng);

}  // namespace ashwa::bft
