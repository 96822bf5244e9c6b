#pragma once

#include <optional>
#include <stdexcept>

#include "ashwa/core/identity.hpp"
#include "ashwa/core/rational.hpp"
#include "ashwa/csl/shared_state.hpp"

namespace ashwa::agents {

enum class AgentType { Honest, Rational, Byzantine };

enum class Strategy {
    /// Sign without validating.
    S1,
    /// Validate, then sign only valid operations.
    S2,
    /// Sign and propose only invalid operations.
    S3,
};

const char* to_string(AgentType t);
const char* to_string(Strategy s);
AgentType parse_agent_type(std::string_view text);

struct AgentProfile {
    Identity id;
    AgentType type = AgentType::Honest;
    Strategy strategy = Strategy::S2;
    /// Stake lost when a signed operation turns out invalid.
    Rational kappa = 0;
    /// Share of ACL hash power.
    double alpha = 0.0;
    /// Per-agent reward; the game default applies when unset.
    std::optional<Rational> reward;

    /// Throws std::invalid_argument if the strategy is not allowed for the type.
    void validate() const;
};

/// Profile with the type's fixed strategy (rational agents start at S2).
AgentProfile make_profile(const Identity& id, AgentType type, Rational kappa = 0, double alpha = 0.0);

enum class VoteDecision { SignValid, SignWithoutCheck, SignInvalidOnly, Reject };

const char* to_string(VoteDecision d);
inline bool signs(VoteDecision d) { return d != VoteDecision::Reject; }
inline bool validates(Strategy s) { return s != Strategy::S1; }

/// What a committee seat does with a proposed operation.
VoteDecision act_on_proposal(const AgentProfile& profile, const csl::Operation& op, const csl::SharedState& view,
                             const csl::CslContext& ctx);

}  // namespace ashwa::agents
