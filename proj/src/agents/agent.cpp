#include "ashwa/agents/agent.hpp"

#include "ashwa/csl/operations.hpp"

namespace ashwa::agents {

const char* to_string(AgentType t)
{
    switch (t) {
    case AgentType::Honest: return "honest";
    case AgentType::Rational: return "rational";
    case AgentType::Byzantine: return "byzantine";
    }
    return "unknown";
}

const char* to_string(Strategy s)
{
    switch (s) {
    case Strategy::S1: return "s1";
    case Strategy::S2: return "s2";
    case Strategy::S3: return "s3";
    }
    return "unknown";
}

const char* to_string(VoteDecision d)
{
    switch (d) {
    case VoteDecision::SignValid: return "sign-valid";
    case VoteDecision::SignWithoutCheck: return "sign-without-check";
    case VoteDecision::SignInvalidOnly: return "sign-invalid-only";
    case VoteDecision::Reject: return "reject";
    }
    return "unknown";
}

AgentType parse_agent_type(std::string_view text)
{
    if (text == "honest") return AgentType::Honest;
    if (text == "rational") return AgentType::Rational;
    if (text == "byzantine") return AgentType::Byzantine;
    throw std::invalid_argument("unknown agent type '" + std::string(text) + "'");
}

void AgentProfile::validate() const
{
    if (kappa < 0) throw std::invalid_argument("agent kappa must be non-negative");
    const bool ok = (type == AgentType::Honest && strategy == Strategy::S2) ||
                    (type == AgentType::Byzantine && strategy == Strategy::S3) ||
                    (type == AgentType::Rational && strategy != Strategy::S3);
    if (!ok)
        throw std::invalid_argument(std::string("strategy ") + to_string(strategy) + " not allowed for a " +
                                    to_string(type) + " agent");
}

AgentProfile make_profile(const Identity& id, AgentType type, Rational kappa, double alpha)
{
    AgentProfile p;
    p.id = id;
    p.type = type;
    p.strategy = type == AgentType::Byzantine ? Strategy::S3 : Strategy::S2;
    p.kappa = std::move(kappa);
    p.alpha = alpha;
    p.validate();
    return p;
}

VoteDecision act_on_proposal(const AgentProfile& profile, const csl::Operation& op, const csl::SharedState& view,
                             const csl::CslContext& ctx)
{
    switch (profile.strategy) {
    case Strategy::S1: return VoteDecision::SignWithoutCheck;
    case Strategy::S2: return csl::validate(view, op, ctx) ? VoteDecision::SignValid : VoteDecision::Reject;
    case Strategy::S3: return csl::validate(view, op, ctx) ? VoteDecision::Reject : VoteDecision::SignInvalidOnly;
    }
    return VoteDecision::Reject;
}

}  // namespace ashwa::agents
