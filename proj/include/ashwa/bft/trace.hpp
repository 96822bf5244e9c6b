#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ashwa::bft {

/// One line of the event log: time, kind, actor, payload digest.
struct TraceEvent {
    double time = 0.0;
    std::string kind;
    std::string actor;
    std::string payload;

    bool operator==(const TraceEvent&) const = default;
};

std::string format_event(const TraceEvent& e);
/// Parses a line written by format_event; throws std::invalid_argument.
TraceEvent parse_event(const std::string& line);

void write_trace(std::ostream& out, const std::vector<TraceEvent>& events);

}  // namespace ashwa::bft
