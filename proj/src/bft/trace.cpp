#include "ashwa/bft/trace.hpp"

#include <fmt/format.h>

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ashwa::bft {

std::string format_event(const TraceEvent& e)
{
    return fmt::format("{:.6f} {} {} {}", e.time, e.kind, e.actor.empty() ? "-" : e.actor,
                       e.payload.empty() ? "-" : e.payload);
}

TraceEvent parse_event(const std::string& line)
{
    std::istringstream in(line);
    TraceEvent e;
    std::string extra;
    if (!(in >> e.time >> e.kind >> e.actor >> e.payload) || (in >> extra))
        throw std::invalid_argument("malformed trace line: '" + line + "'");
    if (e.actor == "-") e.actor.clear();
    if (e.payload == "-") e.payload.clear();
    return e;
}

void write_trace(std::ostream& out, const std::vector<TraceEvent>& events)
{
    for (const auto& e : events) out << format_event(e) << '\n';
}

}  // namespace ashwa::bft
