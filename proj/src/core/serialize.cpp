#include "ashwa/core/serialize.hpp"

#include <limits>
#include <stdexcept>

namespace ashwa {

void Encoder::length(std::uint32_t n)
{
    for (int i = 0; i < 4; ++i) out_.push_back(static_cast<std::uint8_t>(n >> (8 * i)));
}

Encoder& Encoder::tag(std::string_view name) { return bytes(as_bytes(name)); }

Encoder& Encoder::u64(std::uint64_t v)
{
    length(8);
    for (int i = 0; i < 8; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    return *this;
}

Encoder& Encoder::bytes(ByteView data)
{
    if (data.size() > std::numeric_limits<std::uint32_t>::max())
        throw std::length_error("field too large for canonical encoding");
    length(static_cast<std::uint32_t>(data.size()));
    out_.insert(out_.end(), data.begin(), data.end());
    return *this;
}

}  // namespace ashwa
