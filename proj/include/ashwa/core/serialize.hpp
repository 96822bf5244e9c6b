#pragma once

#include <cstdint>
#include <string_view>

#include "ashwa/core/bytes.hpp"

namespace ashwa {

/// Canonical encoder. Every field is written as a little-endian u32 length
/// followed by its bytes; integers are always 8 bytes wide.
class Encoder {
public:
    Encoder& tag(std::string_view name);
    Encoder& u64(std::uint64_t v);
    Encoder& bytes(ByteView data);
    Encoder& digest(const Digest& d) { return bytes(d.view()); }

    const Bytes& data() const& { return out_; }
    Bytes take() && { return std::move(out_); }

private:
    void length(std::uint32_t n);

    Bytes out_;
};

}  // namespace ashwa
