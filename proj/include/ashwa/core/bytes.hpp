#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ashwa {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

/// Currency amount in indivisible units.
using Amount = std::uint64_t;

inline constexpr std::size_t kDigestWidth = 32;

/// Fixed-width digest. Also used as the value type of simulated keys and signatures.
struct Digest {
    std::array<std::uint8_t, kDigestWidth> bytes{};

    static Digest zero() { return Digest{}; }

    ByteView view() const { return {bytes.data(), bytes.size()}; }
    std::string hex() const;
    /// First eight bytes as hex; used as a short tag in traces and CSVs.
    std::string short_hex() const;
    bool is_zero() const;

    auto operator<=>(const Digest&) const = default;
};

std::string to_hex(ByteView data);

inline ByteView as_bytes(std::string_view s)
{
    return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

}  // namespace ashwa
