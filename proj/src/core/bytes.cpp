#include "ashwa/core/bytes.hpp"

#include <algorithm>

namespace ashwa {

std::string to_hex(ByteView data)
{
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 2);
    for (auto b : data) {
        out.push_back(kDigits[b >> 4]);
        out.push_back(kDigits[b & 0x0f]);
    }
    return out;
}

std::string Digest::hex() const { return to_hex(view()); }

std::string Digest::short_hex() const { return to_hex(view().first(8)); }

bool Digest::is_zero() const
{
    return std::all_of(bytes.begin(), bytes.end(), [](auto b) { return b == 0; });
}

}  // namespace ashwa
