#pragma once

#include "ashwa/core/bytes.hpp"

namespace ashwa {

/// SHA-256 of the input.
Digest digest(ByteView data);
Digest digest(std::string_view data);

/// Digest over the concatenation of several parts; no framing is added.
Digest digest_concat(std::initializer_list<ByteView> parts);

/// Number of leading zero bits, in [0, 256].
unsigned leading_zero_bits(const Digest& d);

}  // namespace ashwa
