#include "ashwa/core/identity.hpp"

#include "ashwa/core/digest.hpp"
#include "ashwa/core/random.hpp"

namespace ashwa {

namespace {

constexpr std::string_view kPublicKeyDomain = "ashwa/pk";
constexpr std::string_view kSignatureDomain = "ashwa/sig";

Signature keyed_digest(const Digest& secret, ByteView payload)
{
    return digest_concat({as_bytes(kSignatureDomain), secret.view(), payload});
}

}  // namespace

Keypair::Keypair(const Digest& secret)
    : secret_(secret), identity_(digest_concat({as_bytes(kPublicKeyDomain), secret.view()}))
{
}

Keypair Keypair::from_seed(std::string_view seed) { return Keypair(digest(seed)); }

Keypair Keypair::generate(Rng& rng)
{
    Digest secret;
    for (std::size_t i = 0; i < kDigestWidth; i += 8) {
        auto word = rng.next_u64();
        for (std::size_t j = 0; j < 8; ++j) secret.bytes[i + j] = static_cast<std::uint8_t>(word >> (8 * j));
    }
    return Keypair(secret);
}

Signature Keypair::sign(ByteView payload) const { return keyed_digest(secret_, payload); }

void KeyDirectory::add(const Keypair& keys) { secrets_.emplace(keys.identity(), keys.secret_); }

bool KeyDirectory::verify(const Identity& signer, ByteView payload, const Signature& sig) const
{
    auto it = secrets_.find(signer);
    if (it == secrets_.end()) return false;
    return keyed_digest(it->second, payload) == sig;
}

}  // namespace ashwa
