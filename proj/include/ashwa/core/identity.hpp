#pragma once

#include <map>
#include <string>

#include "ashwa/core/bytes.hpp"

namespace ashwa {

class Rng;

/// Public identity of a participant: the simulated public key.
class Identity {
public:
    Identity() = default;
    explicit Identity(const Digest& key) : key_(key) {}

    const Digest& key() const { return key_; }
    std::string display() const { return key_.short_hex(); }

    auto operator<=>(const Identity&) const = default;

private:
    Digest key_{};
};

using Signature = Digest;

/// Simulated key pair. The public key is a digest of the secret.
class Keypair {
public:
    static Keypair from_seed(std::string_view seed);
    static Keypair generate(Rng& rng);

    const Identity& identity() const { return identity_; }
    Signature sign(ByteView payload) const;

private:
    friend class KeyDirectory;
    explicit Keypair(const Digest& secret);

    Digest secret_{};
    Identity identity_{};
};

/// Registry of every key pair known to the simulation.
///
/// Signatures are keyed digests, so verification needs the signer's secret.
/// The directory plays the role of a PKI: a party that does not hold a key
/// pair can not produce a signature that verifies under it.
class KeyDirectory {
public:
    void add(const Keypair& keys);
    bool contains(const Identity& id) const { return secrets_.contains(id); }
    std::size_t size() const { return secrets_.size(); }

    bool verify(const Identity& signer, ByteView payload, const Signature& sig) const;

private:
    std::map<Identity, Digest> secrets_;
};

}  // namespace ashwa
