#include "ashwa/core/digest.hpp"

#include <openssl/evp.h>

#include <bit>
#include <memory>
#include <stdexcept>

namespace ashwa {

namespace {

struct CtxDeleter {
    void operator()(EVP_MD_CTX* ctx) const { EVP_MD_CTX_free(ctx); }
};

// One context per thread; sessions may run on several threads at once.
EVP_MD_CTX* thread_context()
{
    thread_local std::unique_ptr<EVP_MD_CTX, CtxDeleter> ctx{EVP_MD_CTX_new()};
    if (!ctx) throw std::runtime_error("EVP_MD_CTX_new failed");
    return ctx.get();
}

}  // namespace

Digest digest_concat(std::initializer_list<ByteView> parts)
{
    EVP_MD_CTX* ctx = thread_context();
    Digest out;
    unsigned len = 0;
    if (EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("EVP_DigestInit_ex failed");
    for (auto part : parts) {
        if (!part.empty() && EVP_DigestUpdate(ctx, part.data(), part.size()) != 1)
            throw std::runtime_error("EVP_DigestUpdate failed");
    }
    if (EVP_DigestFinal_ex(ctx, out.bytes.data(), &len) != 1 || len != kDigestWidth)
        throw std::runtime_error("EVP_DigestFinal_ex failed");
    return out;
}

Digest digest(ByteView data) { return digest_concat({data}); }

Digest digest(std::string_view data) { return digest(as_bytes(data)); }

unsigned leading_zero_bits(const Digest& d)
{
    unsigned bits = 0;
    for (auto b : d.bytes) {
        if (b != 0) return bits + static_cast<unsigned>(std::countl_zero(b));
        bits += 8;
    }
    return bits;
}

}  // namespace ashwa
