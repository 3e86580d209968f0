#ifndef ANONCROWD_CRYPTO_CRYPTO_HPP_
#define ANONCROWD_CRYPTO_CRYPTO_HPP_

#include <array>
#include <stdexcept>

#include "common/bytes.hpp"

namespace anoncrowd::crypto {

struct CryptoError : std::runtime_error {
    explicit CryptoError(const std::string& what) : std::runtime_error(what) {}
};

using Digest = std::array<uint8_t, 32>;
using Seed = std::array<uint8_t, 32>;

constexpr size_t kSigPublicKeyLen = 32;   // Ed25519
constexpr size_t kSigSecretKeyLen = 64;   // Ed25519 (seed || pk)
constexpr size_t kSignatureLen = 64;
constexpr size_t kEncPublicKeyLen = 32;   // X25519
constexpr size_t kEncSecretKeyLen = 32;
constexpr size_t kSealOverhead = 48;      // ephemeral pk (32) + MAC (16)
constexpr size_t kMaxPlaintextLen = 1 << 20;

// Names of the concrete primitives backing this build; recorded in every
// trace header so runs are self-describing.
const char* primitive_suite();

struct SigKeyPair {
    Bytes sk;  // 64 bytes
    Bytes pk;  // 32 bytes
};

struct EncKeyPair {
    Bytes esk;  // 32 bytes
    Bytes epk;  // 32 bytes
};

Digest hash(ByteView data);
Digest hash_concat(std::initializer_list<ByteView> parts);

// Deterministic: the same seed always yields the same pair.
SigKeyPair sig_keygen(const Seed& seed);
Bytes sign(ByteView sk, ByteView message);
// Never throws: malformed keys or signatures simply fail verification.
bool verify_sig(ByteView pk, ByteView message, ByteView sig);

EncKeyPair enc_keygen(const Seed& seed);

// Probabilistic public-key encryption with explicit randomness. Fresh seeds
// give distinct ciphertexts; identical (epk, m, seed) triples encrypt
// identically, which keeps scenario runs bit-reproducible.
// Ciphertext layout: ephemeral X25519 pk (32) || box(m) (len(m) + 16).
Bytes encrypt(ByteView epk, ByteView plaintext, const Seed& randomness);
// Throws CryptoError on malformed input or authentication failure (wrong
// key / corrupted ciphertext); never returns garbage as success.
Bytes decrypt(ByteView esk, ByteView ciphertext);
bool can_decrypt(ByteView esk, ByteView ciphertext);

// 1 iff (pk, sk) are a mathematically consistent pair of either key family;
// malformed or truncated keys give 0.
bool pair(ByteView pk, ByteView sk);

// Seed derivation for per-actor / per-purpose determinism.
Seed derive_seed(uint64_t root, ByteView label);
Seed derive_seed(const Seed& root, ByteView label);

// Deterministic byte stream (hash counter mode). All randomness in the
// simulation flows through one of these so runs replay exactly.
class SeedStream {
  public:
    explicit SeedStream(const Seed& seed) : key_(seed) {}
    SeedStream(uint64_t root, ByteView label) : key_(derive_seed(root, label)) {}

    void fill(std::span<uint8_t> out);
    Bytes bytes(size_t n);
    Seed next_seed();
    uint64_t next_u64();
    // Unbiased value in [0, bound); bound must be nonzero.
    uint64_t uniform(uint64_t bound);
    bool coin() { return uniform(2) == 1; }
    SeedStream fork(ByteView label) const { return SeedStream(derive_seed(key_, label)); }

  private:
    Seed key_;
    uint64_t counter_ = 0;
    std::array<uint8_t, 32> block_{};
    size_t avail_ = 0;
};

}  // namespace anoncrowd::crypto

#endif
