#include "crypto/crypto.hpp"

#include <sodium.h>

#include <cstring>
#include <mutex>

namespace anoncrowd::crypto {

namespace {

void ensure_sodium() {
    static std::once_flag once;
    std::call_once(once, [] {
        if (sodium_init() < 0) throw CryptoError("libsodium init failed");
    });
}

void put_le64(uint8_t* out, uint64_t v) {
    for (int i = 0; i < 8; ++i) out[i] = uint8_t(v >> (8 * i));
}

}  // namespace

const char* primitive_suite() {
    return "hash=sha256 sig=ed25519 enc=x25519-xsalsa20-poly1305 proof=hmac-sha512-256";
}

Digest hash(ByteView data) {
    ensure_sodium();
    Digest d;
    crypto_hash_sha256(d.data(), data.data(), data.size());
    return d;
}

Digest hash_concat(std::initializer_list<ByteView> parts) {
    ensure_sodium();
    crypto_hash_sha256_state st;
    crypto_hash_sha256_init(&st);
    for (ByteView p : parts) crypto_hash_sha256_update(&st, p.data(), p.size());
    Digest d;
    crypto_hash_sha256_final(&st, d.data());
    return d;
}

SigKeyPair sig_keygen(const Seed& seed) {
    ensure_sodium();
    SigKeyPair kp;
    kp.pk.resize(kSigPublicKeyLen);
    kp.sk.resize(kSigSecretKeyLen);
    crypto_sign_seed_keypair(kp.pk.data(), kp.sk.data(), seed.data());
    return kp;
}

Bytes sign(ByteView sk, ByteView message) {
    ensure_sodium();
    if (sk.size() != kSigSecretKeyLen) throw CryptoError("bad signing key length");
    Bytes sig(kSignatureLen);
    crypto_sign_detached(sig.data(), nullptr, message.data(), message.size(), sk.data());
    return sig;
}

bool verify_sig(ByteView pk, ByteView message, ByteView sig) {
    ensure_sodium();
    if (pk.size() != kSigPublicKeyLen || sig.size() != kSignatureLen) return false;
    return crypto_sign_verify_detached(sig.data(), message.data(), message.size(),
                                       pk.data()) == 0;
}

EncKeyPair enc_keygen(const Seed& seed) {
    ensure_sodium();
    EncKeyPair kp;
    kp.epk.resize(kEncPublicKeyLen);
    kp.esk.resize(kEncSecretKeyLen);
    crypto_box_seed_keypair(kp.epk.data(), kp.esk.data(), seed.data());
    return kp;
}

Bytes encrypt(ByteView epk, ByteView plaintext, const Seed& randomness) {
    ensure_sodium();
    if (epk.size() != kEncPublicKeyLen) throw CryptoError("bad encryption key length");
    if (plaintext.size() > kMaxPlaintextLen) throw CryptoError("plaintext exceeds bound");

    // Sealed box with explicit ephemeral randomness: the output opens with
    // crypto_box_seal_open. Nonce derivation matches libsodium's seal
    // (blake2b over ephemeral pk || recipient pk).
    uint8_t eph_pk[kEncPublicKeyLen], eph_sk[kEncSecretKeyLen];
    crypto_box_seed_keypair(eph_pk, eph_sk, randomness.data());

    uint8_t nonce[crypto_box_NONCEBYTES];
    crypto_generichash_state st;
    crypto_generichash_init(&st, nullptr, 0, sizeof nonce);
    crypto_generichash_update(&st, eph_pk, sizeof eph_pk);
    crypto_generichash_update(&st, epk.data(), epk.size());
    crypto_generichash_final(&st, nonce, sizeof nonce);

    Bytes out(kEncPublicKeyLen + plaintext.size() + crypto_box_MACBYTES);
    std::memcpy(out.data(), eph_pk, kEncPublicKeyLen);
    if (crypto_box_easy(out.data() + kEncPublicKeyLen, plaintext.data(),
                        plaintext.size(), nonce, epk.data(), eph_sk) != 0) {
        throw CryptoError("encryption failed");
    }
    sodium_memzero(eph_sk, sizeof eph_sk);
    return out;
}

Bytes decrypt(ByteView esk, ByteView ciphertext) {
    ensure_sodium();
    if (esk.size() != kEncSecretKeyLen) throw CryptoError("bad decryption key length");
    if (ciphertext.size() < kSealOverhead) throw CryptoError("ciphertext too short");
    uint8_t epk[kEncPublicKeyLen];
    crypto_scalarmult_base(epk, esk.data());
    Bytes out(ciphertext.size() - kSealOverhead);
    if (crypto_box_seal_open(out.data(), ciphertext.data(), ciphertext.size(), epk,
                             esk.data()) != 0) {
        throw CryptoError("decryption failed: wrong key or corrupted ciphertext");
    }
    return out;
}

bool can_decrypt(ByteView esk, ByteView ciphertext) {
    try {
        decrypt(esk, ciphertext);
        return true;
    } catch (const CryptoError&) {
        return false;
    }
}

bool pair(ByteView pk, ByteView sk) {
    ensure_sodium();
    if (pk.size() == kSigPublicKeyLen && sk.size() == kSigSecretKeyLen) {
        // Re-derive the pair from the embedded seed rather than trusting the
        // public-key copy stored inside sk.
        Seed seed;
        std::memcpy(seed.data(), sk.data(), seed.size());
        uint8_t derived_pk[kSigPublicKeyLen], derived_sk[kSigSecretKeyLen];
        crypto_sign_seed_keypair(derived_pk, derived_sk, seed.data());
        bool ok = std::memcmp(derived_pk, pk.data(), kSigPublicKeyLen) == 0 &&
                  std::memcmp(derived_sk, sk.data(), kSigSecretKeyLen) == 0;
        sodium_memzero(derived_sk, sizeof derived_sk);
        return ok;
    }
    if (pk.size() == kEncPublicKeyLen && sk.size() == kEncSecretKeyLen) {
        uint8_t derived[kEncPublicKeyLen];
        crypto_scalarmult_base(derived, sk.data());
        return std::memcmp(derived, pk.data(), kEncPublicKeyLen) == 0;
    }
    return false;
}

Seed derive_seed(uint64_t root, ByteView label) {
    uint8_t root_le[8];
    put_le64(root_le, root);
    return hash_concat({ByteView(root_le, 8), label});
}

Seed derive_seed(const Seed& root, ByteView label) {
    return hash_concat({ByteView(root.data(), root.size()), label});
}

void SeedStream::fill(std::span<uint8_t> out) {
    size_t done = 0;
    while (done < out.size()) {
        if (avail_ == 0) {
            uint8_t ctr[8];
            put_le64(ctr, counter_++);
            block_ = hash_concat({ByteView(key_.data(), key_.size()), ByteView(ctr, 8)});
            avail_ = block_.size();
        }
        size_t n = std::min(avail_, out.size() - done);
        std::memcpy(out.data() + done, block_.data() + (block_.size() - avail_), n);
        avail_ -= n;
        done += n;
    }
}

Bytes SeedStream::bytes(size_t n) {
    Bytes out(n);
    fill(out);
    return out;
}

Seed SeedStream::next_seed() {
    Seed s;
    fill(s);
    return s;
}

uint64_t SeedStream::next_u64() {
    uint8_t buf[8];
    fill(buf);
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= uint64_t(buf[i]) << (8 * i);
    return v;
}

uint64_t SeedStream::uniform(uint64_t bound) {
    if (bound == 0) throw CryptoError("uniform(0)");
    // Rejection sampling keeps the distribution exact.
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t v;
    do {
        v = next_u64();
    } while (v >= limit);
    return v % bound;
}

}  // namespace anoncrowd::crypto
