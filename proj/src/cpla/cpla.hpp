#ifndef ANONCROWD_CPLA_CPLA_HPP_
#define ANONCROWD_CPLA_CPLA_HPP_

#include "zkp/proof_system.hpp"

// Common-prefix-linkable anonymous authentication. A certified key can attest
// any message anonymously; two attestations by the same key are publicly
// linkable exactly when their messages share the 32-byte prefix, via the t1
// tag. Everything else about the signer stays hidden inside the Auth-relation
// proof.
namespace anoncrowd::cpla {

struct AuthError : std::runtime_error {
    explicit AuthError(const std::string& what) : std::runtime_error(what) {}
};

constexpr size_t kPrefixLen = 32;

struct MasterKeys {
    Bytes mpk;  // certificate verification key
    Bytes msk;  // issuing key, held by the registration authority
};

struct Certificate {
    Bytes subject_pk;
    Bytes sigma;  // issuer signature over subject_pk
};

struct Attestation {
    crypto::Digest t1{};  // prefix tag: linkage handle
    crypto::Digest t2{};  // whole-message tag
    zkp::Proof eta{};     // Auth-relation proof

    Bytes serialize() const;
    static std::optional<Attestation> parse(ByteView data);
    bool operator==(const Attestation&) const = default;
};

constexpr size_t kAttestationLen = 32 + 32 + zkp::kProofLen;

// Deterministic in the seed; returns issuer keys and Auth-relation
// parameters (full, with trapdoor — the caller owns custody).
std::pair<MasterKeys, zkp::PublicParams> setup(const crypto::Seed& seed);

Certificate cert_gen(const MasterKeys& keys, ByteView subject_pk);
bool cert_vrfy(const Certificate& cert, ByteView subject_pk, ByteView mpk);

zkp::AuthStatement statement_for(ByteView message, const Attestation& att, ByteView mpk);

// message = prefix (32 bytes) || rest. Throws AuthError when the message is
// too short, the certificate does not verify, or the key pair is
// inconsistent.
Attestation auth(ByteView message, const crypto::SigKeyPair& key, const Certificate& cert,
                 ByteView mpk, const zkp::ProofSystem& system);

bool verify(ByteView message, const Attestation& att, ByteView mpk,
            const zkp::ProofSystem& system);

// Pure prefix-tag equality. Callers gate on verification; the contract loop
// runs this O(n^2) times so it stays a plain comparison.
bool link(const Attestation& a, const Attestation& b);

}  // namespace anoncrowd::cpla

#endif
