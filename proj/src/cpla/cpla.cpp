#include "cpla/cpla.hpp"

#include <cstring>

namespace anoncrowd::cpla {

Bytes Attestation::serialize() const {
    Bytes out;
    out.reserve(kAttestationLen);
    out.insert(out.end(), t1.begin(), t1.end());
    out.insert(out.end(), t2.begin(), t2.end());
    Bytes proof = eta.serialize();
    out.insert(out.end(), proof.begin(), proof.end());
    return out;
}

std::optional<Attestation> Attestation::parse(ByteView data) {
    if (data.size() != kAttestationLen) return std::nullopt;
    Attestation att;
    std::memcpy(att.t1.data(), data.data(), 32);
    std::memcpy(att.t2.data(), data.data() + 32, 32);
    auto proof = zkp::Proof::parse(data.subspan(64));
    if (!proof) return std::nullopt;
    att.eta = *proof;
    return att;
}

std::pair<MasterKeys, zkp::PublicParams> setup(const crypto::Seed& seed) {
    crypto::SigKeyPair ra = crypto::sig_keygen(crypto::derive_seed(seed, to_bytes(std::string("ra-keys"))));
    zkp::PublicParams pp =
        zkp::setup(zkp::RelationId::Auth, crypto::derive_seed(seed, to_bytes(std::string("auth-params"))));
    return {MasterKeys{ra.pk, ra.sk}, pp};
}

Certificate cert_gen(const MasterKeys& keys, ByteView subject_pk) {
    return Certificate{to_bytes(subject_pk), crypto::sign(keys.msk, subject_pk)};
}

bool cert_vrfy(const Certificate& cert, ByteView subject_pk, ByteView mpk) {
    if (cert.subject_pk != to_bytes(subject_pk)) return false;
    return crypto::verify_sig(mpk, subject_pk, cert.sigma);
}

zkp::AuthStatement statement_for(ByteView message, const Attestation& att, ByteView mpk) {
    zkp::AuthStatement st;
    st.t1 = att.t1;
    st.t2 = att.t2;
    st.message = to_bytes(message);
    st.mpk = to_bytes(mpk);
    return st;
}

Attestation auth(ByteView message, const crypto::SigKeyPair& key, const Certificate& cert,
                 ByteView mpk, const zkp::ProofSystem& system) {
    if (message.size() < kPrefixLen) throw AuthError("message shorter than the prefix");
    if (!cert_vrfy(cert, key.pk, mpk)) throw AuthError("certificate does not verify");
    if (!crypto::pair(key.pk, key.sk)) throw AuthError("inconsistent key pair");

    Attestation att;
    att.t1 = zkp::linkage_tag(message.subspan(0, kPrefixLen), key.sk);
    att.t2 = zkp::linkage_tag(message, key.sk);

    zkp::Statement x = zkp::encode_statement(statement_for(message, att, mpk));
    zkp::Witness w = zkp::encode_witness(zkp::AuthWitness{key.sk, key.pk, cert.sigma});
    try {
        att.eta = system.prove(x, w);
    } catch (const zkp::ProveFailed& e) {
        throw AuthError(e.what());
    }
    return att;
}

bool verify(ByteView message, const Attestation& att, ByteView mpk,
            const zkp::ProofSystem& system) {
    if (message.size() < kPrefixLen) return false;
    zkp::Statement x = zkp::encode_statement(statement_for(message, att, mpk));
    return system.verify(x, att.eta);
}

bool link(const Attestation& a, const Attestation& b) { return a.t1 == b.t1; }

}  // namespace anoncrowd::cpla
