#include "zkp/proof_system.hpp"

#include <sodium.h>

namespace anoncrowd::zkp {

void PublicParams::encode_into(Encoder& enc) const {
    enc.u8(uint8_t(relation_id)).bytes(verifier_material);
}

PublicParams PublicParams::decode_from(Decoder& dec) {
    PublicParams pp;
    uint8_t id = dec.u8();
    if (id < 1 || id > 4) throw DecodeError("unknown relation id");
    pp.relation_id = RelationId(id);
    pp.verifier_material = dec.bytes();
    return pp;
}

PublicParams setup(RelationId relation, const crypto::Seed& seed) {
    PublicParams pp;
    pp.relation_id = relation;
    uint8_t rel = uint8_t(relation);
    crypto::Digest trapdoor = crypto::hash_concat(
        {ByteView(seed.data(), seed.size()), to_bytes(std::string("trapdoor")), ByteView(&rel, 1)});
    crypto::Digest fingerprint = crypto::hash_concat(
        {ByteView(trapdoor.data(), trapdoor.size()), to_bytes(std::string("fingerprint"))});
    pp.prover_material = to_bytes(trapdoor);
    pp.verifier_material = to_bytes(fingerprint);
    return pp;
}

ProofSystem::ProofSystem(PublicParams params) : params_(std::move(params)) {
    if (params_.prover_material.size() != crypto_auth_KEYBYTES)
        throw DecodeError("proof system needs full parameters with trapdoor key");
}

std::array<uint8_t, kProofTagLen> ProofSystem::mac(const Statement& x) const {
    crypto::Digest stmt = crypto::hash(x.public_inputs);
    uint8_t input[33];
    input[0] = uint8_t(x.relation_id);
    std::memcpy(input + 1, stmt.data(), stmt.size());
    std::array<uint8_t, kProofTagLen> tag;
    static_assert(kProofTagLen == crypto_auth_BYTES);
    crypto_auth(tag.data(), input, sizeof input, params_.prover_material.data());
    return tag;
}

Proof ProofSystem::prove(const Statement& x, const Witness& w) const {
    if (x.relation_id != params_.relation_id)
        throw ProveFailed("statement relation mismatch");
    if (w.relation_id != params_.relation_id)
        throw ProveFailed("witness relation mismatch");
    if (!eval_relation(params_.relation_id, x, w))
        throw ProveFailed(std::string("relation ") + relation_name(params_.relation_id) +
                          " does not hold for the supplied witness");
    return Proof{params_.relation_id, mac(x)};
}

bool ProofSystem::verify(const Statement& x, const Proof& proof) const {
    if (proof.relation_id != params_.relation_id) return false;
    if (x.relation_id != params_.relation_id) return false;
    auto expected = mac(x);
    return sodium_memcmp(expected.data(), proof.tag.data(), expected.size()) == 0;
}

void VerifierRegistry::add(const ProofSystem& system) {
    systems_[system.fingerprint()] = &system;
}

bool VerifierRegistry::verify(const PublicParams& view, const Statement& x,
                              const Proof& proof) const {
    auto it = systems_.find(view.verifier_material);
    if (it == systems_.end()) return false;
    if (it->second->relation_id() != view.relation_id) return false;
    return it->second->verify(x, proof);
}

}  // namespace anoncrowd::zkp
