#ifndef ANONCROWD_ZKP_PROOF_SYSTEM_HPP_
#define ANONCROWD_ZKP_PROOF_SYSTEM_HPP_

#include <map>

#include "zkp/relation.hpp"

namespace anoncrowd::zkp {

struct ProveFailed : std::runtime_error {
    explicit ProveFailed(const std::string& what) : std::runtime_error(what) {}
};

// Parameters for one relation. prover_material is the trapdoor MAC key and
// stays inside the ProofSystem instance; copies that circulate in task
// parameters and on-ledger payloads carry only the verifier fingerprint.
struct PublicParams {
    RelationId relation_id = RelationId::Auth;
    Bytes verifier_material;  // fingerprint identifying the parameter set
    Bytes prover_material;    // trapdoor key; empty in public views

    PublicParams public_view() const { return {relation_id, verifier_material, {}}; }
    void encode_into(Encoder& enc) const;
    static PublicParams decode_from(Decoder& dec);  // decodes a public view
};

PublicParams setup(RelationId relation, const crypto::Seed& seed);

// Honest-evaluation backend: prove re-evaluates the relation with the witness
// and, only if it holds, emits tag = MAC(trapdoor, relation || hash(statement)).
// The tag depends on the statement alone, so proofs carry no witness bytes;
// soundness holds against anyone who cannot reach the trapdoor key.
class ProofSystem {
  public:
    explicit ProofSystem(PublicParams params);
    ProofSystem(RelationId relation, const crypto::Seed& seed)
        : ProofSystem(setup(relation, seed)) {}

    RelationId relation_id() const { return params_.relation_id; }
    PublicParams public_params() const { return params_.public_view(); }
    const Bytes& fingerprint() const { return params_.verifier_material; }

    // Throws ProveFailed when the relation does not hold for (x, w), and
    // DecodeError on malformed encodings.
    Proof prove(const Statement& x, const Witness& w) const;
    // Never throws; malformed or mismatched proofs verify as false.
    bool verify(const Statement& x, const Proof& proof) const;

  private:
    std::array<uint8_t, kProofTagLen> mac(const Statement& x) const;
    PublicParams params_;
};

// Lookup of proof-system instances by fingerprint, standing in for the
// verification library embedded in the contract runtime. Verification against
// an unknown fingerprint fails.
class VerifierRegistry {
  public:
    void add(const ProofSystem& system);
    bool verify(const PublicParams& view, const Statement& x, const Proof& proof) const;

  private:
    std::map<Bytes, const ProofSystem*> systems_;
};

}  // namespace anoncrowd::zkp

#endif
