#ifndef ANONCROWD_ZKP_RELATION_HPP_
#define ANONCROWD_ZKP_RELATION_HPP_

#include <optional>
#include <vector>

#include "common/codec.hpp"
#include "crypto/crypto.hpp"
#include "incentive/policy.hpp"

namespace anoncrowd::zkp {

enum class RelationId : uint8_t {
    Auth = 1,     // certificate ownership + linkage-tag formation
    Reward = 2,   // reward vector follows the announced policy on decrypted answers
    Fake = 3,     // a recorded ciphertext does not carry a validly signed payload
    Auction = 4,  // selection instruction matches the auction rule on decrypted bids
};

const char* relation_name(RelationId id);

// Canonical byte encodings; public_inputs / private_inputs are built with the
// length-prefixed codec so encodings are injective per relation.
struct Statement {
    RelationId relation_id;
    Bytes public_inputs;
};

struct Witness {
    RelationId relation_id;
    Bytes private_inputs;
};

constexpr size_t kProofTagLen = 32;

struct Proof {
    RelationId relation_id;
    std::array<uint8_t, kProofTagLen> tag{};

    Bytes serialize() const;
    static std::optional<Proof> parse(ByteView data);
    bool operator==(const Proof&) const = default;
};

constexpr size_t kProofLen = 1 + kProofTagLen;

// --- Typed statement / witness views ---------------------------------------

struct AuthStatement {
    crypto::Digest t1{};
    crypto::Digest t2{};
    Bytes message;  // prefix (32 bytes) || rest
    Bytes mpk;
};

struct AuthWitness {
    Bytes sk;
    Bytes pk;
    Bytes cert_sig;
};

// One settlement slot: a recorded ciphertext, or nullopt for a missing slot.
using CiphertextSlot = std::optional<Bytes>;

struct RewardStatement {
    Bytes epk;
    uint64_t tau = 0;
    std::vector<CiphertextSlot> ciphertexts;  // length n, missing slots padded
    std::vector<uint64_t> rewards;            // length n
    incentive::PolicySpec policy;
};

struct FakeStatement {
    Bytes ciphertext;
    Bytes epk;
    std::array<uint8_t, 20> claimed_address{};  // sender recorded for the ciphertext
};

struct SelectionEntry {
    uint32_t bidder_index = 0;
    uint64_t payment = 0;
    bool operator==(const SelectionEntry&) const = default;
};

struct AuctionStatement {
    Bytes epk;
    uint64_t tau = 0;
    std::vector<Bytes> bid_ciphertexts;
    std::vector<std::array<uint8_t, 20>> bidders;
    uint32_t k = 0;
    std::vector<SelectionEntry> selection;
};

// Decryption-key witness shared by the Reward, Fake and Auction relations.
struct EskWitness {
    Bytes esk;
};

Statement encode_statement(const AuthStatement&);
Statement encode_statement(const RewardStatement&);
Statement encode_statement(const FakeStatement&);
Statement encode_statement(const AuctionStatement&);

Witness encode_witness(const AuthWitness&);
Witness encode_witness(RelationId relation, const EskWitness&);

AuthStatement decode_auth_statement(ByteView);
RewardStatement decode_reward_statement(ByteView);
FakeStatement decode_fake_statement(ByteView);
AuctionStatement decode_auction_statement(ByteView);

// --- Signed payload layouts -------------------------------------------------
// Answers and bids travel encrypted as fixed layouts carrying the signer's
// one-time public key, so the plaintext alone suffices to check the signature
// against the submitting ledger address:
//   answer payload: u32 answer || pk (32) || sig(pk_owner, u32 answer) (64)
//   bid payload:    u64 bid    || pk (32) || sig(pk_owner, u64 bid)    (64)

Bytes encode_answer_payload(uint32_t answer, ByteView signer_pk, ByteView sig);
Bytes encode_bid_payload(uint64_t bid, ByteView signer_pk, ByteView sig);
Bytes answer_message_bytes(uint32_t answer);
Bytes bid_message_bytes(uint64_t bid);

struct AnswerPayload {
    uint32_t answer = 0;
    Bytes pk;
    Bytes sig;
};
struct BidPayload {
    uint64_t bid = 0;
    Bytes pk;
    Bytes sig;
};
std::optional<AnswerPayload> parse_answer_payload(ByteView plaintext);
std::optional<BidPayload> parse_bid_payload(ByteView plaintext);

// The tag equation of the Auth relation: hash(len(data) || data || sk). The
// length prefix keeps prefix/message boundaries unambiguous under
// concatenation. t1 uses the 32-byte message prefix, t2 the whole message.
crypto::Digest linkage_tag(ByteView data, ByteView sk);

// The pure predicate behind each relation. Shared by the prover (to refuse
// false statements) and by the test oracles. Throws DecodeError on malformed
// encodings; mismatched relation ids return false.
bool eval_relation(RelationId id, const Statement& x, const Witness& w);

}  // namespace anoncrowd::zkp

#endif
