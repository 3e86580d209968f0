#ifndef ANONCROWD_CONTRACTS_PARAMS_HPP_
#define ANONCROWD_CONTRACTS_PARAMS_HPP_

#include "cpla/cpla.hpp"
#include "ledger/ledger.hpp"

namespace anoncrowd::contracts {

enum class TaskKind : uint8_t {
    Quality = 1,  // collect n answers, settle by proven reward vector
    Auction = 2,  // sealed-bid pre-selection, pay winners on answering
};

// Everything a task contract is initialized with. Proof parameters are
// public views (relation id + fingerprint); verification goes through the
// registry embedded in the runtime.
struct TaskParams {
    TaskKind kind = TaskKind::Quality;
    ledger::Address alpha_R{};    // requester's one-task address
    cpla::Attestation pi_R;       // attestation over prefix || alpha_R
    Bytes mpk;                    // registration authority key
    uint64_t tau = 0;             // budget
    Bytes epk;                    // task encryption key
    zkp::PublicParams pp_auth;
    zkp::PublicParams pp_fake;
    zkp::PublicParams pp_settle;  // Reward relation (quality) or Auction relation
    uint32_t n = 1;               // answers requested (quality tasks)
    uint64_t t_answer = 1;        // deadlines in blocks
    uint64_t t_instruct = 1;
    uint64_t t_bid = 0;           // auction tasks only
    incentive::PolicySpec policy;

    bool valid() const;
    Bytes encode() const;  // full contract init payload, kind byte first
    static TaskParams decode(ByteView payload);
};

// The authentication prefix for a task: the 32-byte digest of the contract
// address. Lifts the 20-byte address to the prefix length.
crypto::Digest task_prefix(const ledger::Address& contract);

// Attested messages.
Bytes publish_message(const ledger::Address& contract, const ledger::Address& alpha_R);
Bytes submit_message(const ledger::Address& contract, const ledger::Address& sender,
                     ByteView ciphertext);

// Call payload opcodes shared by both task kinds.
enum class Op : uint8_t {
    Submit = 1,       // attestation + ciphertext (answer or bid)
    FakeProof = 2,    // index + Fake-relation proof
    Instruction = 3,  // reward vector (quality) or selection (auction) + proof
    Answer = 4,       // auction: bare encrypted answer from a selected bidder
};

Bytes encode_submit_call(const cpla::Attestation& att, ByteView ciphertext);
Bytes encode_fake_call(uint32_t index, const zkp::Proof& proof);
Bytes encode_instruction_call(const std::vector<uint64_t>& rewards, const zkp::Proof& proof);
Bytes encode_selection_call(const std::vector<zkp::SelectionEntry>& selection,
                            const zkp::Proof& proof);
Bytes encode_answer_call(ByteView ciphertext);

}  // namespace anoncrowd::contracts

#endif
