#ifndef ANONCROWD_CONTRACTS_QUALITY_TASK_HPP_
#define ANONCROWD_CONTRACTS_QUALITY_TASK_HPP_

#include "contracts/params.hpp"

namespace anoncrowd::contracts {

struct SubmissionRecord {
    ledger::Address worker{};
    cpla::Attestation attestation;
    Bytes ciphertext;
    uint64_t accepted_at = 0;
};

// Quality-aware task state machine. Collects up to n anonymously
// authenticated encrypted answers, lets the requester remove provably fake
// submissions while collecting, then settles on a proven reward instruction
// or falls back to an even split when the instruction deadline passes.
class QualityTask final : public ledger::Contract {
  public:
    enum class Phase : uint8_t { Init = 0, Collecting = 1, AwaitingInstruction = 2, Settled = 3 };

    QualityTask(TaskParams params, const zkp::VerifierRegistry& verifiers)
        : params_(std::move(params)), verifiers_(verifiers) {}

    bool on_deploy(ledger::ContractContext& ctx, const ledger::Address& self,
                   const ledger::Address& deployer, uint64_t deposit) override;
    ledger::CallResult on_call(ledger::ContractContext& ctx, const ledger::Address& sender,
                               uint64_t value, ByteView payload) override;
    void on_block_end(ledger::ContractContext& ctx, uint64_t height) override;

    Phase phase() const { return phase_; }
    const TaskParams& params() const { return params_; }
    const ledger::Address& address() const { return self_; }
    const std::vector<SubmissionRecord>& records() const { return records_; }
    uint64_t answer_deadline() const { return answer_deadline_; }
    uint64_t instruct_deadline() const { return instruct_deadline_; }
    bool settled_by_instruction() const { return settled_by_instruction_; }

    // Statement the contract checks a reward instruction against: recorded
    // ciphertexts in acceptance order, padded with missing slots up to n.
    zkp::RewardStatement reward_statement(const std::vector<uint64_t>& rewards) const;

    static const char* phase_name(Phase p);

  private:
    ledger::CallResult handle_submit(ledger::ContractContext& ctx,
                                     const ledger::Address& sender, Decoder& dec);
    ledger::CallResult handle_fake(ledger::ContractContext& ctx, const ledger::Address& sender,
                                   Decoder& dec);
    ledger::CallResult handle_instruction(ledger::ContractContext& ctx,
                                          const ledger::Address& sender, Decoder& dec);
    void enter_phase(ledger::ContractContext& ctx, Phase p);
    void settle_timeout(ledger::ContractContext& ctx);

    TaskParams params_;
    const zkp::VerifierRegistry& verifiers_;
    ledger::Address self_{};
    Phase phase_ = Phase::Init;
    uint64_t answer_deadline_ = 0;
    uint64_t instruct_deadline_ = 0;
    bool settled_by_instruction_ = false;
    std::vector<SubmissionRecord> records_;
};

}  // namespace anoncrowd::contracts

#endif
