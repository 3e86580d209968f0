#include "contracts/quality_task.hpp"

namespace anoncrowd::contracts {

const char* QualityTask::phase_name(Phase p) {
    switch (p) {
        case Phase::Init: return "init";
        case Phase::Collecting: return "collecting";
        case Phase::AwaitingInstruction: return "awaiting_instruction";
        case Phase::Settled: return "settled";
    }
    return "?";
}

void QualityTask::enter_phase(ledger::ContractContext& ctx, Phase p) {
    phase_ = p;
    ctx.emit(self_, self_, "phase", phase_name(p), 0);
}

bool QualityTask::on_deploy(ledger::ContractContext& ctx, const ledger::Address& self,
                            const ledger::Address& deployer, uint64_t) {
    self_ = self;
    if (!params_.valid() || params_.kind != TaskKind::Quality) return false;
    // The task must really come from the authenticated one-task address.
    if (deployer != params_.alpha_R) return false;
    if (ctx.balance(self) < params_.tau) return false;  // no deposit
    Bytes message = publish_message(self, params_.alpha_R);
    zkp::Statement st =
        zkp::encode_statement(cpla::statement_for(message, params_.pi_R, params_.mpk));
    if (!verifiers_.verify(params_.pp_auth, st, params_.pi_R.eta)) return false;

    enter_phase(ctx, Phase::Collecting);
    answer_deadline_ = ctx.height() + params_.t_answer;
    return true;
}

ledger::CallResult QualityTask::on_call(ledger::ContractContext& ctx,
                                        const ledger::Address& sender, uint64_t,
                                        ByteView payload) {
    try {
        Decoder dec(payload);
        switch (Op(dec.u8())) {
            case Op::Submit: return handle_submit(ctx, sender, dec);
            case Op::FakeProof: return handle_fake(ctx, sender, dec);
            case Op::Instruction: return handle_instruction(ctx, sender, dec);
            default: return ledger::CallResult::reject("bad_opcode");
        }
    } catch (const DecodeError&) {
        return ledger::CallResult::reject("bad_payload");
    }
}

ledger::CallResult QualityTask::handle_submit(ledger::ContractContext& ctx,
                                              const ledger::Address& sender, Decoder& dec) {
    auto att = cpla::Attestation::parse(dec.bytes());
    Bytes ciphertext = dec.bytes();
    dec.expect_end();
    if (!att) return ledger::CallResult::reject("bad_attestation_encoding");

    if (phase_ != Phase::Collecting) return ledger::CallResult::reject("not_collecting");
    if (ctx.height() > answer_deadline_) return ledger::CallResult::reject("deadline_passed");
    if (records_.size() >= params_.n) return ledger::CallResult::reject("full");

    if (cpla::link(*att, params_.pi_R))
        return ledger::CallResult::reject("linked_to_requester");
    for (const SubmissionRecord& r : records_) {
        if (cpla::link(*att, r.attestation))
            return ledger::CallResult::reject("linked_duplicate");
    }
    // The attested message embeds the actual transaction sender, so a replay
    // from another address cannot verify.
    Bytes message = submit_message(self_, sender, ciphertext);
    zkp::Statement st = zkp::encode_statement(cpla::statement_for(message, *att, params_.mpk));
    if (!verifiers_.verify(params_.pp_auth, st, att->eta))
        return ledger::CallResult::reject("bad_attestation");

    records_.push_back(SubmissionRecord{sender, *att, std::move(ciphertext), ctx.height()});
    ctx.emit(self_, sender, "submission", "accepted", records_.size());
    if (records_.size() == params_.n) {
        enter_phase(ctx, Phase::AwaitingInstruction);
        instruct_deadline_ = ctx.height() + params_.t_instruct;
    }
    return ledger::CallResult::accept();
}

ledger::CallResult QualityTask::handle_fake(ledger::ContractContext& ctx,
                                            const ledger::Address& sender, Decoder& dec) {
    uint32_t index = dec.u32();
    auto proof = zkp::Proof::parse(dec.bytes());
    dec.expect_end();
    if (!proof) return ledger::CallResult::reject("bad_proof_encoding");

    if (sender != params_.alpha_R) return ledger::CallResult::reject("not_requester");
    if (phase_ != Phase::Collecting) return ledger::CallResult::reject("not_collecting");
    if (index >= records_.size()) return ledger::CallResult::reject("bad_index");

    zkp::FakeStatement st{records_[index].ciphertext, params_.epk, records_[index].worker};
    if (!verifiers_.verify(params_.pp_fake, zkp::encode_statement(st), *proof))
        return ledger::CallResult::reject("bad_proof");

    ctx.emit(self_, records_[index].worker, "fake_removed", "ok", index);
    records_.erase(records_.begin() + index);
    return ledger::CallResult::accept();
}

zkp::RewardStatement QualityTask::reward_statement(const std::vector<uint64_t>& rewards) const {
    zkp::RewardStatement st;
    st.epk = params_.epk;
    st.tau = params_.tau;
    for (const SubmissionRecord& r : records_) st.ciphertexts.push_back(r.ciphertext);
    st.ciphertexts.resize(params_.n, std::nullopt);  // missing slots
    st.rewards = rewards;
    st.policy = params_.policy;
    return st;
}

ledger::CallResult QualityTask::handle_instruction(ledger::ContractContext& ctx,
                                                   const ledger::Address& sender,
                                                   Decoder& dec) {
    uint32_t count = dec.u32();
    std::vector<uint64_t> rewards;
    rewards.reserve(count);
    for (uint32_t i = 0; i < count; ++i) rewards.push_back(dec.u64());
    auto proof = zkp::Proof::parse(dec.bytes());
    dec.expect_end();
    if (!proof) return ledger::CallResult::reject("bad_proof_encoding");

    if (sender != params_.alpha_R) return ledger::CallResult::reject("not_requester");
    if (phase_ != Phase::AwaitingInstruction)
        return ledger::CallResult::reject("not_awaiting_instruction");
    if (ctx.height() > instruct_deadline_) return ledger::CallResult::reject("deadline_passed");
    if (rewards.size() != params_.n) return ledger::CallResult::reject("bad_reward_count");
    uint64_t total = 0;
    for (uint64_t r : rewards) {
        if (r > params_.tau - total) return ledger::CallResult::reject("over_budget");
        total += r;
    }

    zkp::Statement st = zkp::encode_statement(reward_statement(rewards));
    if (!verifiers_.verify(params_.pp_settle, st, *proof))
        return ledger::CallResult::reject("bad_proof");

    for (size_t i = 0; i < records_.size(); ++i) {
        ctx.transfer(self_, records_[i].worker, rewards[i]);
        ctx.emit(self_, records_[i].worker, "payout", "ok", rewards[i]);
    }
    uint64_t refund = ctx.balance(self_);
    ctx.transfer(self_, params_.alpha_R, refund);
    ctx.emit(self_, params_.alpha_R, "refund", "ok", refund);
    settled_by_instruction_ = true;
    enter_phase(ctx, Phase::Settled);
    return ledger::CallResult::accept();
}

void QualityTask::settle_timeout(ledger::ContractContext& ctx) {
    if (!records_.empty()) {
        uint64_t share = params_.tau / records_.size();
        for (const SubmissionRecord& r : records_) {
            ctx.transfer(self_, r.worker, share);
            ctx.emit(self_, r.worker, "payout", "timeout_split", share);
        }
    }
    uint64_t refund = ctx.balance(self_);
    ctx.transfer(self_, params_.alpha_R, refund);
    ctx.emit(self_, params_.alpha_R, "refund", "ok", refund);
    enter_phase(ctx, Phase::Settled);
}

void QualityTask::on_block_end(ledger::ContractContext& ctx, uint64_t height) {
    if (phase_ == Phase::Collecting && height >= answer_deadline_) {
        enter_phase(ctx, Phase::AwaitingInstruction);
        instruct_deadline_ = height + params_.t_instruct;
        return;
    }
    if (phase_ == Phase::AwaitingInstruction && height >= instruct_deadline_) {
        settle_timeout(ctx);
    }
}

}  // namespace anoncrowd::contracts
