#include "contracts/auction_task.hpp"

#include <algorithm>

namespace anoncrowd::contracts {

const char* AuctionTask::phase_name(Phase p) {
    switch (p) {
        case Phase::Init: return "init";
        case Phase::Bidding: return "bidding";
        case Phase::AwaitingSelection: return "awaiting_selection";
        case Phase::Answering: return "answering";
        case Phase::Settled: return "settled";
    }
    return "?";
}

void AuctionTask::enter_phase(ledger::ContractContext& ctx, Phase p) {
    phase_ = p;
    ctx.emit(self_, self_, "phase", phase_name(p), 0);
}

bool AuctionTask::on_deploy(ledger::ContractContext& ctx, const ledger::Address& self,
                            const ledger::Address& deployer, uint64_t) {
    self_ = self;
    if (!params_.valid() || params_.kind != TaskKind::Auction) return false;
    if (deployer != params_.alpha_R) return false;
    if (ctx.balance(self) < params_.tau) return false;
    Bytes message = publish_message(self, params_.alpha_R);
    zkp::Statement st =
        zkp::encode_statement(cpla::statement_for(message, params_.pi_R, params_.mpk));
    if (!verifiers_.verify(params_.pp_auth, st, params_.pi_R.eta)) return false;

    enter_phase(ctx, Phase::Bidding);
    bid_deadline_ = ctx.height() + params_.t_bid;
    return true;
}

ledger::CallResult AuctionTask::on_call(ledger::ContractContext& ctx,
                                        const ledger::Address& sender, uint64_t,
                                        ByteView payload) {
    try {
        Decoder dec(payload);
        switch (Op(dec.u8())) {
            case Op::Submit: return handle_bid(ctx, sender, dec);
            case Op::FakeProof: return handle_fake(ctx, sender, dec);
            case Op::Instruction: return handle_selection(ctx, sender, dec);
            case Op::Answer: return handle_answer(ctx, sender, dec);
        }
        return ledger::CallResult::reject("bad_opcode");
    } catch (const DecodeError&) {
        return ledger::CallResult::reject("bad_payload");
    }
}

ledger::CallResult AuctionTask::handle_bid(ledger::ContractContext& ctx,
                                           const ledger::Address& sender, Decoder& dec) {
    auto att = cpla::Attestation::parse(dec.bytes());
    Bytes ciphertext = dec.bytes();
    dec.expect_end();
    if (!att) return ledger::CallResult::reject("bad_attestation_encoding");

    if (phase_ != Phase::Bidding) return ledger::CallResult::reject("not_bidding");
    if (ctx.height() > bid_deadline_) return ledger::CallResult::reject("deadline_passed");

    if (cpla::link(*att, params_.pi_R))
        return ledger::CallResult::reject("linked_to_requester");
    for (const SubmissionRecord& r : bids_) {
        if (cpla::link(*att, r.attestation))
            return ledger::CallResult::reject("linked_duplicate");
    }
    Bytes message = submit_message(self_, sender, ciphertext);
    zkp::Statement st = zkp::encode_statement(cpla::statement_for(message, *att, params_.mpk));
    if (!verifiers_.verify(params_.pp_auth, st, att->eta))
        return ledger::CallResult::reject("bad_attestation");

    bids_.push_back(SubmissionRecord{sender, *att, std::move(ciphertext), ctx.height()});
    ctx.emit(self_, sender, "bid", "accepted", bids_.size());
    return ledger::CallResult::accept();
}

ledger::CallResult AuctionTask::handle_fake(ledger::ContractContext& ctx,
                                            const ledger::Address& sender, Decoder& dec) {
    uint32_t index = dec.u32();
    auto proof = zkp::Proof::parse(dec.bytes());
    dec.expect_end();
    if (!proof) return ledger::CallResult::reject("bad_proof_encoding");

    if (sender != params_.alpha_R) return ledger::CallResult::reject("not_requester");
    if (phase_ != Phase::Bidding) return ledger::CallResult::reject("not_bidding");
    if (index >= bids_.size()) return ledger::CallResult::reject("bad_index");

    zkp::FakeStatement st{bids_[index].ciphertext, params_.epk, bids_[index].worker};
    if (!verifiers_.verify(params_.pp_fake, zkp::encode_statement(st), *proof))
        return ledger::CallResult::reject("bad_proof");

    ctx.emit(self_, bids_[index].worker, "fake_removed", "ok", index);
    bids_.erase(bids_.begin() + index);
    return ledger::CallResult::accept();
}

zkp::AuctionStatement AuctionTask::auction_statement(
    const std::vector<zkp::SelectionEntry>& selection) const {
    zkp::AuctionStatement st;
    st.epk = params_.epk;
    st.tau = params_.tau;
    for (const SubmissionRecord& r : bids_) {
        st.bid_ciphertexts.push_back(r.ciphertext);
        st.bidders.push_back(r.worker);
    }
    st.k = params_.policy.auction_k;
    st.selection = selection;
    return st;
}

ledger::CallResult AuctionTask::handle_selection(ledger::ContractContext& ctx,
                                                 const ledger::Address& sender, Decoder& dec) {
    uint32_t count = dec.u32();
    std::vector<zkp::SelectionEntry> selection;
    selection.reserve(count);
    for (uint32_t i = 0; i < count; ++i) {
        zkp::SelectionEntry e;
        e.bidder_index = dec.u32();
        e.payment = dec.u64();
        selection.push_back(e);
    }
    auto proof = zkp::Proof::parse(dec.bytes());
    dec.expect_end();
    if (!proof) return ledger::CallResult::reject("bad_proof_encoding");

    if (sender != params_.alpha_R) return ledger::CallResult::reject("not_requester");
    if (phase_ != Phase::AwaitingSelection)
        return ledger::CallResult::reject("not_awaiting_selection");
    if (ctx.height() > select_deadline_) return ledger::CallResult::reject("deadline_passed");
    uint64_t total = 0;
    for (const zkp::SelectionEntry& e : selection) {
        if (e.bidder_index >= bids_.size()) return ledger::CallResult::reject("bad_index");
        if (e.payment > params_.tau - total) return ledger::CallResult::reject("over_budget");
        total += e.payment;
    }

    zkp::Statement st = zkp::encode_statement(auction_statement(selection));
    if (!verifiers_.verify(params_.pp_settle, st, *proof))
        return ledger::CallResult::reject("bad_proof");

    for (const zkp::SelectionEntry& e : selection) {
        pending_payments_.emplace_back(bids_[e.bidder_index].worker, e.payment);
        ctx.emit(self_, bids_[e.bidder_index].worker, "selected", "ok", e.payment);
    }
    selected_by_instruction_ = true;
    enter_phase(ctx, Phase::Answering);
    answer_deadline_ = ctx.height() + params_.t_answer;
    return ledger::CallResult::accept();
}

ledger::CallResult AuctionTask::handle_answer(ledger::ContractContext& ctx,
                                              const ledger::Address& sender, Decoder& dec) {
    Bytes ciphertext = dec.bytes();
    dec.expect_end();
    (void)ciphertext;  // content is for the requester; payment needs only selection

    if (phase_ != Phase::Answering) return ledger::CallResult::reject("not_answering");
    if (ctx.height() > answer_deadline_) return ledger::CallResult::reject("deadline_passed");

    auto it = std::find_if(pending_payments_.begin(), pending_payments_.end(),
                           [&](const auto& p) { return p.first == sender; });
    if (it == pending_payments_.end()) return ledger::CallResult::reject("not_selected");

    ctx.transfer(self_, it->first, it->second);
    ctx.emit(self_, it->first, "payout", "ok", it->second);
    pending_payments_.erase(it);
    if (pending_payments_.empty()) settle(ctx);
    return ledger::CallResult::accept();
}

void AuctionTask::settle(ledger::ContractContext& ctx) {
    uint64_t refund = ctx.balance(self_);
    ctx.transfer(self_, params_.alpha_R, refund);
    ctx.emit(self_, params_.alpha_R, "refund", "ok", refund);
    enter_phase(ctx, Phase::Settled);
}

void AuctionTask::on_block_end(ledger::ContractContext& ctx, uint64_t height) {
    if (phase_ == Phase::Bidding && height >= bid_deadline_) {
        enter_phase(ctx, Phase::AwaitingSelection);
        select_deadline_ = height + params_.t_instruct;
        return;
    }
    if (phase_ == Phase::AwaitingSelection && height >= select_deadline_) {
        // No valid selection: every bidder counts as selected at an even split.
        if (bids_.empty()) {
            settle(ctx);
            return;
        }
        uint64_t share = params_.tau / bids_.size();
        for (const SubmissionRecord& r : bids_) {
            pending_payments_.emplace_back(r.worker, share);
            ctx.emit(self_, r.worker, "selected", "fallback", share);
        }
        enter_phase(ctx, Phase::Answering);
        answer_deadline_ = height + params_.t_answer;
        return;
    }
    if (phase_ == Phase::Answering && height >= answer_deadline_) {
        settle(ctx);
    }
}

}  // namespace anoncrowd::contracts
