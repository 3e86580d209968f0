#ifndef ANONCROWD_CONTRACTS_AUCTION_TASK_HPP_
#define ANONCROWD_CONTRACTS_AUCTION_TASK_HPP_

#include "contracts/quality_task.hpp"

namespace anoncrowd::contracts {

// Auction-based task state machine: sealed signed bids are collected behind
// the same linkage gate as answers, the requester proves a lowest-k pay-as-bid
// selection, and each selected bidder is paid his proven amount when his
// answer arrives. With no valid selection by the deadline every bidder counts
// as selected at an even split of the budget.
class AuctionTask final : public ledger::Contract {
  public:
    enum class Phase : uint8_t {
        Init = 0,
        Bidding = 1,
        AwaitingSelection = 2,
        Answering = 3,
        Settled = 4,
    };

    AuctionTask(TaskParams params, const zkp::VerifierRegistry& verifiers)
        : params_(std::move(params)), verifiers_(verifiers) {}

    bool on_deploy(ledger::ContractContext& ctx, const ledger::Address& self,
                   const ledger::Address& deployer, uint64_t deposit) override;
    ledger::CallResult on_call(ledger::ContractContext& ctx, const ledger::Address& sender,
                               uint64_t value, ByteView payload) override;
    void on_block_end(ledger::ContractContext& ctx, uint64_t height) override;

    Phase phase() const { return phase_; }
    const TaskParams& params() const { return params_; }
    const ledger::Address& address() const { return self_; }
    const std::vector<SubmissionRecord>& bids() const { return bids_; }
    // Selected bidders still owed payment: (address, amount), selection order.
    const std::vector<std::pair<ledger::Address, uint64_t>>& pending_payments() const {
        return pending_payments_;
    }
    bool selected_by_instruction() const { return selected_by_instruction_; }

    zkp::AuctionStatement auction_statement(const std::vector<zkp::SelectionEntry>&) const;

    static const char* phase_name(Phase p);

  private:
    ledger::CallResult handle_bid(ledger::ContractContext& ctx, const ledger::Address& sender,
                                  Decoder& dec);
    ledger::CallResult handle_fake(ledger::ContractContext& ctx, const ledger::Address& sender,
                                   Decoder& dec);
    ledger::CallResult handle_selection(ledger::ContractContext& ctx,
                                        const ledger::Address& sender, Decoder& dec);
    ledger::CallResult handle_answer(ledger::ContractContext& ctx,
                                     const ledger::Address& sender, Decoder& dec);
    void enter_phase(ledger::ContractContext& ctx, Phase p);
    void settle(ledger::ContractContext& ctx);

    TaskParams params_;
    const zkp::VerifierRegistry& verifiers_;
    ledger::Address self_{};
    Phase phase_ = Phase::Init;
    uint64_t bid_deadline_ = 0;
    uint64_t select_deadline_ = 0;
    uint64_t answer_deadline_ = 0;
    bool selected_by_instruction_ = false;
    std::vector<SubmissionRecord> bids_;
    std::vector<std::pair<ledger::Address, uint64_t>> pending_payments_;
};

}  // namespace anoncrowd::contracts

#endif
