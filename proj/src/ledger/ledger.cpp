#include "ledger/ledger.hpp"

#include <algorithm>

namespace anoncrowd::ledger {

namespace {
const char* kDeployLabel = "DEPLOY";
}

Bytes Transaction::signing_preimage() const {
    Encoder enc;
    enc.bytes(ByteView(sender.data(), sender.size()));
    if (target) {
        enc.u8(1).bytes(ByteView(target->data(), target->size()));
    } else {
        enc.u8(0);
    }
    enc.u64(value).bytes(payload).u64(nonce);
    return enc.take();
}

Bytes Transaction::serialize() const {
    Encoder enc;
    enc.bytes(signing_preimage()).bytes(sender_pk).bytes(sig);
    return enc.take();
}

Transaction make_tx(const crypto::SigKeyPair& key, std::optional<Address> target,
                    uint64_t value, Bytes payload, uint64_t nonce) {
    Transaction tx;
    tx.sender = derive_address(key.pk);
    tx.sender_pk = key.pk;
    tx.target = target;
    tx.value = value;
    tx.payload = std::move(payload);
    tx.nonce = nonce;
    tx.sig = crypto::sign(key.sk, tx.signing_preimage());
    return tx;
}

crypto::Digest Block::digest() const {
    Encoder enc;
    enc.u64(height).bytes(ByteView(parent.data(), parent.size()));
    enc.u32(uint32_t(txs.size()));
    for (const ExecutedTx& etx : txs) {
        enc.bytes(etx.tx.serialize());
        enc.u8(etx.status == TxStatus::Ok ? 1 : 0);
    }
    return crypto::hash(enc.view());
}

MempoolPolicy fifo_policy() {
    return [](const std::vector<PendingTx>& pending, uint64_t) {
        std::vector<size_t> order(pending.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        return order;
    };
}

MempoolPolicy reverse_policy() {
    return [](const std::vector<PendingTx>& pending, uint64_t) {
        std::vector<size_t> order(pending.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = pending.size() - 1 - i;
        return order;
    };
}

std::string addr_hex(const Address& a) { return to_hex(ByteView(a.data(), a.size())); }

// ContractContext backed by a live ledger during block execution.
class ExecContext final : public ContractContext {
  public:
    ExecContext(Ledger& ledger, uint64_t height) : ledger_(ledger), height_(height) {}
    uint64_t height() const override { return height_; }
    uint64_t balance(const Address& a) const override { return ledger_.balance(a); }
    bool transfer(const Address& src, const Address& dst, uint64_t value) override {
        return ledger_.raw_transfer(src, dst, value);
    }
    void emit(const Address& contract, const Address& counterparty, const std::string& kind,
              const std::string& status, uint64_t value) override {
        ledger_.trace().event(height_, addr_hex(contract), addr_hex(counterparty), kind,
                              status, value);
    }

  private:
    Ledger& ledger_;
    uint64_t height_;
};

Ledger::Ledger(LedgerOptions opts) : opts_(std::move(opts)) {
    if (!opts_.policy) opts_.policy = fifo_policy();
    if (opts_.delta == 0) opts_.delta = 1;
    trace_.header("trace v1");
    trace_.header("seed=" + std::to_string(opts_.seed));
    trace_.header(crypto::primitive_suite());
    trace_.header("delta=" + std::to_string(opts_.delta));
}

void Ledger::fund(const Address& addr, uint64_t amount) {
    if (height_ != 0) throw std::logic_error("genesis funding after block production");
    balances_[addr] += amount;
    initial_supply_ += amount;
    trace_.event(0, "genesis", addr_hex(addr), "fund", "ok", amount);
}

uint64_t Ledger::balance(const Address& addr) const {
    auto it = balances_.find(addr);
    return it == balances_.end() ? 0 : it->second;
}

uint64_t Ledger::total_supply() const {
    uint64_t sum = 0;
    for (const auto& [addr, bal] : balances_) sum += bal;
    return sum;
}

Contract* Ledger::contract_at(const Address& addr) {
    auto it = contracts_.find(addr);
    return it == contracts_.end() ? nullptr : it->second.get();
}

const Contract* Ledger::contract_at(const Address& addr) const {
    auto it = contracts_.find(addr);
    return it == contracts_.end() ? nullptr : it->second.get();
}

Address Ledger::next_contract_address(const Address& deployer) const {
    auto it = deploy_count_.find(deployer);
    uint64_t counter = it == deploy_count_.end() ? 0 : it->second;
    return contract_address(deployer, counter);
}

bool Ledger::raw_transfer(const Address& src, const Address& dst, uint64_t value) {
    if (balance(src) < value) return false;
    balances_[src] -= value;
    balances_[dst] += value;
    return true;
}

SubmitResult Ledger::submit_tx(const Transaction& tx) {
    auto reject = [&](const std::string& reason) {
        trace_.event(height_, addr_hex(tx.sender),
                     tx.target ? addr_hex(*tx.target) : kDeployLabel, "submit",
                     "rejected:" + reason, tx.value);
        return SubmitResult{false, reason};
    };

    if (!crypto::verify_sig(tx.sender_pk, tx.signing_preimage(), tx.sig))
        return reject("bad_signature");
    if (derive_address(tx.sender_pk) != tx.sender) return reject("sender_mismatch");

    uint64_t pending_from_sender = 0;
    uint64_t pending_value = 0;
    for (const PendingTx& p : mempool_) {
        if (p.tx.sender == tx.sender) {
            ++pending_from_sender;
            pending_value += p.tx.value;
        }
    }
    auto nonce_it = next_nonce_.find(tx.sender);
    uint64_t expected = (nonce_it == next_nonce_.end() ? 0 : nonce_it->second) +
                        pending_from_sender;
    if (tx.nonce != expected) return reject("bad_nonce");
    if (tx.value > balance(tx.sender) ||
        pending_value > balance(tx.sender) - tx.value)
        return reject("insufficient_balance");

    mempool_.push_back(PendingTx{tx, height_, next_seq_++});
    trace_.event(height_, addr_hex(tx.sender),
                 tx.target ? addr_hex(*tx.target) : kDeployLabel, "submit", "queued",
                 tx.value);
    return SubmitResult{true, {}};
}

std::vector<size_t> Ledger::plan_block(uint64_t next_height) {
    std::vector<size_t> order = opts_.policy(mempool_, next_height);

    // Sanitize the adversary's plan: drop out-of-range or duplicate indices.
    std::vector<bool> seen(mempool_.size(), false);
    std::vector<size_t> plan;
    for (size_t idx : order) {
        if (idx >= mempool_.size() || seen[idx]) continue;
        seen[idx] = true;
        plan.push_back(idx);
    }
    // Synchrony bound: anything past its inclusion deadline is appended in
    // submission order regardless of the policy's wishes.
    for (size_t i = 0; i < mempool_.size(); ++i) {
        if (!seen[i] && mempool_[i].submit_height + opts_.delta <= next_height) {
            seen[i] = true;
            plan.push_back(i);
        }
    }
    return plan;
}

const Block& Ledger::mine_block() {
    uint64_t next_height = height_ + 1;
    std::vector<size_t> plan = plan_block(next_height);

    Block block;
    block.height = next_height;
    block.parent = blocks_.empty() ? crypto::Digest{} : blocks_.back().digest();

    ExecContext ctx(*this, next_height);

    std::vector<PendingTx> executing;
    executing.reserve(plan.size());
    for (size_t idx : plan) executing.push_back(std::move(mempool_[idx]));
    // Remove the executed entries from the mempool, preserving order.
    std::vector<bool> taken(mempool_.size(), false);
    for (size_t idx : plan) taken[idx] = true;
    std::vector<PendingTx> rest;
    for (size_t i = 0; i < mempool_.size(); ++i) {
        if (!taken[i]) rest.push_back(std::move(mempool_[i]));
    }
    mempool_ = std::move(rest);

    for (PendingTx& p : executing) {
        Transaction& tx = p.tx;
        ExecutedTx etx;
        std::string target_label = tx.target ? addr_hex(*tx.target) : kDeployLabel;
        std::string kind = !tx.target ? "deploy"
                           : contracts_.count(*tx.target) ? "call"
                                                          : "transfer";

        auto fail = [&](const std::string& reason) {
            etx.status = TxStatus::Failed;
            etx.reason = reason;
            trace_.event(next_height, addr_hex(tx.sender), target_label, kind,
                         "failed:" + reason, tx.value);
        };

        uint64_t expected = next_nonce_[tx.sender];
        if (tx.nonce != expected) {
            fail("bad_nonce");
            etx.tx = std::move(tx);
            block.txs.push_back(std::move(etx));
            continue;
        }
        next_nonce_[tx.sender] = expected + 1;

        if (balance(tx.sender) < tx.value) {
            fail("insufficient_balance");
            etx.tx = std::move(tx);
            block.txs.push_back(std::move(etx));
            continue;
        }

        if (!tx.target) {
            uint64_t counter = deploy_count_[tx.sender]++;
            Address addr = contract_address(tx.sender, counter);
            raw_transfer(tx.sender, addr, tx.value);
            std::unique_ptr<Contract> contract =
                opts_.factory ? opts_.factory(tx.payload) : nullptr;
            if (!contract) {
                raw_transfer(addr, tx.sender, tx.value);
                fail("bad_init_payload");
            } else {
                Contract* raw = contract.get();
                contracts_[addr] = std::move(contract);
                if (!raw->on_deploy(ctx, addr, tx.sender, tx.value)) {
                    contracts_.erase(addr);
                    raw_transfer(addr, tx.sender, tx.value);
                    fail("constructor_rejected");
                } else {
                    trace_.event(next_height, addr_hex(tx.sender), addr_hex(addr), "deploy",
                                 "ok", tx.value);
                }
            }
        } else if (Contract* contract = contract_at(*tx.target)) {
            raw_transfer(tx.sender, *tx.target, tx.value);
            CallResult result = contract->on_call(ctx, tx.sender, tx.value, tx.payload);
            if (!result.ok) {
                raw_transfer(*tx.target, tx.sender, tx.value);
                fail(result.reason.empty() ? "rejected" : result.reason);
            } else {
                trace_.event(next_height, addr_hex(tx.sender), target_label, "call", "ok",
                             tx.value);
            }
        } else {
            raw_transfer(tx.sender, *tx.target, tx.value);
            trace_.event(next_height, addr_hex(tx.sender), target_label, "transfer", "ok",
                         tx.value);
        }

        etx.tx = std::move(tx);
        block.txs.push_back(std::move(etx));
    }

    for (auto& [addr, contract] : contracts_) contract->on_block_end(ctx, next_height);

    height_ = next_height;
    blocks_.push_back(std::move(block));
    return blocks_.back();
}

Bytes Ledger::committed_bytes() const {
    Bytes out;
    for (const Block& b : blocks_) {
        for (const ExecutedTx& etx : b.txs) append(out, etx.tx.serialize());
    }
    return out;
}

}  // namespace anoncrowd::ledger
