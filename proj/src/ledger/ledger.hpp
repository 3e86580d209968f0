#ifndef ANONCROWD_LEDGER_LEDGER_HPP_
#define ANONCROWD_LEDGER_LEDGER_HPP_

#include <functional>
#include <map>
#include <memory>
#include <optional>

#include "common/codec.hpp"
#include "ledger/address.hpp"
#include "ledger/trace.hpp"

namespace anoncrowd::ledger {

// A signed ledger message. target == nullopt deploys a contract.
struct Transaction {
    Address sender{};
    Bytes sender_pk;
    std::optional<Address> target;
    uint64_t value = 0;
    Bytes payload;
    uint64_t nonce = 0;
    Bytes sig;

    Bytes signing_preimage() const;
    Bytes serialize() const;
};

// Builds and signs a transaction for the account behind `key`.
Transaction make_tx(const crypto::SigKeyPair& key, std::optional<Address> target,
                    uint64_t value, Bytes payload, uint64_t nonce);

enum class TxStatus : uint8_t { Ok, Failed };

struct ExecutedTx {
    Transaction tx;
    TxStatus status = TxStatus::Ok;
    std::string reason;  // set when Failed
};

struct Block {
    uint64_t height = 0;
    crypto::Digest parent{};
    std::vector<ExecutedTx> txs;

    crypto::Digest digest() const;
};

// Execution-time services available to contract handlers. Handlers must not
// move funds on paths that end up rejecting the call: the ledger reverts only
// the call's own value transfer.
class ContractContext {
  public:
    virtual ~ContractContext() = default;
    virtual uint64_t height() const = 0;
    virtual uint64_t balance(const Address&) const = 0;
    virtual bool transfer(const Address& src, const Address& dst, uint64_t value) = 0;
    // Extra trace lines (phase transitions, payout tables).
    virtual void emit(const Address& contract, const Address& counterparty,
                      const std::string& kind, const std::string& status, uint64_t value) = 0;
};

struct CallResult {
    bool ok = true;
    std::string reason;
    static CallResult accept() { return {true, {}}; }
    static CallResult reject(std::string why) { return {false, std::move(why)}; }
};

class Contract {
  public:
    virtual ~Contract() = default;
    // Deploy-time check; the deposit is already credited to `self` and is
    // refunded when this returns false.
    virtual bool on_deploy(ContractContext& ctx, const Address& self, const Address& deployer,
                           uint64_t deposit) = 0;
    virtual CallResult on_call(ContractContext& ctx, const Address& sender, uint64_t value,
                               ByteView payload) = 0;
    // Runs after every block; drives timers.
    virtual void on_block_end(ContractContext& ctx, uint64_t height) = 0;
};

using ContractFactory = std::function<std::unique_ptr<Contract>(ByteView init_payload)>;

struct PendingTx {
    Transaction tx;
    uint64_t submit_height = 0;
    uint64_t seq = 0;  // global submission order
};

// Ordering hook for the network adversary: returns the indices of pending
// transactions to execute, in order. Indices left out are delayed; the ledger
// force-includes anything whose synchrony deadline (submit height + delta)
// has arrived, so the adversary can reorder and delay but never drop.
using MempoolPolicy =
    std::function<std::vector<size_t>(const std::vector<PendingTx>&, uint64_t next_height)>;

MempoolPolicy fifo_policy();
MempoolPolicy reverse_policy();

struct SubmitResult {
    bool accepted = false;
    std::string reason;
};

struct LedgerOptions {
    uint64_t delta = 1;  // liveness bound in blocks
    MempoolPolicy policy;  // defaults to FIFO
    ContractFactory factory;
    uint64_t seed = 0;  // recorded in the trace header
};

// Single-writer ledger simulation: signed transactions, an adversarially
// reorderable mempool, block production on a discrete clock, contract
// accounts and exact integer balances. No forks: a mined block is final.
class Ledger {
  public:
    explicit Ledger(LedgerOptions opts);

    // Genesis funding; only before the first block is mined.
    void fund(const Address& addr, uint64_t amount);

    SubmitResult submit_tx(const Transaction& tx);
    const Block& mine_block();

    uint64_t height() const { return height_; }
    uint64_t balance(const Address& addr) const;
    uint64_t total_supply() const;
    uint64_t initial_supply() const { return initial_supply_; }
    size_t mempool_size() const { return mempool_.size(); }
    const std::vector<PendingTx>& mempool() const { return mempool_; }

    const std::vector<Block>& blocks() const { return blocks_; }
    Contract* contract_at(const Address& addr);
    const Contract* contract_at(const Address& addr) const;

    // Predicts the address of the deployer's next contract.
    Address next_contract_address(const Address& deployer) const;

    TraceSink& trace() { return trace_; }
    const TraceSink& trace() const { return trace_; }

    // Concatenation of every transaction committed to a block, for the
    // structural leakage scans.
    Bytes committed_bytes() const;

  private:
    friend class ExecContext;
    bool raw_transfer(const Address& src, const Address& dst, uint64_t value);
    std::vector<size_t> plan_block(uint64_t next_height);

    LedgerOptions opts_;
    uint64_t height_ = 0;
    uint64_t initial_supply_ = 0;
    std::map<Address, uint64_t> balances_;
    std::map<Address, uint64_t> next_nonce_;     // executed
    std::map<Address, uint64_t> deploy_count_;   // executed deploys per sender
    std::map<Address, std::unique_ptr<Contract>> contracts_;
    std::vector<PendingTx> mempool_;
    uint64_t next_seq_ = 0;
    std::vector<Block> blocks_;
    TraceSink trace_;
};

std::string addr_hex(const Address& a);

}  // namespace anoncrowd::ledger

#endif
