#ifndef ANONCROWD_INCENTIVE_POLICY_HPP_
#define ANONCROWD_INCENTIVE_POLICY_HPP_

#include <optional>
#include <vector>

#include "common/codec.hpp"

namespace anoncrowd::incentive {

// A missing submission slot. Rewarded zero by every policy.
using Answer = std::optional<uint32_t>;

enum class PolicyId : uint8_t {
    Majority = 1,
    FlatRate = 2,
    AuctionLowestK = 3,
};

// Reward policies are pure functions of (answers, tau) shared by the
// requester client, the reward relation, and the test oracles. Answer values
// are compared for equality only; answer_set_size is metadata for honest
// actors, so settlement never becomes unprovable over an out-of-set value.
struct PolicySpec {
    PolicyId id = PolicyId::Majority;
    uint32_t answer_set_size = 2;
    uint32_t auction_k = 0;  // only meaningful for AuctionLowestK

    void encode_into(Encoder& enc) const;
    static PolicySpec decode_from(Decoder& dec);
    bool operator==(const PolicySpec&) const = default;
};

// Plurality reward: every answer equal to a most-frequent non-missing value
// earns floor(tau / n); all tied plurality values count as correct.
std::vector<uint64_t> evaluate_majority(const std::vector<Answer>& answers, uint64_t tau);

// Flat rate: every non-missing answer earns floor(tau / n).
std::vector<uint64_t> evaluate_flat(const std::vector<Answer>& answers, uint64_t tau);

// Dispatch on the spec's id (Majority or FlatRate).
std::vector<uint64_t> evaluate(const PolicySpec& spec, const std::vector<Answer>& answers,
                               uint64_t tau);

struct AuctionSelection {
    std::vector<uint32_t> indices;    // winners, in selection order
    std::vector<uint64_t> payments;   // pay-as-bid amounts, same order
    bool operator==(const AuctionSelection&) const = default;
};

// Reverse auction: pick the k lowest bids (ties broken by submission order),
// pay each winner his own bid. Returns nullopt when the payments would
// exceed the budget. k larger than the bid count selects everyone.
std::optional<AuctionSelection> evaluate_auction_selection(const std::vector<uint64_t>& bids,
                                                           uint32_t k, uint64_t tau);

}  // namespace anoncrowd::incentive

#endif
