#include "incentive/policy.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace anoncrowd::incentive {

void PolicySpec::encode_into(Encoder& enc) const {
    enc.u8(uint8_t(id)).u32(answer_set_size).u32(auction_k);
}

PolicySpec PolicySpec::decode_from(Decoder& dec) {
    PolicySpec spec;
    uint8_t id = dec.u8();
    if (id < 1 || id > 3) throw DecodeError("unknown policy id");
    spec.id = PolicyId(id);
    spec.answer_set_size = dec.u32();
    spec.auction_k = dec.u32();
    return spec;
}

std::vector<uint64_t> evaluate_majority(const std::vector<Answer>& answers, uint64_t tau) {
    const size_t n = answers.size();
    std::vector<uint64_t> rewards(n, 0);
    if (n == 0) return rewards;

    std::map<uint32_t, size_t> counts;
    for (const Answer& a : answers) {
        if (a) ++counts[*a];
    }
    if (counts.empty()) return rewards;

    size_t best = 0;
    for (const auto& [value, count] : counts) best = std::max(best, count);

    const uint64_t share = tau / n;
    for (size_t i = 0; i < n; ++i) {
        if (answers[i] && counts[*answers[i]] == best) rewards[i] = share;
    }
    return rewards;
}

std::vector<uint64_t> evaluate_flat(const std::vector<Answer>& answers, uint64_t tau) {
    const size_t n = answers.size();
    std::vector<uint64_t> rewards(n, 0);
    if (n == 0) return rewards;
    const uint64_t share = tau / n;
    for (size_t i = 0; i < n; ++i) {
        if (answers[i]) rewards[i] = share;
    }
    return rewards;
}

std::vector<uint64_t> evaluate(const PolicySpec& spec, const std::vector<Answer>& answers,
                               uint64_t tau) {
    switch (spec.id) {
        case PolicyId::Majority:
            return evaluate_majority(answers, tau);
        case PolicyId::FlatRate:
            return evaluate_flat(answers, tau);
        case PolicyId::AuctionLowestK:
            break;
    }
    throw DecodeError("policy id has no answer-vector evaluation");
}

std::optional<AuctionSelection> evaluate_auction_selection(const std::vector<uint64_t>& bids,
                                                           uint32_t k, uint64_t tau) {
    const size_t m = bids.size();
    std::vector<uint32_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    // stable: equal bids keep submission order
    std::stable_sort(order.begin(), order.end(),
                     [&](uint32_t a, uint32_t b) { return bids[a] < bids[b]; });

    const size_t take = std::min<size_t>(k, m);
    AuctionSelection sel;
    uint64_t total = 0;
    for (size_t i = 0; i < take; ++i) {
        uint32_t idx = order[i];
        if (bids[idx] > tau - total) return std::nullopt;  // over budget (overflow-safe)
        total += bids[idx];
        sel.indices.push_back(idx);
        sel.payments.push_back(bids[idx]);
    }
    return sel;
}

}  // namespace anoncrowd::incentive
