#ifndef ANONCROWD_LEDGER_ADDRESS_HPP_
#define ANONCROWD_LEDGER_ADDRESS_HPP_

#include <array>
#include <cstring>

#include "crypto/crypto.hpp"

namespace anoncrowd::ledger {

// A ledger account address: the first 20 bytes of hash(pk).
using Address = std::array<uint8_t, 20>;

inline Address truncate_to_address(const crypto::Digest& d) {
    Address a;
    std::memcpy(a.data(), d.data(), a.size());
    return a;
}

inline Address derive_address(ByteView pk) {
    return truncate_to_address(crypto::hash(pk));
}

// Contract addresses are derived from the deployer and a per-deployer
// counter: truncate(hash(deployer || counter_le64)). The counter increases by
// one per deploy, so a deployer can predict the address before the deploy
// transaction is mined.
inline Address contract_address(const Address& deployer, uint64_t counter) {
    uint8_t ctr[8];
    for (int i = 0; i < 8; ++i) ctr[i] = uint8_t(counter >> (8 * i));
    return truncate_to_address(crypto::hash_concat(
        {ByteView(deployer.data(), deployer.size()), ByteView(ctr, 8)}));
}

}  // namespace anoncrowd::ledger

#endif
