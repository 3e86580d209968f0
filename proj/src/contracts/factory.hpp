#ifndef ANONCROWD_CONTRACTS_FACTORY_HPP_
#define ANONCROWD_CONTRACTS_FACTORY_HPP_

#include "contracts/auction_task.hpp"

namespace anoncrowd::contracts {

// Contract factory for the ledger. The verifier registry must outlive every
// contract instance; the harness owns both.
ledger::ContractFactory make_factory(const zkp::VerifierRegistry& verifiers);

}  // namespace anoncrowd::contracts

#endif
