#pragma once

#include <stdexcept>
#include <string>

namespace chronos {

// Raised when an operation's precondition or an input invariant is violated.
// contract() names the operation (or type) whose contract was broken.
class ContractError : public std::invalid_argument {
public:
    ContractError(std::string contract, const std::string& message);

    const std::string& contract() const noexcept { return contract_; }
    // The message without the "contract: " prefix that what() carries.
    const std::string& message() const noexcept { return message_; }

private:
    std::string contract_;
    std::string message_;
};

}  // namespace chronos
