#include "chronos/errors.hpp"

#include <utility>

namespace chronos {

ContractError::ContractError(std::string contract, const std::string& message)
    : std::invalid_argument(contract + ": " + message), contract_(std::move(contract)), message_(message) {}

}  // namespace chronos
