#include "chronos/fixtures.hpp"

#include "chronos/errors.hpp"

#include <cmath>

namespace chronos::fixtures {

std::shared_ptr<const EnergySpectrum> ladder(std::size_t n) {
    std::vector<std::vector<std::int64_t>> rows;
    for (std::size_t k = 0; k < n; ++k) rows.push_back({static_cast<std::int64_t>(k)});
    return std::make_shared<const EnergySpectrum>(BaseFrequencies({Extended(1)}, true), std::move(rows));
}

std::shared_ptr<const EnergySpectrum> three_level_sqrt2() {
    return std::make_shared<const EnergySpectrum>(BaseFrequencies({Extended(1), parse_extended("sqrt2")}, true),
                                                  std::vector<std::vector<std::int64_t>>{{0, 0}, {1, 0}, {0, 1}});
}

std::shared_ptr<const EnergySpectrum> four_level_sqrt2() {
    return std::make_shared<const EnergySpectrum>(
        BaseFrequencies({Extended(1), parse_extended("sqrt2")}, true),
        std::vector<std::vector<std::int64_t>>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
}

Fixture by_name(const std::string& name) {
    if (name == "two-level") {
        auto s = ladder(2);
        const double h = 1.0 / std::sqrt(2.0);
        return {s, QuantumState(s, {h, h})};
    }
    if (name == "three-level-sqrt2") {
        auto s = three_level_sqrt2();
        return {s, QuantumState(s, {1.0, 1.0, 1.0})};
    }
    if (name == "eigenstate") {
        auto s = three_level_sqrt2();
        return {s, basis_state(s, 1)};
    }
    if (name == "four-level-quasi") {
        auto s = four_level_sqrt2();
        return {s, random_state(s, 7)};
    }
    throw ContractError("fixture", "unknown fixture '" + name + "'");
}

std::vector<std::string> names() { return {"two-level", "three-level-sqrt2", "eigenstate", "four-level-quasi"}; }

}  // namespace chronos::fixtures
