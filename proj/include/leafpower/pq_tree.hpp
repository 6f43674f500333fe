#pragma once

#include <optional>
#include <vector>

namespace leafpower {

// Consecutive-ones problem: order the columns 0..columns-1 so that the
// columns of every row appear consecutively. Returns such an order, or
// nullopt when none exists. Deterministic for fixed input.
std::optional<std::vector<int>> consecutive_ones_order(int columns,
                                                       const std::vector<std::vector<int>>& rows);

}  // namespace leafpower
