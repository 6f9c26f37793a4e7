#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace tendo::detail {

/// Exponents of ζ₈ for ⟨a⟩, a running over square_class_table(p); unused slots are zero.
struct WeilTableRow {
  std::int64_t p;
  std::array<int, 8> exponents;
};

std::span<const WeilTableRow> weil_table_rows();

}  // namespace tendo::detail
