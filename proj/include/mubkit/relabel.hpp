#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mubkit/construct.hpp"

namespace mubkit {

struct ColumnRelabeling {
  // column_map[c] is the column of the target matrix equal to column c of the source.
  std::vector<std::uint32_t> column_map;
  // strip_map[m] is the target basis that source basis m lands in.
  std::vector<std::uint32_t> strip_map;
};

// True when both matrices hold the same multiset of columns.
bool same_column_multiset(const ExponentMatrix& a, const ExponentMatrix& b);

// Column bijection from a to b that maps whole width-N strips onto strips;
// nullopt if columns differ or a strip is split.
std::optional<ColumnRelabeling> match_columns(const ExponentMatrix& a, const ExponentMatrix& b);

}  // namespace mubkit
