#include "mubkit/relabel.hpp"

#include <algorithm>
#include <map>

namespace mubkit {

namespace {

std::vector<std::vector<std::uint16_t>> columns_of(const ExponentMatrix& em) {
  const auto n = em.dimension();
  std::vector<std::vector<std::uint16_t>> cols(em.columns(), std::vector<std::uint16_t>(n));
  for (std::uint32_t l = 0; l < n; ++l) {
    const auto row = em.row(l);
    for (std::uint32_t c = 0; c < em.columns(); ++c) cols[c][l] = row[c];
  }
  return cols;
}

bool same_shape(const ExponentMatrix& a, const ExponentMatrix& b) {
  return a.prime() == b.prime() && a.degree() == b.degree() && a.base() == b.base();
}

}  // namespace

bool same_column_multiset(const ExponentMatrix& a, const ExponentMatrix& b) {
  if (!same_shape(a, b)) return false;
  auto ca = columns_of(a);
  auto cb = columns_of(b);
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  return ca == cb;
}

std::optional<ColumnRelabeling> match_columns(const ExponentMatrix& a, const ExponentMatrix& b) {
  if (!same_shape(a, b)) return std::nullopt;
  const auto n = a.dimension();
  const auto ca = columns_of(a);
  const auto cb = columns_of(b);

  std::map<std::vector<std::uint16_t>, std::uint32_t> where;
  for (std::uint32_t c = 0; c < cb.size(); ++c) {
    if (!where.emplace(cb[c], c).second) return std::nullopt;  // repeated column
  }

  ColumnRelabeling out;
  out.column_map.resize(ca.size());
  out.strip_map.assign(n, n);
  std::vector<bool> used(cb.size(), false);
  for (std::uint32_t c = 0; c < ca.size(); ++c) {
    const auto it = where.find(ca[c]);
    if (it == where.end() || used[it->second]) return std::nullopt;
    used[it->second] = true;
    out.column_map[c] = it->second;
    const auto src_strip = c / n;
    const auto dst_strip = it->second / n;
    if (out.strip_map[src_strip] == n) {
      out.strip_map[src_strip] = dst_strip;
    } else if (out.strip_map[src_strip] != dst_strip) {
      return std::nullopt;
    }
  }
  return out;
}

}  // namespace mubkit
