#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mubkit/field.hpp"

namespace mubkit {

// Multiplicities of the irreducible characters of G^w (G cyclic of order p) in a diagonal
// representation. Labels are arrays over Z_p of length `width`, indexed in lex order.
class MultiplicityTable {
 public:
  MultiplicityTable(Prime p, unsigned width);

  const Prime& prime() const noexcept { return p_; }
  unsigned width() const noexcept { return width_; }
  std::size_t label_count() const noexcept { return counts_.size(); }

  std::uint64_t at(std::size_t label_index) const { return counts_[label_index]; }
  std::uint64_t at(std::span<const std::uint32_t> label) const;
  void increment(std::span<const std::uint32_t> label);

  std::vector<std::uint32_t> label(std::size_t label_index) const;
  std::size_t index_of(std::span<const std::uint32_t> label) const;
  std::uint64_t total() const;
  // Number of labels that occur exactly `multiplicity` times.
  std::size_t labels_with(std::uint64_t multiplicity) const;

 private:
  Prime p_;
  unsigned width_;
  std::vector<std::uint64_t> counts_;
};

// Exponents of the diagonal of Omega^(m): m . q(l) for each l in enumerate order. Odd p.
std::vector<std::uint32_t> omega_diagonal(const FieldCtx& ctx, const FieldElement& m);
// Exponents of the diagonal of R^(k): k . l mod p for each l.
std::vector<std::uint32_t> r_diagonal(const FieldCtx& ctx, const FieldElement& k);

// Omega family: label a occurs #{l : q(l) = a} times. Throws DomainError for p = 2.
MultiplicityTable rep_multiplicities_omega(const FieldCtx& ctx);
// R family: the regular representation, every label once.
MultiplicityTable rep_multiplicities_R(const FieldCtx& ctx);
// Omega R as a representation of G^r x G^r: joint label (q(l), l). Throws DomainError for p = 2.
MultiplicityTable rep_multiplicities_joint(const FieldCtx& ctx);

}  // namespace mubkit
