#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mubkit/poly.hpp"
#include "mubkit/prime.hpp"

namespace mubkit {

// Element of GF(p^r) as its coefficient array over the monomial basis (1, x, ..., x^(r-1)),
// constant term first. Ordering is lexicographic on (c_0, ..., c_(r-1)).
class FieldElement {
 public:
  FieldElement() = default;
  explicit FieldElement(std::vector<std::uint32_t> coeffs) : coeffs_(std::move(coeffs)) {}

  std::span<const std::uint32_t> coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::uint32_t operator[](std::size_t i) const { return coeffs_[i]; }
  bool is_zero() const noexcept;

  // "(c_0,c_1,...)"
  std::string to_tuple_string() const;
  // "c_0+c_1x+c_2x^2..." with zero terms kept; a bare "c_0" when r = 1.
  std::string to_poly_string() const;

  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;

 private:
  std::vector<std::uint32_t> coeffs_;
};

// The r symmetric r x r matrices beta_i with x^a * x^b = sum_i beta_i[a][b] x^i mod f.
class BetaTables {
 public:
  BetaTables() = default;
  BetaTables(unsigned r, std::vector<std::uint32_t> data) : r_(r), data_(std::move(data)) {}

  unsigned degree() const noexcept { return r_; }
  std::uint32_t operator()(unsigned i, unsigned a, unsigned b) const {
    return data_[(static_cast<std::size_t>(i) * r_ + a) * r_ + b];
  }

 private:
  unsigned r_ = 0;
  std::vector<std::uint32_t> data_;
};

BetaTables compute_beta_tables(const ModPolynomial& modulus);

// GF(p^r) realized as Z_p[x]/f. Immutable after construction and shareable across threads.
class FieldCtx {
 public:
  // Throws StructuralError unless the modulus is monic of degree >= 1, DomainError if reducible.
  explicit FieldCtx(const ModPolynomial& modulus);

  // r = 1 field with modulus x - g, so that x reduces to the constant g.
  static FieldCtx with_generator(Prime p, std::uint32_t g);

  // Skips the irreducibility check. Arithmetic is then in a ring, not a field; for diagnostics.
  static FieldCtx unchecked(const ModPolynomial& modulus);

  const Prime& prime() const noexcept { return modulus_.prime(); }
  std::uint32_t characteristic() const noexcept { return modulus_.prime().value(); }
  unsigned degree() const noexcept { return r_; }
  std::uint32_t size() const noexcept { return size_; }
  const ModPolynomial& modulus() const noexcept { return modulus_; }
  const BetaTables& beta() const noexcept { return beta_; }

  FieldElement zero() const;
  FieldElement one() const;
  // The class of x modulo f (the constant g when f = x - g).
  FieldElement x() const;

  // Throws StructuralError if coeffs has the wrong length or unreduced entries.
  FieldElement make(std::vector<std::uint32_t> coeffs) const;
  void check(const FieldElement& a) const;

  // Position in enumerate order: index = sum_i c_i p^(r-1-i).
  std::uint32_t index_of(const FieldElement& a) const;
  FieldElement element(std::uint32_t index) const;
  // All p^r elements in lexicographic coefficient order, zero first.
  std::vector<FieldElement> elements() const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement scale(std::uint32_t c, const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  // Product through the beta tables: result_i = sum_{a,b} a_a b_b beta_i[a][b].
  FieldElement mul_beta(const FieldElement& a, const FieldElement& b) const;
  // 0^0 = 1.
  FieldElement pow(const FieldElement& a, std::uint64_t n) const;

  // Galois trace sum_{i<r} a^(p^i). Throws InternalError if the sum is not a constant,
  // which only happens for an unchecked, reducible modulus.
  std::uint32_t trace(const FieldElement& a) const;

  bool x_is_primitive() const noexcept { return !x_powers_.empty(); }
  // Element indices of x^1, ..., x^(p^r - 1); empty unless x is primitive.
  std::span<const std::uint32_t> x_powers() const noexcept { return x_powers_; }
  // j in [0, p^r - 1) with x^j equal to the element at `index`; nullopt for zero or when x is not primitive.
  std::optional<std::uint32_t> log_x(std::uint32_t index) const;

 private:
  FieldCtx(const ModPolynomial& modulus, bool validate);

  ModPolynomial modulus_;
  unsigned r_ = 0;
  std::uint32_t size_ = 0;
  BetaTables beta_;
  std::vector<std::uint32_t> x_powers_;
  std::vector<std::uint32_t> x_log_;
};

}  // namespace mubkit
