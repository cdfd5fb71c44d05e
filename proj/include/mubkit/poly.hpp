#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mubkit/prime.hpp"

namespace mubkit {

// Polynomial over Z_p, little-endian coefficients (constant term first).
// Trailing zero coefficients are stripped, so the zero polynomial has no coefficients.
class ModPolynomial {
 public:
  // Throws StructuralError if a coefficient is not in [0, p).
  ModPolynomial(Prime p, std::vector<std::uint32_t> coeffs);

  static ModPolynomial zero(Prime p) { return ModPolynomial(p, {}); }
  static ModPolynomial monomial(Prime p, unsigned degree, std::uint32_t coeff = 1);

  const Prime& prime() const noexcept { return p_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
  std::span<const std::uint32_t> coeffs() const noexcept { return coeffs_; }
  std::uint32_t coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }

  // Descending-power rendering, e.g. "x^2+x+2", "2x^3+1", "0".
  std::string to_string() const;

  friend bool operator==(const ModPolynomial&, const ModPolynomial&) = default;

 private:
  void normalize();

  Prime p_;
  std::vector<std::uint32_t> coeffs_;
};

ModPolynomial operator+(const ModPolynomial& a, const ModPolynomial& b);
ModPolynomial operator-(const ModPolynomial& a, const ModPolynomial& b);
ModPolynomial operator*(const ModPolynomial& a, const ModPolynomial& b);

// Quotient and remainder; throws DomainError when dividing by zero.
std::pair<ModPolynomial, ModPolynomial> divmod(const ModPolynomial& a, const ModPolynomial& b);
ModPolynomial operator%(const ModPolynomial& a, const ModPolynomial& b);

// Monic gcd (zero if both inputs are zero).
ModPolynomial gcd(ModPolynomial a, ModPolynomial b);

ModPolynomial powmod(const ModPolynomial& base, std::uint64_t exp, const ModPolynomial& modulus);

// Irreducibility over Z_p by the Frobenius criterion: x^(p^r) = x mod f and
// gcd(x^(p^(r/t)) - x, f) = 1 for every prime t dividing r.
// Throws StructuralError if f is not monic or has degree < 1.
bool is_irreducible(const ModPolynomial& f);

// Lex-least monic factor of least degree in [1, deg f / 2], or nullopt when f is irreducible.
std::optional<ModPolynomial> find_factor(const ModPolynomial& f);

}  // namespace mubkit
