#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mubkit {

// p complex roots of unity e^(2 pi i j / order), built from polar form once.
// order 4 yields exactly {1, i, -1, -i}.
std::vector<std::complex<double>> root_table(std::uint32_t order);

// Element of Z[omega] where omega is a primitive root of unity of odd prime order p,
// or of Z[i] when order = 4. Stored as a count vector over exponents 0..order-1.
//
// Canonical form: for odd p, the all-ones relation 1 + omega + ... + omega^(p-1) = 0 is
// applied by subtracting the minimum count, so the smallest count is 0. For order 4,
// i^2 = -1 is applied so that counts[j] * counts[j+2] = 0 and all counts are nonnegative.
class CyclotomicInt {
 public:
  // Throws StructuralError unless order is an odd prime or 4.
  explicit CyclotomicInt(std::uint32_t order);
  CyclotomicInt(std::uint32_t order, std::vector<std::int64_t> counts);

  static CyclotomicInt from_exponents(std::uint32_t order, std::span<const std::uint32_t> exps);
  static CyclotomicInt from_integer(std::uint32_t order, std::int64_t value);

  std::uint32_t order() const noexcept { return order_; }
  std::span<const std::int64_t> counts() const noexcept { return counts_; }

  CyclotomicInt conj() const;
  // c when the value is the rational integer c, nullopt otherwise.
  std::optional<std::int64_t> as_rational_integer() const;
  std::complex<double> to_complex() const;
  std::complex<double> to_complex(std::span<const std::complex<double>> roots) const;

  std::string to_string() const;

  friend CyclotomicInt operator+(const CyclotomicInt& a, const CyclotomicInt& b);
  // Throws CapacityError on 64-bit overflow.
  friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b);
  friend bool operator==(const CyclotomicInt&, const CyclotomicInt&) = default;

 private:
  void canonicalize();

  std::uint32_t order_;
  std::vector<std::int64_t> counts_;
};

}  // namespace mubkit
