#pragma once

#include <cstdint>
#include <vector>

namespace mubkit {

bool is_prime(std::uint64_t n);

// Distinct prime divisors of n in increasing order (trial division). n = 0 or 1 yields {}.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// Checked integer power; throws CapacityError on overflow of 64 bits.
std::uint64_t ipow(std::uint64_t base, unsigned exp);

// A prime characteristic. Construction runs a deterministic primality check.
class Prime {
 public:
  explicit Prime(std::uint64_t value);

  std::uint32_t value() const noexcept { return value_; }
  bool is_odd() const noexcept { return value_ != 2; }

  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  std::uint32_t value_;
};

// Least primitive root modulo p.
std::uint32_t least_primitive_root(const Prime& p);

// Multiplicative order of a (nonzero mod p) modulo p.
std::uint64_t order_mod(std::uint64_t a, const Prime& p);

}  // namespace mubkit
