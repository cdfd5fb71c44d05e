#include "mubkit/prime.hpp"

#include <limits>
#include <string>

#include "mubkit/error.hpp"

namespace mubkit {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) {
      throw CapacityError("integer power overflows 64 bits");
    }
    result *= base;
  }
  return result;
}

Prime::Prime(std::uint64_t value) {
  if (value > std::numeric_limits<std::uint32_t>::max()) {
    throw DomainError("characteristic " + std::to_string(value) + " does not fit in 32 bits");
  }
  if (!is_prime(value)) {
    throw DomainError(std::to_string(value) + " is not prime");
  }
  value_ = static_cast<std::uint32_t>(value);
}

static std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) result = result * a % m;
    a = a * a % m;
    e >>= 1;
  }
  return result;
}

std::uint64_t order_mod(std::uint64_t a, const Prime& p) {
  const std::uint64_t m = p.value();
  a %= m;
  if (a == 0) throw DomainError("zero has no multiplicative order");
  std::uint64_t n = m - 1;
  for (auto q : prime_factors(m - 1)) {
    while (n % q == 0 && powmod(a, n / q, m) == 1) n /= q;
  }
  return n;
}

std::uint32_t least_primitive_root(const Prime& p) {
  for (std::uint32_t g = 1; g < p.value(); ++g) {
    if (order_mod(g, p) == p.value() - 1) return g;
  }
  throw InternalError("no primitive root found");
}

}  // namespace mubkit
