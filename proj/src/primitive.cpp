#include "mubkit/primitive.hpp"

#include <limits>
#include <string>

#include "mubkit/error.hpp"

namespace mubkit {

namespace {

// Monic degree-r candidate whose low coefficients are the base-p digits of t, c_0 most significant.
ModPolynomial candidate(const Prime& p, unsigned r, std::uint64_t t) {
  std::vector<std::uint32_t> c(r + 1, 0);
  for (unsigned i = r; i-- > 0;) {
    c[i] = static_cast<std::uint32_t>(t % p.value());
    t /= p.value();
  }
  c[r] = 1;
  return ModPolynomial(p, std::move(c));
}

template <typename Pred>
ModPolynomial lex_least(const Prime& p, unsigned r, std::uint64_t max_size, Pred accept,
                        const char* what) {
  if (r < 1) throw DomainError("degree must be >= 1");
  const auto count = ipow(p.value(), r);
  if (count > max_size) {
    throw CapacityError("p^r = " + std::to_string(count) + " exceeds cap " + std::to_string(max_size));
  }
  const auto n = static_cast<std::int64_t>(count);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(dynamic, 16) reduction(min : best)
  for (std::int64_t t = 0; t < n; ++t) {
    if (t < best && accept(candidate(p, r, static_cast<std::uint64_t>(t)))) best = t;
  }
  if (best == std::numeric_limits<std::int64_t>::max()) {
    throw InternalError(std::string("no ") + what + " polynomial found");
  }
  return candidate(p, r, static_cast<std::uint64_t>(best));
}

}  // namespace

std::uint64_t element_order(const FieldElement& a, const FieldCtx& ctx) {
  ctx.check(a);
  if (a.is_zero()) throw DomainError("zero has no multiplicative order");
  std::uint64_t n = ctx.size() - 1;
  const auto one = ctx.one();
  for (auto q : prime_factors(ctx.size() - 1)) {
    while (n % q == 0 && ctx.pow(a, n / q) == one) n /= q;
  }
  return n;
}

bool is_primitive_poly(const ModPolynomial& f) {
  if (!is_irreducible(f)) return false;
  const auto& p = f.prime();
  const auto order = ipow(p.value(), static_cast<unsigned>(f.degree())) - 1;
  const auto one = ModPolynomial::monomial(p, 0);
  const auto x = ModPolynomial::monomial(p, 1);
  if (!(powmod(x, order, f) == one)) return false;
  for (auto q : prime_factors(order)) {
    if (powmod(x, order / q, f) == one) return false;
  }
  return true;
}

ModPolynomial search_primitive_poly(const Prime& p, unsigned r, std::uint64_t max_size) {
  if (r == 1) {
    if (p.value() > max_size) {
      throw CapacityError("p = " + std::to_string(p.value()) + " exceeds cap " + std::to_string(max_size));
    }
    const auto g = least_primitive_root(p);
    return ModPolynomial(p, {(p.value() - g) % p.value(), 1});
  }
  return lex_least(p, r, max_size, [](const ModPolynomial& f) { return is_primitive_poly(f); },
                   "primitive");
}

ModPolynomial search_irreducible_poly(const Prime& p, unsigned r, std::uint64_t max_size) {
  return lex_least(p, r, max_size, [](const ModPolynomial& f) { return is_irreducible(f); },
                   "irreducible");
}

}  // namespace mubkit
