#pragma once

#include <cstdint>

#include "mubkit/field.hpp"
#include "mubkit/poly.hpp"

namespace mubkit {

// Default cap on p^r for searches and constructions.
inline constexpr std::uint64_t kDefaultMaxFieldSize = 16384;

// Least n >= 1 with a^n = 1, found by stripping prime factors of p^r - 1.
// Throws DomainError for a = 0.
std::uint64_t element_order(const FieldElement& a, const FieldCtx& ctx);

// True iff f is irreducible and x has order p^r - 1 in Z_p[x]/f.
// Throws StructuralError if f is not monic of degree >= 1.
bool is_primitive_poly(const ModPolynomial& f);

// Deterministic primitive modulus of degree r.
// r = 1: x - g for the least primitive root g.
// r >= 2: the lex-least monic primitive polynomial ordered by (c_0, c_1, ..., c_(r-1)).
// Throws CapacityError when p^r > max_size.
ModPolynomial search_primitive_poly(const Prime& p, unsigned r,
                                    std::uint64_t max_size = kDefaultMaxFieldSize);

// Lex-least monic irreducible polynomial of degree r, same ordering as above.
ModPolynomial search_irreducible_poly(const Prime& p, unsigned r,
                                      std::uint64_t max_size = kDefaultMaxFieldSize);

}  // namespace mubkit
