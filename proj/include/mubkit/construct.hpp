#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mubkit/field.hpp"

namespace mubkit {

enum class Route { trace, q, tensor, char2 };

// Roots of unity an exponent refers to: omega = e^(2 pi i / p), or i for characteristic 2.
enum class RootBase { omega_p, i };

// Kernel execution policy. `serial` is the single-threaded reference path.
enum class Exec { serial, parallel };

std::string_view to_string(Route route);
std::string_view to_string(RootBase base);
Route parse_route(std::string_view s);
RootBase parse_root_base(std::string_view s);

// Largest N^3 exponent matrix the library will allocate.
inline constexpr std::uint64_t kMaxDenseEntries = std::uint64_t{1} << 28;

// N x N^2 matrix of root-of-unity exponents. Row l follows enumerate order of GF(p^r);
// column m*N + k is the (m, k) pair in m-major lexicographic order. The 1/sqrt(N) scale is implied.
class ExponentMatrix {
 public:
  // Throws CapacityError if N^3 exceeds kMaxDenseEntries.
  ExponentMatrix(Prime p, unsigned r, RootBase base);

  const Prime& prime() const noexcept { return p_; }
  unsigned degree() const noexcept { return r_; }
  RootBase base() const noexcept { return base_; }
  std::uint32_t dimension() const noexcept { return n_; }
  std::uint32_t columns() const noexcept { return n_ * n_; }
  // Exponents live in [0, root_order()): p for omega_p, 4 for i.
  std::uint32_t root_order() const noexcept { return base_ == RootBase::i ? 4 : p_.value(); }

  std::uint16_t at(std::uint32_t row, std::uint32_t col) const {
    return data_[static_cast<std::size_t>(row) * columns() + col];
  }
  std::uint16_t& at(std::uint32_t row, std::uint32_t col) {
    return data_[static_cast<std::size_t>(row) * columns() + col];
  }
  std::span<const std::uint16_t> row(std::uint32_t l) const {
    return {data_.data() + static_cast<std::size_t>(l) * columns(), columns()};
  }
  std::span<std::uint16_t> row(std::uint32_t l) {
    return {data_.data() + static_cast<std::size_t>(l) * columns(), columns()};
  }
  std::span<const std::uint16_t> data() const noexcept { return data_; }

  friend bool operator==(const ExponentMatrix&, const ExponentMatrix&) = default;

 private:
  Prime p_;
  unsigned r_;
  RootBase base_;
  std::uint32_t n_;
  std::vector<std::uint16_t> data_;
};

// Character vector of the cyclic group of order p: exponents label * j mod p, j = 0..p-1.
std::vector<std::uint32_t> character_vector(const Prime& p, std::uint32_t label);

// q_i(l) = l^T beta_i l mod p. Equals the coefficients of l^2.
FieldElement q_vector(const FieldElement& l, const FieldCtx& ctx);

// Element index of q(l) for every l index. Uses the power table of x when x is primitive
// (q(x^j) = x^(2j)), otherwise the beta quadratic forms.
std::vector<std::uint32_t> q_table(const FieldCtx& ctx);

// entry(l; m,k) = Tr[m l^2 + k l]. Odd p only.
ExponentMatrix build_route_trace(const FieldCtx& ctx, Exec exec = Exec::parallel);
// entry(l; m,k) = m . q(l) + k . l over Z_p. Odd p only.
ExponentMatrix build_route_q(const FieldCtx& ctx, Exec exec = Exec::parallel);
// Row l = chi(q_0(l)) x ... x chi(q_(r-1)(l)) x chi(l_0) x ... x chi(l_(r-1)). Odd p only.
ExponentMatrix build_route_tensor(const FieldCtx& ctx, Exec exec = Exec::parallel);
// Exponents of i: m . q~(l) + 2 (k . l mod 2) mod 4, q~ computed over the integers. p = 2 only.
ExponentMatrix build_route_char2(const FieldCtx& ctx, Exec exec = Exec::parallel);

ExponentMatrix build_route(const FieldCtx& ctx, Route route, Exec exec = Exec::parallel);

// Character labels (a_0, ..., a_(2r-1)) when row l of an omega_p matrix is a pure tensor
// product of character vectors; nullopt otherwise.
std::optional<std::vector<std::uint32_t>> decode_tensor_labels(const ExponentMatrix& em, std::uint32_t row);

struct Provenance {
  std::uint32_t p = 0;
  unsigned r = 0;
  std::vector<std::uint32_t> modulus;  // c_0 .. c_r
  Route route = Route::q;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

// N+1 bases: basis m < N is the column strip m of the exponent matrix, basis N the standard basis.
class MubSet {
 public:
  MubSet(ExponentMatrix exponents, bool includes_standard, Provenance provenance);

  const ExponentMatrix& exponents() const noexcept { return exponents_; }
  bool includes_standard() const noexcept { return includes_standard_; }
  const Provenance& provenance() const noexcept { return provenance_; }

  std::uint32_t dimension() const noexcept { return exponents_.dimension(); }
  std::uint32_t basis_count() const noexcept { return dimension() + (includes_standard_ ? 1 : 0); }
  bool is_standard(std::uint32_t basis) const noexcept {
    return includes_standard_ && basis == dimension();
  }
  // Exponent of component l of vector k in non-standard basis m.
  std::uint16_t exponent(std::uint32_t m, std::uint32_t k, std::uint32_t l) const {
    return exponents_.at(l, m * dimension() + k);
  }

  friend bool operator==(const MubSet&, const MubSet&) = default;

 private:
  ExponentMatrix exponents_;
  bool includes_standard_;
  Provenance provenance_;
};

MubSet assemble_mub_set(ExponentMatrix em, const FieldCtx& ctx, Route route);

// Route build plus assembly. p = 2 requires Route::char2.
MubSet build_mub_set(const FieldCtx& ctx, Route route, Exec exec = Exec::parallel);

}  // namespace mubkit
