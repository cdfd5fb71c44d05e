#include "mubkit/cyclotomic.hpp"

#include <algorithm>
#include <numbers>

#include "mubkit/error.hpp"
#include "mubkit/prime.hpp"

namespace mubkit {

namespace {

void check_order(std::uint32_t order) {
  if (order == 4) return;
  if (order % 2 == 1 && is_prime(order)) return;
  throw StructuralError("cyclotomic order must be an odd prime or 4, got " + std::to_string(order));
}

void require_same(const CyclotomicInt& a, const CyclotomicInt& b) {
  if (a.order() != b.order()) throw StructuralError("cyclotomic integers of different orders");
}

}  // namespace

std::vector<std::complex<double>> root_table(std::uint32_t order) {
  if (order == 4) return {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::vector<std::complex<double>> out(order);
  for (std::uint32_t j = 0; j < order; ++j) {
    out[j] = std::polar(1.0, 2.0 * std::numbers::pi * j / order);
  }
  return out;
}

CyclotomicInt::CyclotomicInt(std::uint32_t order) : order_(order) {
  check_order(order);
  counts_.assign(order, 0);
}

CyclotomicInt::CyclotomicInt(std::uint32_t order, std::vector<std::int64_t> counts)
    : order_(order), counts_(std::move(counts)) {
  check_order(order);
  if (counts_.size() != order) throw StructuralError("count vector length must equal the order");
  canonicalize();
}

CyclotomicInt CyclotomicInt::from_exponents(std::uint32_t order, std::span<const std::uint32_t> exps) {
  CyclotomicInt out(order);
  for (auto e : exps) {
    if (e >= order) throw StructuralError("exponent not reduced");
    ++out.counts_[e];
  }
  out.canonicalize();
  return out;
}

CyclotomicInt CyclotomicInt::from_integer(std::uint32_t order, std::int64_t value) {
  CyclotomicInt out(order);
  out.counts_[0] = value;
  out.canonicalize();
  return out;
}

void CyclotomicInt::canonicalize() {
  if (order_ == 4) {
    const auto re = counts_[0] - counts_[2];
    const auto im = counts_[1] - counts_[3];
    counts_ = {std::max<std::int64_t>(re, 0), std::max<std::int64_t>(im, 0), std::max<std::int64_t>(-re, 0),
               std::max<std::int64_t>(-im, 0)};
    return;
  }
  const auto lo = *std::min_element(counts_.begin(), counts_.end());
  for (auto& c : counts_) c -= lo;
}

CyclotomicInt CyclotomicInt::conj() const {
  CyclotomicInt out(order_);
  for (std::uint32_t j = 0; j < order_; ++j) out.counts_[(order_ - j) % order_] = counts_[j];
  out.canonicalize();
  return out;
}

std::optional<std::int64_t> CyclotomicInt::as_rational_integer() const {
  if (order_ == 4) {
    if (counts_[1] != 0 || counts_[3] != 0) return std::nullopt;
    return counts_[0] - counts_[2];
  }
  for (std::uint32_t j = 2; j < order_; ++j) {
    if (counts_[j] != counts_[1]) return std::nullopt;
  }
  return counts_[0] - counts_[1];
}

std::complex<double> CyclotomicInt::to_complex() const { return to_complex(root_table(order_)); }

std::complex<double> CyclotomicInt::to_complex(std::span<const std::complex<double>> roots) const {
  std::complex<double> acc{0, 0};
  for (std::uint32_t j = 0; j < order_; ++j) acc += static_cast<double>(counts_[j]) * roots[j];
  return acc;
}

std::string CyclotomicInt::to_string() const {
  std::string out;
  const char* unit = order_ == 4 ? "i" : "w";
  for (std::uint32_t j = 0; j < order_; ++j) {
    if (counts_[j] == 0) continue;
    if (!out.empty()) out += " + ";
    if (j == 0) {
      out += std::to_string(counts_[j]);
      continue;
    }
    if (counts_[j] != 1) out += std::to_string(counts_[j]);
    out += unit;
    if (j > 1) out += "^" + std::to_string(j);
  }
  return out.empty() ? "0" : out;
}

CyclotomicInt operator+(const CyclotomicInt& a, const CyclotomicInt& b) {
  require_same(a, b);
  std::vector<std::int64_t> c(a.order_);
  for (std::uint32_t j = 0; j < a.order_; ++j) {
    if (__builtin_add_overflow(a.counts_[j], b.counts_[j], &c[j])) {
      throw CapacityError("cyclotomic coefficient overflow");
    }
  }
  return CyclotomicInt(a.order_, std::move(c));
}

CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
  require_same(a, b);
  const auto n = a.order_;
  std::vector<std::int64_t> c(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (a.counts_[i] == 0) continue;
    for (std::uint32_t j = 0; j < n; ++j) {
      std::int64_t term;
      auto& slot = c[(i + j) % n];
      if (__builtin_mul_overflow(a.counts_[i], b.counts_[j], &term) ||
          __builtin_add_overflow(slot, term, &slot)) {
        throw CapacityError("cyclotomic coefficient overflow");
      }
    }
  }
  return CyclotomicInt(n, std::move(c));
}

}  // namespace mubkit
