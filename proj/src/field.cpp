#include "mubkit/field.hpp"

#include <algorithm>
#include <limits>

#include "mubkit/error.hpp"

namespace mubkit {

namespace {

constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 24;
constexpr std::uint32_t kNoLog = std::numeric_limits<std::uint32_t>::max();

// Reduce a product of length <= 2r-1 modulo the monic modulus in place; returns the low r terms.
std::vector<std::uint32_t> reduce(std::vector<std::uint64_t>& prod, const ModPolynomial& f) {
  const auto p = f.prime().value();
  const auto r = static_cast<std::size_t>(f.degree());
  for (std::size_t i = prod.size(); i-- > r;) {
    const auto c = prod[i] % p;
    if (c == 0) continue;
    for (std::size_t j = 0; j < r; ++j) {
      prod[i - r + j] = (prod[i - r + j] + c * (p - f.coeff(j))) % p;
    }
  }
  std::vector<std::uint32_t> out(r);
  for (std::size_t j = 0; j < r && j < prod.size(); ++j) out[j] = static_cast<std::uint32_t>(prod[j] % p);
  return out;
}

}  // namespace

bool FieldElement::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](auto c) { return c == 0; });
}

std::string FieldElement::to_tuple_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coeffs_[i]);
  }
  return out + ")";
}

std::string FieldElement::to_poly_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += '+';
    out += std::to_string(coeffs_[i]);
    if (i >= 1) out += 'x';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

BetaTables compute_beta_tables(const ModPolynomial& modulus) {
  if (modulus.degree() < 1 || !modulus.is_monic()) {
    throw StructuralError("beta tables need a monic modulus of degree >= 1");
  }
  const auto r = static_cast<unsigned>(modulus.degree());
  std::vector<std::uint32_t> data(static_cast<std::size_t>(r) * r * r, 0);
  // x^s mod f for s = 0 .. 2r-2
  std::vector<ModPolynomial> powers;
  for (unsigned s = 0; s + 1 < 2 * r; ++s) {
    powers.push_back(ModPolynomial::monomial(modulus.prime(), s) % modulus);
  }
  for (unsigned a = 0; a < r; ++a) {
    for (unsigned b = 0; b < r; ++b) {
      const auto& prod = powers[a + b];
      for (unsigned i = 0; i < r; ++i) {
        data[(static_cast<std::size_t>(i) * r + a) * r + b] = prod.coeff(i);
      }
    }
  }
  return BetaTables(r, std::move(data));
}

FieldCtx::FieldCtx(const ModPolynomial& modulus) : FieldCtx(modulus, true) {}

FieldCtx FieldCtx::unchecked(const ModPolynomial& modulus) { return FieldCtx(modulus, false); }

FieldCtx FieldCtx::with_generator(Prime p, std::uint32_t g) {
  if (g == 0 || g >= p.value()) {
    throw DomainError("generator must lie in [1, p)");
  }
  return FieldCtx(ModPolynomial(p, {p.value() - g, 1}));
}

FieldCtx::FieldCtx(const ModPolynomial& modulus, bool validate) : modulus_(modulus) {
  if (modulus_.degree() < 1) throw StructuralError("modulus must have degree >= 1");
  if (!modulus_.is_monic()) throw StructuralError("modulus must be monic");
  if (validate && !is_irreducible(modulus_)) {
    throw DomainError("modulus " + modulus_.to_string() + " is reducible over Z_" +
                      std::to_string(modulus_.prime().value()));
  }
  r_ = static_cast<unsigned>(modulus_.degree());
  const auto n = ipow(modulus_.prime().value(), r_);
  if (n > kMaxFieldSize) throw CapacityError("field size p^r = " + std::to_string(n) + " too large");
  size_ = static_cast<std::uint32_t>(n);
  beta_ = compute_beta_tables(modulus_);

  if (!validate) return;
  // Walk the powers of x; x is primitive iff the walk first returns to 1 at p^r - 1.
  std::vector<std::uint32_t> powers;
  std::vector<std::uint32_t> logs(size_, kNoLog);
  const auto gen = x();
  const auto one_idx = index_of(one());
  auto cur = one();
  logs[one_idx] = 0;
  for (std::uint32_t j = 1; j < size_; ++j) {
    cur = mul(cur, gen);
    const auto idx = index_of(cur);
    powers.push_back(idx);
    if (idx == one_idx) break;
    logs[idx] = j;
  }
  if (powers.size() == size_ - 1 && powers.back() == one_idx) {
    x_powers_ = std::move(powers);
    x_log_ = std::move(logs);
  }
}

FieldElement FieldCtx::zero() const { return FieldElement(std::vector<std::uint32_t>(r_, 0)); }

FieldElement FieldCtx::one() const {
  std::vector<std::uint32_t> c(r_, 0);
  c[0] = 1;
  return FieldElement(std::move(c));
}

FieldElement FieldCtx::x() const {
  const auto red = ModPolynomial::monomial(prime(), 1) % modulus_;
  std::vector<std::uint32_t> c(r_, 0);
  for (unsigned i = 0; i < r_; ++i) c[i] = red.coeff(i);
  return FieldElement(std::move(c));
}

void FieldCtx::check(const FieldElement& a) const {
  if (a.size() != r_) {
    throw StructuralError("element has " + std::to_string(a.size()) + " coefficients, field degree is " +
                          std::to_string(r_));
  }
  for (auto c : a.coeffs()) {
    if (c >= characteristic()) throw StructuralError("element coefficient not reduced mod p");
  }
}

FieldElement FieldCtx::make(std::vector<std::uint32_t> coeffs) const {
  FieldElement e(std::move(coeffs));
  check(e);
  return e;
}

std::uint32_t FieldCtx::index_of(const FieldElement& a) const {
  check(a);
  std::uint32_t idx = 0;
  for (auto c : a.coeffs()) idx = idx * characteristic() + c;
  return idx;
}

FieldElement FieldCtx::element(std::uint32_t index) const {
  if (index >= size_) throw StructuralError("element index out of range");
  std::vector<std::uint32_t> c(r_, 0);
  for (unsigned i = r_; i-- > 0;) {
    c[i] = index % characteristic();
    index /= characteristic();
  }
  return FieldElement(std::move(c));
}

std::vector<FieldElement> FieldCtx::elements() const {
  std::vector<FieldElement> out;
  out.reserve(size_);
  for (std::uint32_t i = 0; i < size_; ++i) out.push_back(element(i));
  return out;
}

FieldElement FieldCtx::add(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  std::vector<std::uint32_t> c(r_);
  for (unsigned i = 0; i < r_; ++i) c[i] = (a[i] + b[i]) % characteristic();
  return FieldElement(std::move(c));
}

FieldElement FieldCtx::sub(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  std::vector<std::uint32_t> c(r_);
  for (unsigned i = 0; i < r_; ++i) c[i] = (a[i] + characteristic() - b[i]) % characteristic();
  return FieldElement(std::move(c));
}

FieldElement FieldCtx::scale(std::uint32_t s, const FieldElement& a) const {
  check(a);
  const std::uint64_t sc = s % characteristic();
  std::vector<std::uint32_t> c(r_);
  for (unsigned i = 0; i < r_; ++i) c[i] = static_cast<std::uint32_t>(sc * a[i] % characteristic());
  return FieldElement(std::move(c));
}

FieldElement FieldCtx::mul(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  const auto p = characteristic();
  std::vector<std::uint64_t> prod(2 * r_ - 1, 0);
  for (unsigned i = 0; i < r_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < r_; ++j) {
      prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    }
  }
  return FieldElement(reduce(prod, modulus_));
}

FieldElement FieldCtx::mul_beta(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  const auto p = characteristic();
  std::vector<std::uint32_t> c(r_, 0);
  for (unsigned i = 0; i < r_; ++i) {
    std::uint64_t acc = 0;
    for (unsigned s = 0; s < r_; ++s) {
      for (unsigned t = 0; t < r_; ++t) {
        acc = (acc + std::uint64_t{a[s]} * b[t] % p * beta_(i, s, t)) % p;
      }
    }
    c[i] = static_cast<std::uint32_t>(acc);
  }
  return FieldElement(std::move(c));
}

FieldElement FieldCtx::pow(const FieldElement& a, std::uint64_t n) const {
  check(a);
  auto result = one();
  auto base = a;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    n >>= 1;
    if (n > 0) base = mul(base, base);
  }
  return result;
}

std::uint32_t FieldCtx::trace(const FieldElement& a) const {
  check(a);
  auto term = a;
  auto sum = a;
  for (unsigned i = 1; i < r_; ++i) {
    term = pow(term, characteristic());
    sum = add(sum, term);
  }
  for (unsigned i = 1; i < r_; ++i) {
    if (sum[i] != 0) {
      throw InternalError("trace of " + a.to_tuple_string() + " is not in Z_p: " + sum.to_tuple_string());
    }
  }
  return sum[0];
}

std::optional<std::uint32_t> FieldCtx::log_x(std::uint32_t index) const {
  if (x_log_.empty() || index >= size_ || x_log_[index] == kNoLog) return std::nullopt;
  return x_log_[index];
}

}  // namespace mubkit
