#include "mubkit/poly.hpp"

#include <algorithm>

#include "mubkit/error.hpp"

namespace mubkit {

namespace {

std::uint32_t mulmod(std::uint64_t a, std::uint64_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(a * b % p);
}

std::uint32_t inverse(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw DomainError("zero is not invertible mod p");
  std::uint64_t result = 1, base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

void require_same_field(const ModPolynomial& a, const ModPolynomial& b) {
  if (!(a.prime() == b.prime())) throw StructuralError("polynomials over different primes");
}

}  // namespace

ModPolynomial::ModPolynomial(Prime p, std::vector<std::uint32_t> coeffs)
    : p_(p), coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_) {
    if (c >= p_.value()) {
      throw StructuralError("coefficient " + std::to_string(c) + " not reduced mod " +
                            std::to_string(p_.value()));
    }
  }
  normalize();
}

ModPolynomial ModPolynomial::monomial(Prime p, unsigned degree, std::uint32_t coeff) {
  std::vector<std::uint32_t> c(degree + 1, 0);
  c[degree] = coeff % p.value();
  return ModPolynomial(p, std::move(c));
}

void ModPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string ModPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const auto c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += 'x';
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out;
}

ModPolynomial operator+(const ModPolynomial& a, const ModPolynomial& b) {
  require_same_field(a, b);
  const auto p = a.prime().value();
  std::vector<std::uint32_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coeff(i) + b.coeff(i)) % p;
  return ModPolynomial(a.prime(), std::move(c));
}

ModPolynomial operator-(const ModPolynomial& a, const ModPolynomial& b) {
  require_same_field(a, b);
  const auto p = a.prime().value();
  std::vector<std::uint32_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coeff(i) + p - b.coeff(i)) % p;
  return ModPolynomial(a.prime(), std::move(c));
}

ModPolynomial operator*(const ModPolynomial& a, const ModPolynomial& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return ModPolynomial::zero(a.prime());
  const auto p = a.prime().value();
  std::vector<std::uint64_t> acc(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      acc[i + j] = (acc[i + j] + std::uint64_t{a.coeffs()[i]} * b.coeffs()[j]) % p;
    }
  }
  return ModPolynomial(a.prime(), std::vector<std::uint32_t>(acc.begin(), acc.end()));
}

std::pair<ModPolynomial, ModPolynomial> divmod(const ModPolynomial& a, const ModPolynomial& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const auto p = a.prime().value();
  std::vector<std::uint32_t> rem(a.coeffs().begin(), a.coeffs().end());
  const auto db = static_cast<std::size_t>(b.degree());
  if (rem.size() <= db) return {ModPolynomial::zero(a.prime()), a};

  std::vector<std::uint32_t> quot(rem.size() - db, 0);
  const auto lead_inv = inverse(b.coeffs()[db], p);
  for (std::size_t i = rem.size(); i-- > db;) {
    const auto c = mulmod(rem[i], lead_inv, p);
    if (c == 0) continue;
    quot[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[i - db + j] = (rem[i - db + j] + p - mulmod(c, b.coeffs()[j], p)) % p;
    }
  }
  rem.resize(db);
  return {ModPolynomial(a.prime(), std::move(quot)), ModPolynomial(a.prime(), std::move(rem))};
}

ModPolynomial operator%(const ModPolynomial& a, const ModPolynomial& b) { return divmod(a, b).second; }

ModPolynomial gcd(ModPolynomial a, ModPolynomial b) {
  require_same_field(a, b);
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  const auto p = a.prime().value();
  const auto lead_inv = inverse(a.coeffs().back(), p);
  std::vector<std::uint32_t> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& v : c) v = mulmod(v, lead_inv, p);
  return ModPolynomial(a.prime(), std::move(c));
}

ModPolynomial powmod(const ModPolynomial& base, std::uint64_t exp, const ModPolynomial& modulus) {
  auto result = ModPolynomial::monomial(base.prime(), 0) % modulus;
  auto b = base % modulus;
  while (exp > 0) {
    if (exp & 1) result = (result * b) % modulus;
    exp >>= 1;
    if (exp > 0) b = (b * b) % modulus;
  }
  return result;
}

bool is_irreducible(const ModPolynomial& f) {
  if (f.degree() < 1) throw StructuralError("irreducibility test needs degree >= 1");
  if (!f.is_monic()) throw StructuralError("irreducibility test needs a monic polynomial");
  const auto r = static_cast<unsigned>(f.degree());
  if (r == 1) return true;

  const auto p = f.prime();
  const auto x = ModPolynomial::monomial(p, 1) % f;

  // frob[i] = x^(p^i) mod f
  std::vector<ModPolynomial> frob;
  frob.reserve(r + 1);
  frob.push_back(x);
  for (unsigned i = 1; i <= r; ++i) frob.push_back(powmod(frob.back(), p.value(), f));

  if (!(frob[r] == x)) return false;
  for (auto t : prime_factors(r)) {
    const auto g = gcd(frob[r / t] - x, f);
    if (g.degree() != 0) return false;
  }
  return true;
}

std::optional<ModPolynomial> find_factor(const ModPolynomial& f) {
  if (f.degree() < 1) throw StructuralError("factor search needs degree >= 1");
  const auto p = f.prime();
  const auto half = static_cast<unsigned>(f.degree()) / 2;
  for (unsigned d = 1; d <= half; ++d) {
    const auto count = ipow(p.value(), d);
    for (std::uint64_t t = 0; t < count; ++t) {
      // digits of t: most significant is c_0
      std::vector<std::uint32_t> c(d + 1, 0);
      auto rest = t;
      for (unsigned i = d; i-- > 0;) {
        c[i] = static_cast<std::uint32_t>(rest % p.value());
        rest /= p.value();
      }
      c[d] = 1;
      ModPolynomial g(p, std::move(c));
      if ((f % g).is_zero()) return g;
    }
  }
  return std::nullopt;
}

}  // namespace mubkit
