#include "mubkit/rep.hpp"

#include <algorithm>

#include "mubkit/construct.hpp"
#include "mubkit/error.hpp"

namespace mubkit {

namespace {

void require_odd(const FieldCtx& ctx, const char* what) {
  if (!ctx.prime().is_odd()) {
    throw DomainError(std::string(what) + " is stated for odd p only");
  }
}

std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b, std::uint32_t p) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::uint64_t{a[i]} * b[i];
  return static_cast<std::uint32_t>(acc % p);
}

}  // namespace

MultiplicityTable::MultiplicityTable(Prime p, unsigned width) : p_(p), width_(width) {
  counts_.assign(ipow(p.value(), width), 0);
}

std::size_t MultiplicityTable::index_of(std::span<const std::uint32_t> label) const {
  if (label.size() != width_) throw StructuralError("label width mismatch");
  std::size_t idx = 0;
  for (auto c : label) {
    if (c >= p_.value()) throw StructuralError("label entry not reduced mod p");
    idx = idx * p_.value() + c;
  }
  return idx;
}

std::vector<std::uint32_t> MultiplicityTable::label(std::size_t label_index) const {
  std::vector<std::uint32_t> out(width_);
  for (unsigned i = width_; i-- > 0;) {
    out[i] = static_cast<std::uint32_t>(label_index % p_.value());
    label_index /= p_.value();
  }
  return out;
}

std::uint64_t MultiplicityTable::at(std::span<const std::uint32_t> label) const { return counts_[index_of(label)]; }

void MultiplicityTable::increment(std::span<const std::uint32_t> label) { ++counts_[index_of(label)]; }

std::uint64_t MultiplicityTable::total() const {
  std::uint64_t t = 0;
  for (auto c : counts_) t += c;
  return t;
}

std::size_t MultiplicityTable::labels_with(std::uint64_t multiplicity) const {
  return static_cast<std::size_t>(std::count(counts_.begin(), counts_.end(), multiplicity));
}

std::vector<std::uint32_t> omega_diagonal(const FieldCtx& ctx, const FieldElement& m) {
  require_odd(ctx, "the Omega family");
  ctx.check(m);
  std::vector<std::uint32_t> out(ctx.size());
  for (std::uint32_t l = 0; l < ctx.size(); ++l) {
    out[l] = dot_mod(m.coeffs(), q_vector(ctx.element(l), ctx).coeffs(), ctx.characteristic());
  }
  return out;
}

std::vector<std::uint32_t> r_diagonal(const FieldCtx& ctx, const FieldElement& k) {
  ctx.check(k);
  std::vector<std::uint32_t> out(ctx.size());
  for (std::uint32_t l = 0; l < ctx.size(); ++l) {
    out[l] = dot_mod(k.coeffs(), ctx.element(l).coeffs(), ctx.characteristic());
  }
  return out;
}

MultiplicityTable rep_multiplicities_omega(const FieldCtx& ctx) {
  require_odd(ctx, "the Omega family");
  MultiplicityTable t(ctx.prime(), ctx.degree());
  for (std::uint32_t l = 0; l < ctx.size(); ++l) t.increment(q_vector(ctx.element(l), ctx).coeffs());
  return t;
}

MultiplicityTable rep_multiplicities_R(const FieldCtx& ctx) {
  MultiplicityTable t(ctx.prime(), ctx.degree());
  for (std::uint32_t l = 0; l < ctx.size(); ++l) t.increment(ctx.element(l).coeffs());
  return t;
}

MultiplicityTable rep_multiplicities_joint(const FieldCtx& ctx) {
  require_odd(ctx, "the joint Omega R family");
  MultiplicityTable t(ctx.prime(), 2 * ctx.degree());
  for (std::uint32_t l = 0; l < ctx.size(); ++l) {
    const auto le = ctx.element(l);
    const auto q = q_vector(le, ctx);
    std::vector<std::uint32_t> label(q.coeffs().begin(), q.coeffs().end());
    label.insert(label.end(), le.coeffs().begin(), le.coeffs().end());
    t.increment(label);
  }
  return t;
}

}  // namespace mubkit
