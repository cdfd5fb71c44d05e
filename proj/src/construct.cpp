#include "mubkit/construct.hpp"

#include <string>

#include "mubkit/error.hpp"

namespace mubkit {

namespace {

void require_odd(const FieldCtx& ctx, Route route) {
  if (!ctx.prime().is_odd()) {
    throw UnsupportedRouteError("route '" + std::string(to_string(route)) +
                                "' needs odd p; use route char2 for p = 2");
  }
}

// Digits of every element index, row-major N x r.
std::vector<std::uint32_t> digit_table(const FieldCtx& ctx) {
  const auto n = ctx.size();
  const auto r = ctx.degree();
  std::vector<std::uint32_t> out(static_cast<std::size_t>(n) * r);
  for (std::uint32_t i = 0; i < n; ++i) {
    auto rest = i;
    for (unsigned d = r; d-- > 0;) {
      out[static_cast<std::size_t>(i) * r + d] = rest % ctx.characteristic();
      rest /= ctx.characteristic();
    }
  }
  return out;
}

std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b, std::uint32_t mod) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::uint64_t{a[i]} * b[i];
  return static_cast<std::uint32_t>(acc % mod);
}

}  // namespace

std::string_view to_string(Route route) {
  switch (route) {
    case Route::trace: return "trace";
    case Route::q: return "q";
    case Route::tensor: return "tensor";
    case Route::char2: return "char2";
  }
  return "?";
}

std::string_view to_string(RootBase base) { return base == RootBase::i ? "i" : "omega-p"; }

Route parse_route(std::string_view s) {
  if (s == "trace") return Route::trace;
  if (s == "q") return Route::q;
  if (s == "tensor") return Route::tensor;
  if (s == "char2") return Route::char2;
  throw StructuralError("unknown route '" + std::string(s) + "'");
}

RootBase parse_root_base(std::string_view s) {
  if (s == "omega-p") return RootBase::omega_p;
  if (s == "i") return RootBase::i;
  throw StructuralError("unknown base tag '" + std::string(s) + "'");
}

ExponentMatrix::ExponentMatrix(Prime p, unsigned r, RootBase base) : p_(p), r_(r), base_(base) {
  if ((base == RootBase::i) == p.is_odd()) {
    throw StructuralError("base tag '" + std::string(to_string(base)) + "' does not match p = " +
                          std::to_string(p.value()));
  }
  const auto n = ipow(p.value(), r);
  if (n > (std::uint64_t{1} << 20) || n * n * n > kMaxDenseEntries) {
    throw CapacityError("exponent matrix for N = " + std::to_string(n) + " exceeds the dense allocation cap");
  }
  n_ = static_cast<std::uint32_t>(n);
  data_.assign(static_cast<std::size_t>(n_) * n_ * n_, 0);
}

std::vector<std::uint32_t> character_vector(const Prime& p, std::uint32_t label) {
  std::vector<std::uint32_t> out(p.value());
  for (std::uint32_t j = 0; j < p.value(); ++j) {
    out[j] = static_cast<std::uint32_t>(std::uint64_t{label % p.value()} * j % p.value());
  }
  return out;
}

FieldElement q_vector(const FieldElement& l, const FieldCtx& ctx) {
  ctx.check(l);
  const auto r = ctx.degree();
  const auto p = ctx.characteristic();
  std::vector<std::uint32_t> q(r, 0);
  for (unsigned i = 0; i < r; ++i) {
    std::uint64_t acc = 0;
    for (unsigned a = 0; a < r; ++a) {
      for (unsigned b = 0; b < r; ++b) {
        acc = (acc + std::uint64_t{l[a]} * l[b] % p * ctx.beta()(i, a, b)) % p;
      }
    }
    q[i] = static_cast<std::uint32_t>(acc);
  }
  return FieldElement(std::move(q));
}

std::vector<std::uint32_t> q_table(const FieldCtx& ctx) {
  const auto n = ctx.size();
  std::vector<std::uint32_t> out(n, 0);
  if (ctx.x_is_primitive()) {
    // q(x^j) = x^(2j); x_powers[j-1] holds x^j.
    const auto powers = ctx.x_powers();
    const std::uint64_t period = n - 1;
    for (std::uint64_t j = 1; j <= period; ++j) {
      const auto sq = (2 * j - 1) % period;
      out[powers[j - 1]] = powers[sq];
    }
    return out;
  }
  for (std::uint32_t i = 0; i < n; ++i) out[i] = ctx.index_of(q_vector(ctx.element(i), ctx));
  return out;
}

ExponentMatrix build_route_trace(const FieldCtx& ctx, Exec exec) {
  require_odd(ctx, Route::trace);
  ExponentMatrix em(ctx.prime(), ctx.degree(), RootBase::omega_p);
  const auto n = ctx.size();
  const auto p = ctx.characteristic();
  const auto elems = ctx.elements();
  std::vector<std::uint32_t> tr(n);
  for (std::uint32_t i = 0; i < n; ++i) tr[i] = ctx.trace(elems[i]);

  // Tr[m l^2 + k l] = Tr[m l^2] + Tr[k l]
  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
  for (std::int64_t li = 0; li < rows; ++li) {
    const auto& l = elems[static_cast<std::size_t>(li)];
    const auto sq = ctx.mul(l, l);
    std::vector<std::uint32_t> quad(n), lin(n);
    for (std::uint32_t m = 0; m < n; ++m) quad[m] = tr[ctx.index_of(ctx.mul(elems[m], sq))];
    for (std::uint32_t k = 0; k < n; ++k) lin[k] = tr[ctx.index_of(ctx.mul(elems[k], l))];
    auto row = em.row(static_cast<std::uint32_t>(li));
    for (std::uint32_t m = 0; m < n; ++m) {
      for (std::uint32_t k = 0; k < n; ++k) {
        row[static_cast<std::size_t>(m) * n + k] = static_cast<std::uint16_t>((quad[m] + lin[k]) % p);
      }
    }
  }
  return em;
}

ExponentMatrix build_route_q(const FieldCtx& ctx, Exec exec) {
  require_odd(ctx, Route::q);
  ExponentMatrix em(ctx.prime(), ctx.degree(), RootBase::omega_p);
  const auto n = ctx.size();
  const auto r = ctx.degree();
  const auto p = ctx.characteristic();
  const auto digits = digit_table(ctx);
  const auto digits_of = [&](std::uint32_t idx) {
    return std::span<const std::uint32_t>(digits.data() + static_cast<std::size_t>(idx) * r, r);
  };
  std::vector<std::uint32_t> q(n);
  for (std::uint32_t i = 0; i < n; ++i) q[i] = ctx.index_of(q_vector(ctx.element(i), ctx));

  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
  for (std::int64_t li = 0; li < rows; ++li) {
    const auto l = static_cast<std::uint32_t>(li);
    std::vector<std::uint32_t> quad(n), lin(n);
    for (std::uint32_t m = 0; m < n; ++m) quad[m] = dot_mod(digits_of(m), digits_of(q[l]), p);
    for (std::uint32_t k = 0; k < n; ++k) lin[k] = dot_mod(digits_of(k), digits_of(l), p);
    auto row = em.row(l);
    for (std::uint32_t m = 0; m < n; ++m) {
      for (std::uint32_t k = 0; k < n; ++k) {
        row[static_cast<std::size_t>(m) * n + k] = static_cast<std::uint16_t>((quad[m] + lin[k]) % p);
      }
    }
  }
  return em;
}

ExponentMatrix build_route_tensor(const FieldCtx& ctx, Exec exec) {
  require_odd(ctx, Route::tensor);
  ExponentMatrix em(ctx.prime(), ctx.degree(), RootBase::omega_p);
  const auto n = ctx.size();
  const auto p = ctx.characteristic();
  const auto squares = q_table(ctx);

  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
  for (std::int64_t li = 0; li < rows; ++li) {
    const auto l = static_cast<std::uint32_t>(li);
    const auto le = ctx.element(l);
    const auto qe = ctx.element(squares[l]);
    std::vector<std::uint32_t> labels(qe.coeffs().begin(), qe.coeffs().end());
    labels.insert(labels.end(), le.coeffs().begin(), le.coeffs().end());

    // Kronecker product, earlier factors vary slowest.
    std::vector<std::uint32_t> acc{0};
    for (auto label : labels) {
      const auto chi = character_vector(ctx.prime(), label);
      std::vector<std::uint32_t> next;
      next.reserve(acc.size() * p);
      for (auto a : acc) {
        for (auto c : chi) next.push_back((a + c) % p);
      }
      acc = std::move(next);
    }
    auto row = em.row(l);
    for (std::size_t c = 0; c < acc.size(); ++c) row[c] = static_cast<std::uint16_t>(acc[c]);
  }
  return em;
}

ExponentMatrix build_route_char2(const FieldCtx& ctx, Exec exec) {
  if (ctx.prime().is_odd()) {
    throw UnsupportedRouteError("route 'char2' needs p = 2");
  }
  ExponentMatrix em(ctx.prime(), ctx.degree(), RootBase::i);
  const auto n = ctx.size();
  const auto r = ctx.degree();
  const auto digits = digit_table(ctx);
  const auto digits_of = [&](std::uint32_t idx) {
    return std::span<const std::uint32_t>(digits.data() + static_cast<std::size_t>(idx) * r, r);
  };

  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
  for (std::int64_t li = 0; li < rows; ++li) {
    const auto l = static_cast<std::uint32_t>(li);
    const auto ld = digits_of(l);
    // q~_i(l) = l^T beta_i l over the integers, kept mod 4
    std::vector<std::uint32_t> qt(r, 0);
    for (unsigned i = 0; i < r; ++i) {
      std::uint32_t acc = 0;
      for (unsigned a = 0; a < r; ++a) {
        for (unsigned b = 0; b < r; ++b) acc += ld[a] * ld[b] * ctx.beta()(i, a, b);
      }
      qt[i] = acc % 4;
    }
    std::vector<std::uint32_t> quad(n), lin(n);
    for (std::uint32_t m = 0; m < n; ++m) quad[m] = dot_mod(digits_of(m), qt, 4);
    for (std::uint32_t k = 0; k < n; ++k) lin[k] = 2 * dot_mod(digits_of(k), ld, 2);
    auto row = em.row(l);
    for (std::uint32_t m = 0; m < n; ++m) {
      for (std::uint32_t k = 0; k < n; ++k) {
        row[static_cast<std::size_t>(m) * n + k] = static_cast<std::uint16_t>((quad[m] + lin[k]) % 4);
      }
    }
  }
  return em;
}

ExponentMatrix build_route(const FieldCtx& ctx, Route route, Exec exec) {
  switch (route) {
    case Route::trace: return build_route_trace(ctx, exec);
    case Route::q: return build_route_q(ctx, exec);
    case Route::tensor: return build_route_tensor(ctx, exec);
    case Route::char2: return build_route_char2(ctx, exec);
  }
  throw StructuralError("unknown route");
}

std::optional<std::vector<std::uint32_t>> decode_tensor_labels(const ExponentMatrix& em, std::uint32_t row) {
  if (em.base() != RootBase::omega_p) return std::nullopt;
  const auto p = em.prime().value();
  const auto width = 2 * em.degree();
  const auto values = em.row(row);
  // label j is the exponent at the column whose digit j is 1 and all others 0
  std::vector<std::uint32_t> labels(width);
  std::uint64_t place = 1;
  for (unsigned j = width; j-- > 0;) {
    labels[j] = values[place];
    place *= p;
  }
  for (std::size_t c = 0; c < values.size(); ++c) {
    std::uint64_t rest = c, expect = 0;
    for (unsigned j = width; j-- > 0;) {
      expect += std::uint64_t{labels[j]} * (rest % p);
      rest /= p;
    }
    if (values[c] != expect % p) return std::nullopt;
  }
  return labels;
}

MubSet::MubSet(ExponentMatrix exponents, bool includes_standard, Provenance provenance)
    : exponents_(std::move(exponents)), includes_standard_(includes_standard), provenance_(std::move(provenance)) {
  if (provenance_.p != exponents_.prime().value() || provenance_.r != exponents_.degree()) {
    throw StructuralError("provenance does not match exponent matrix shape");
  }
}

MubSet assemble_mub_set(ExponentMatrix em, const FieldCtx& ctx, Route route) {
  if (!(em.prime() == ctx.prime()) || em.degree() != ctx.degree()) {
    throw StructuralError("exponent matrix does not belong to the field");
  }
  Provenance prov;
  prov.p = ctx.characteristic();
  prov.r = ctx.degree();
  prov.modulus.assign(ctx.modulus().coeffs().begin(), ctx.modulus().coeffs().end());
  prov.route = route;
  return MubSet(std::move(em), true, std::move(prov));
}

MubSet build_mub_set(const FieldCtx& ctx, Route route, Exec exec) {
  return assemble_mub_set(build_route(ctx, route, exec), ctx, route);
}

}  // namespace mubkit
