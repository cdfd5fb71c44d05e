#include "mubkit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>

#include "mubkit/cyclotomic.hpp"
#include "mubkit/error.hpp"

namespace mubkit {

namespace {

using Clock = std::chrono::steady_clock;

// Outcome of a single pair check before it is folded into the report.
struct PairOutcome {
  bool ok = true;
  double deviation = 0;
  std::string detail;
};

struct Accumulator {
  std::array<ClassSummary, 3> classes{};
  std::uint64_t failure_count = 0;
  std::vector<PairFailure> failures;

  void record(PairClass cls, VectorRef a, VectorRef b, const PairOutcome& out, std::size_t cap) {
    auto& s = classes[static_cast<std::size_t>(cls)];
    ++s.checked;
    if (!std::isnan(out.deviation)) s.worst_deviation = std::max(s.worst_deviation, out.deviation);
    if (out.ok) return;
    ++s.failed;
    ++failure_count;
    if (failures.size() < cap) failures.push_back({a, b, cls, out.deviation, out.detail});
  }

  void merge(const Accumulator& other, std::size_t cap) {
    for (std::size_t c = 0; c < 3; ++c) {
      classes[c].checked += other.classes[c].checked;
      classes[c].failed += other.classes[c].failed;
      classes[c].worst_deviation = std::max(classes[c].worst_deviation, other.classes[c].worst_deviation);
    }
    failure_count += other.failure_count;
    for (const auto& f : other.failures) {
      if (failures.size() >= cap) break;
      failures.push_back(f);
    }
  }
};

PairClass classify(std::uint32_t basis_a, std::uint32_t idx_a, std::uint32_t basis_b, std::uint32_t idx_b) {
  if (basis_a != basis_b) return PairClass::cross_basis;
  return idx_a == idx_b ? PairClass::same_vector : PairClass::same_basis;
}

// Unscaled target for |S|^2.
std::int64_t exact_target(PairClass cls, std::int64_t n) {
  switch (cls) {
    case PairClass::same_vector: return n * n;
    case PairClass::same_basis: return 0;
    case PairClass::cross_basis: return n;
  }
  return -1;
}

double scaled_target(PairClass cls, double n) {
  switch (cls) {
    case PairClass::same_vector: return 1.0;
    case PairClass::same_basis: return 0.0;
    case PairClass::cross_basis: return 1.0 / n;
  }
  return -1;
}

PairOutcome judge_numeric(PairClass cls, double norm_sq_unscaled, double n, double tol) {
  const double dev = std::abs(norm_sq_unscaled / (n * n) - scaled_target(cls, n));
  PairOutcome out;
  out.deviation = dev;
  out.ok = dev <= tol;
  if (!out.ok) out.detail = "|<u,v>|^2 = " + std::to_string(norm_sq_unscaled / (n * n));
  return out;
}

PairOutcome judge_exact(PairClass cls, std::optional<std::int64_t> value, std::int64_t n,
                        const std::string& not_rational_repr) {
  PairOutcome out;
  const auto target = exact_target(cls, n);
  if (!value) {
    out.ok = false;
    out.deviation = std::numeric_limits<double>::quiet_NaN();
    out.detail = "|S|^2 = " + not_rational_repr + " is not a rational integer";
    return out;
  }
  out.deviation = std::abs(static_cast<double>(*value - target)) / static_cast<double>(n * n);
  out.ok = *value == target;
  if (!out.ok) {
    out.detail = "|S|^2 = " + std::to_string(*value) + ", expected " + std::to_string(target);
  }
  return out;
}

void check_shape(const MubSet& set) {
  const auto& em = set.exponents();
  const auto n = em.dimension();
  if (em.data().size() != static_cast<std::size_t>(n) * n * n) {
    throw StructuralError("exponent matrix strips do not have width N");
  }
  const auto order = em.root_order();
  for (auto e : em.data()) {
    if (e >= order) throw StructuralError("exponent " + std::to_string(e) + " not reduced mod " + std::to_string(order));
  }
}

// ---- reference implementation: explicit vectors, every pair, no shortcuts -------------------

VerificationReport verify_reference(const MubSet& set, VerifyMode mode, double tol, std::size_t cap) {
  const auto& em = set.exponents();
  const auto n = set.dimension();
  const auto order = em.root_order();
  const auto bases = set.basis_count();
  const auto roots = root_table(order);
  const auto nn = static_cast<std::int64_t>(n);

  // Component l of vector (basis, k): exponent, or a 0/1 entry for the standard basis.
  struct Entry {
    bool standard;
    std::uint32_t value;
  };
  const auto entry = [&](std::uint32_t basis, std::uint32_t k, std::uint32_t l) -> Entry {
    if (set.is_standard(basis)) return {true, l == k ? 1u : 0u};
    return {false, set.exponent(basis, k, l)};
  };

  Accumulator acc;
  for (std::uint32_t ba = 0; ba < bases; ++ba) {
    for (std::uint32_t ka = 0; ka < n; ++ka) {
      for (std::uint32_t bb = ba; bb < bases; ++bb) {
        for (std::uint32_t kb = (bb == ba ? ka : 0); kb < n; ++kb) {
          const auto cls = classify(ba, ka, bb, kb);
          PairOutcome out;
          if (mode == VerifyMode::numeric) {
            // Unscaled: root-of-unity entries have modulus 1, standard entries sqrt(N).
            std::complex<double> s{0, 0};
            const double sq = std::sqrt(static_cast<double>(n));
            for (std::uint32_t l = 0; l < n; ++l) {
              const auto ea = entry(ba, ka, l);
              const auto eb = entry(bb, kb, l);
              const std::complex<double> va = ea.standard ? std::complex<double>(ea.value * sq) : roots[ea.value];
              const std::complex<double> vb = eb.standard ? std::complex<double>(eb.value * sq) : roots[eb.value];
              s += std::conj(va) * vb;
            }
            out = judge_numeric(cls, std::norm(s), static_cast<double>(n), tol);
          } else {
            // Unscaled S = N <u,v>. Standard vectors scale to sqrt(N) delta, so a standard-standard
            // pair gives |S|^2 = N^2 delta and a mixed pair gives N |v_l|^2.
            std::optional<std::int64_t> value;
            CyclotomicInt norm(order);
            if (set.is_standard(ba) && set.is_standard(bb)) {
              value = ka == kb ? nn * nn : 0;
            } else if (set.is_standard(ba) || set.is_standard(bb)) {
              const std::uint32_t e = set.is_standard(ba) ? set.exponent(bb, kb, ka) : set.exponent(ba, ka, kb);
              const auto s = CyclotomicInt::from_exponents(order, std::span<const std::uint32_t>(&e, 1));
              norm = s * s.conj();
              value = norm.as_rational_integer();
              if (value) *value *= nn;
            } else {
              std::vector<std::uint32_t> diffs(n);
              for (std::uint32_t l = 0; l < n; ++l) {
                diffs[l] = (set.exponent(bb, kb, l) + order - set.exponent(ba, ka, l)) % order;
              }
              const auto s = CyclotomicInt::from_exponents(order, diffs);
              norm = s * s.conj();
              value = norm.as_rational_integer();
            }
            out = judge_exact(cls, value, nn, norm.to_string());
          }
          acc.record(cls, {ba, ka}, {bb, kb}, out, cap);
        }
      }
    }
  }

  VerificationReport rep;
  rep.classes = acc.classes;
  rep.failure_count = acc.failure_count;
  rep.failures = std::move(acc.failures);
  return rep;
}

// ---- OpenMP kernel ----------------------------------------------------------------------------

VerificationReport verify_kernel(const MubSet& set, VerifyMode mode, double tol, std::size_t cap) {
  const auto& em = set.exponents();
  const auto n = set.dimension();
  const auto order = em.root_order();
  const auto nvec = static_cast<std::size_t>(n) * n;
  const auto nn = static_cast<std::int64_t>(n);
  const auto dn = static_cast<double>(n);

  // Vectors stored contiguously: vt[g * N + l], g = m * N + k.
  std::vector<std::uint16_t> vt(nvec * n);
  for (std::uint32_t l = 0; l < n; ++l) {
    const auto row = em.row(l);
    for (std::size_t g = 0; g < nvec; ++g) vt[g * n + l] = row[g];
  }
  // Difference d = e_b - e_a + order, looked up without a modulo.
  const auto roots = root_table(order);
  std::vector<double> re(2 * order), im(2 * order);
  std::vector<std::uint32_t> wrap(2 * order);
  for (std::uint32_t d = 0; d < 2 * order; ++d) {
    re[d] = roots[d % order].real();
    im[d] = roots[d % order].imag();
    wrap[d] = d % order;
  }

  std::vector<Accumulator> per_vector(nvec);
  const auto total = static_cast<std::int64_t>(nvec);

#pragma omp parallel
  {
    std::vector<std::int64_t> hist(order);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t gi = 0; gi < total; ++gi) {
      const auto ga = static_cast<std::size_t>(gi);
      const auto* ea = vt.data() + ga * n;
      const auto ba = static_cast<std::uint32_t>(ga / n);
      const auto ka = static_cast<std::uint32_t>(ga % n);
      auto& acc = per_vector[ga];
      for (std::size_t gb = ga; gb < nvec; ++gb) {
        const auto* eb = vt.data() + gb * n;
        const auto bb = static_cast<std::uint32_t>(gb / n);
        const auto kb = static_cast<std::uint32_t>(gb % n);
        const auto cls = classify(ba, ka, bb, kb);
        PairOutcome out;
        if (mode == VerifyMode::numeric) {
          double sr = 0, si = 0;
          for (std::uint32_t l = 0; l < n; ++l) {
            const auto d = static_cast<std::uint32_t>(eb[l]) + order - ea[l];
            sr += re[d];
            si += im[d];
          }
          out = judge_numeric(cls, sr * sr + si * si, dn, tol);
        } else {
          std::fill(hist.begin(), hist.end(), 0);
          for (std::uint32_t l = 0; l < n; ++l) ++hist[wrap[static_cast<std::uint32_t>(eb[l]) + order - ea[l]]];
          // |S|^2 coefficients c_d = sum_j h_(j+d) h_j, then the rational-integer test.
          std::optional<std::int64_t> value;
          std::array<std::int64_t, 4> c4{};
          std::int64_t c0 = 0, c1 = 0;
          bool rational = true;
          for (std::uint32_t d = 0; d < order; ++d) {
            std::int64_t c = 0;
            for (std::uint32_t j = 0; j < order; ++j) c += hist[(j + d) % order] * hist[j];
            if (order == 4) {
              c4[d] = c;
            } else if (d == 0) {
              c0 = c;
            } else if (d == 1) {
              c1 = c;
            } else if (c != c1) {
              rational = false;
            }
          }
          if (order == 4) {
            if (c4[1] == c4[3]) value = c4[0] - c4[2];
          } else if (rational) {
            value = c0 - c1;
          }
          out = judge_exact(cls, value, nn, "non-rational sum");
        }
        acc.record(cls, {ba, ka}, {bb, kb}, out, cap);
      }
    }
  }

  Accumulator acc;
  for (const auto& a : per_vector) acc.merge(a, cap);

  if (set.includes_standard()) {
    const auto sb = n;
    // Standard basis against itself: <delta_k, delta_k'> = delta_kk'.
    for (std::uint32_t k = 0; k < n; ++k) {
      for (std::uint32_t k2 = k; k2 < n; ++k2) {
        acc.record(k == k2 ? PairClass::same_vector : PairClass::same_basis, {sb, k}, {sb, k2}, PairOutcome{}, cap);
      }
    }
    // |<delta_l, v>|^2 = |v_l|^2 = 1/N, i.e. every entry has modulus 1/sqrt(N).
    for (std::size_t g = 0; g < nvec; ++g) {
      for (std::uint32_t l = 0; l < n; ++l) {
        const auto e = vt[g * n + l];
        PairOutcome out;
        if (mode == VerifyMode::numeric) {
          out = judge_numeric(PairClass::cross_basis, std::norm(roots[e]) * dn, dn, tol);
        } else {
          out = judge_exact(PairClass::cross_basis, nn, nn, "");
        }
        acc.record(PairClass::cross_basis, {static_cast<std::uint32_t>(g / n), static_cast<std::uint32_t>(g % n)},
                   {sb, l}, out, cap);
      }
    }
  }

  VerificationReport rep;
  rep.classes = acc.classes;
  rep.failure_count = acc.failure_count;
  rep.failures = std::move(acc.failures);
  return rep;
}

}  // namespace

std::string_view to_string(VerifyMode mode) { return mode == VerifyMode::exact ? "exact" : "numeric"; }

std::string_view to_string(PairClass cls) {
  switch (cls) {
    case PairClass::same_vector: return "same-vector";
    case PairClass::same_basis: return "same-basis";
    case PairClass::cross_basis: return "cross-basis";
  }
  return "?";
}

VerifyMode parse_verify_mode(std::string_view s) {
  if (s == "numeric") return VerifyMode::numeric;
  if (s == "exact") return VerifyMode::exact;
  throw StructuralError("unknown verification mode '" + std::string(s) + "'");
}

double VerificationReport::worst_deviation() const {
  double w = 0;
  for (const auto& c : classes) w = std::max(w, c.worst_deviation);
  return w;
}

VerificationReport verify_mub(const MubSet& set, VerifyMode mode, double tol, Exec exec, std::size_t max_recorded) {
  const auto start = Clock::now();
  check_shape(set);
  auto rep = exec == Exec::serial ? verify_reference(set, mode, tol, max_recorded)
                                  : verify_kernel(set, mode, tol, max_recorded);
  rep.mode = mode;
  rep.dimension = set.dimension();
  rep.basis_count = set.basis_count();
  rep.tolerance = mode == VerifyMode::numeric ? tol : 0.0;
  rep.pass = rep.failure_count == 0;
  rep.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return rep;
}

}  // namespace mubkit
