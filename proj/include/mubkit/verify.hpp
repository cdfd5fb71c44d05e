#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mubkit/construct.hpp"

namespace mubkit {

enum class VerifyMode { numeric, exact };

// same_vector: |<u,u>|^2 = 1; same_basis: distinct vectors of one basis, target 0;
// cross_basis: vectors from different bases (standard basis included), target 1/N.
enum class PairClass { same_vector = 0, same_basis = 1, cross_basis = 2 };

std::string_view to_string(VerifyMode mode);
std::string_view to_string(PairClass cls);
VerifyMode parse_verify_mode(std::string_view s);

struct VectorRef {
  std::uint32_t basis = 0;
  std::uint32_t index = 0;

  friend bool operator==(const VectorRef&, const VectorRef&) = default;
};

struct PairFailure {
  VectorRef a;
  VectorRef b;
  PairClass cls = PairClass::cross_basis;
  // Numeric: | |<a,b>|^2 - target |. Exact: same quantity when the certificate is a
  // rational integer, NaN otherwise.
  double deviation = 0;
  std::string detail;

  friend bool operator==(const PairFailure&, const PairFailure&) = default;
};

struct ClassSummary {
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  double worst_deviation = 0;

  friend bool operator==(const ClassSummary&, const ClassSummary&) = default;
};

struct VerificationReport {
  VerifyMode mode = VerifyMode::numeric;
  std::uint32_t dimension = 0;
  std::uint32_t basis_count = 0;
  double tolerance = 0;
  std::array<ClassSummary, 3> classes{};
  std::uint64_t failure_count = 0;
  // First failures in (basis, index) pair order, truncated to the recording limit.
  std::vector<PairFailure> failures;
  bool pass = false;
  std::chrono::nanoseconds elapsed{0};

  double worst_deviation() const;
  const ClassSummary& summary(PairClass cls) const { return classes[static_cast<std::size_t>(cls)]; }
};

inline constexpr double kDefaultTolerance = 1e-9;

// Checks every pair of vectors against |<u,v>|^2 = delta delta' + (1 - delta)/N.
// Works on unscaled root-of-unity sums S and compares |S|^2 against N^2, 0, or N.
// Exact mode certifies each |S|^2 as a rational integer in Z[omega]; tol is ignored.
// Exec::parallel runs the OpenMP kernel; Exec::serial runs the direct reference implementation.
VerificationReport verify_mub(const MubSet& set, VerifyMode mode, double tol = kDefaultTolerance,
                              Exec exec = Exec::parallel, std::size_t max_recorded = 32);

}  // namespace mubkit
