#include <gtest/gtest.h>

#include <random>
#include <set>

#include "mubkit/error.hpp"
#include "mubkit/field.hpp"
#include "mubkit/primitive.hpp"

using namespace mubkit;

namespace {

FieldCtx gf9() { return FieldCtx(ModPolynomial(Prime(3), {2, 1, 1})); }

// Powers x^1..x^8 modulo x^2+x+2 over Z_3 as printed in the worked example.
const std::vector<std::vector<std::uint32_t>> kGf9Powers = {{0, 1}, {1, 2}, {2, 2}, {2, 0},
                                                            {0, 2}, {2, 1}, {1, 1}, {1, 0}};

std::vector<FieldCtx> sample_fields() {
  std::vector<FieldCtx> out;
  for (auto [p, r] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 3}, {2, 5}, {3, 1}, {3, 2}, {3, 3},
                                                                {5, 1}, {5, 2}, {7, 2}, {11, 1}, {13, 2}}) {
    out.emplace_back(search_primitive_poly(Prime(p), r));
  }
  out.push_back(FieldCtx(ModPolynomial(Prime(3), {1, 0, 1})));  // x^2+1: irreducible, x not primitive
  return out;
}

FieldElement random_element(const FieldCtx& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, ctx.size() - 1);
  return ctx.element(d(rng));
}

}  // namespace

TEST(FieldOps, AddExamples) {
  const auto f = gf9();
  EXPECT_EQ(f.add(f.make({1, 2}), f.make({2, 2})), f.make({0, 1}));
  const auto a = f.make({2, 1});
  EXPECT_EQ(f.add(a, f.zero()), a);
  const auto z5 = FieldCtx::with_generator(Prime(5), 3);
  EXPECT_EQ(z5.add(z5.make({3}), z5.make({4})), z5.make({2}));
}

TEST(FieldOps, MulExamples) {
  const auto f = gf9();
  const auto x = f.x();
  EXPECT_EQ(f.mul(x, x), f.make({1, 2}));
  EXPECT_EQ(f.mul(f.pow(x, 3), f.pow(x, 5)), f.make({1, 0}));
  const auto a = f.make({2, 1});
  EXPECT_EQ(f.mul(a, f.one()), a);
}

TEST(FieldOps, PowExamples) {
  const auto z5 = FieldCtx::with_generator(Prime(5), 3);
  EXPECT_EQ(z5.x(), z5.make({3}));
  EXPECT_EQ(z5.pow(z5.make({3}), 4), z5.one());
  const auto f = gf9();
  EXPECT_EQ(f.pow(f.x(), 4), f.make({2, 0}));
  EXPECT_EQ(f.pow(f.zero(), 5), f.zero());
  EXPECT_EQ(f.pow(f.zero(), 0), f.one());
}

TEST(FieldOps, PowerTableMatchesWorkedExample) {
  const auto f = gf9();
  ASSERT_TRUE(f.x_is_primitive());
  auto cur = f.one();
  for (std::size_t j = 0; j < kGf9Powers.size(); ++j) {
    cur = f.mul(cur, f.x());
    EXPECT_EQ(cur, f.make(kGf9Powers[j])) << "x^" << j + 1;
    EXPECT_EQ(f.x_powers()[j], f.index_of(cur));
    EXPECT_EQ(f.log_x(f.index_of(cur)), (j + 1) % 8);
  }
  EXPECT_FALSE(f.log_x(0).has_value());
}

TEST(FieldOps, TraceExamples) {
  const auto f = gf9();
  EXPECT_EQ(f.trace(f.zero()), 0u);
  // Oracle: x + x^3 from the power table, (0,1) + (2,2) = (2,0).
  const std::uint32_t expected = (kGf9Powers[0][0] + kGf9Powers[2][0]) % 3;
  ASSERT_EQ((kGf9Powers[0][1] + kGf9Powers[2][1]) % 3, 0u);
  EXPECT_EQ(expected, 2u);
  EXPECT_EQ(f.trace(f.x()), expected);
  const auto z7 = FieldCtx(search_primitive_poly(Prime(7), 1));
  for (std::uint32_t a = 0; a < 7; ++a) EXPECT_EQ(z7.trace(z7.make({a})), a);
}

TEST(FieldOps, TraceOfReducibleModulusIsInternalError) {
  const auto ring = FieldCtx::unchecked(ModPolynomial(Prime(3), {0, 0, 1}));  // x^2
  EXPECT_THROW(ring.trace(ring.x()), InternalError);
}

TEST(FieldOps, BetaTablesExample) {
  const auto f = gf9();
  // Oracle: 1*1 = 1, 1*x = x, x*x = 1+2x.
  const std::uint32_t b0[2][2] = {{1, 0}, {0, 1}};
  const std::uint32_t b1[2][2] = {{0, 1}, {1, 2}};
  for (unsigned a = 0; a < 2; ++a) {
    for (unsigned b = 0; b < 2; ++b) {
      EXPECT_EQ(f.beta()(0, a, b), b0[a][b]);
      EXPECT_EQ(f.beta()(1, a, b), b1[a][b]);
    }
  }
  const auto z5 = FieldCtx::with_generator(Prime(5), 2);
  EXPECT_EQ(z5.beta().degree(), 1u);
  EXPECT_EQ(z5.beta()(0, 0, 0), 1u);
  // reconstruction: sum_i beta_i[1][1] x^i == x * x
  EXPECT_EQ(f.make({f.beta()(0, 1, 1), f.beta()(1, 1, 1)}), f.mul(f.x(), f.x()));
}

TEST(FieldOps, BetaTablesSymmetricAndReconstruct) {
  for (const auto& f : sample_fields()) {
    const auto r = f.degree();
    for (unsigned a = 0; a < r; ++a) {
      for (unsigned b = 0; b < r; ++b) {
        std::vector<std::uint32_t> c(r);
        for (unsigned i = 0; i < r; ++i) {
          EXPECT_EQ(f.beta()(i, a, b), f.beta()(i, b, a));
          c[i] = f.beta()(i, a, b);
        }
        std::vector<std::uint32_t> xa(r, 0), xb(r, 0);
        xa[a] = 1;
        xb[b] = 1;
        EXPECT_EQ(f.make(c), f.mul(f.make(xa), f.make(xb)));
      }
    }
  }
}

TEST(FieldOps, EnumerationOrder) {
  const auto f = gf9();
  const auto all = f.elements();
  const std::vector<std::vector<std::uint32_t>> expected = {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1},
                                                            {1, 2}, {2, 0}, {2, 1}, {2, 2}};
  ASSERT_EQ(all.size(), 9u);
  for (std::size_t i = 0; i < 9; ++i) {
    EXPECT_EQ(all[i], f.make(expected[i]));
    EXPECT_EQ(f.index_of(all[i]), i);
  }
  const auto z5 = FieldCtx::with_generator(Prime(5), 3);
  for (std::uint32_t i = 0; i < 5; ++i) EXPECT_EQ(z5.element(i), z5.make({i}));
  for (const auto& ctx : sample_fields()) {
    const auto els = ctx.elements();
    EXPECT_EQ(els.size(), ctx.size());
    EXPECT_EQ(std::set<FieldElement>(els.begin(), els.end()).size(), ctx.size());
    EXPECT_TRUE(std::is_sorted(els.begin(), els.end()));
    EXPECT_TRUE(els.front().is_zero());
  }
}

TEST(FieldOps, StructuralErrors) {
  const auto f = gf9();
  EXPECT_THROW(f.make({1}), StructuralError);
  EXPECT_THROW(f.make({1, 3}), StructuralError);
  EXPECT_THROW(f.add(f.one(), FieldElement({1, 0, 0})), StructuralError);
  EXPECT_THROW(f.mul(FieldElement({1}), f.one()), StructuralError);
  EXPECT_THROW(FieldCtx(ModPolynomial(Prime(3), {1, 0, 2})), StructuralError);  // not monic
  EXPECT_THROW(FieldCtx(ModPolynomial(Prime(3), {0, 0, 1})), DomainError);      // x^2
}

TEST(FieldProperties, AxiomsOnRandomTriples) {
  std::mt19937_64 rng(20261016);
  for (const auto& f : sample_fields()) {
    for (int trial = 0; trial < 1000; ++trial) {
      const auto a = random_element(f, rng), b = random_element(f, rng), c = random_element(f, rng);
      ASSERT_EQ(f.add(a, b), f.add(b, a));
      ASSERT_EQ(f.mul(a, b), f.mul(b, a));
      ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
      ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
      ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      ASSERT_EQ(f.sub(f.add(a, b), b), a);
    }
  }
}

TEST(FieldProperties, LittleFermat) {
  for (const auto& f : sample_fields()) {
    for (std::uint32_t i = 1; i < f.size(); ++i) {
      ASSERT_EQ(f.pow(f.element(i), f.size() - 1), f.one());
    }
  }
}

TEST(FieldProperties, TraceLinearFrobeniusInvariantSurjective) {
  std::mt19937_64 rng(7);
  for (const auto& f : sample_fields()) {
    const auto p = f.characteristic();
    std::vector<std::uint32_t> tr(f.size());
    std::vector<std::uint64_t> hits(p, 0);
    for (std::uint32_t i = 0; i < f.size(); ++i) {
      tr[i] = f.trace(f.element(i));
      ++hits[tr[i]];
      ASSERT_EQ(f.trace(f.pow(f.element(i), p)), tr[i]);
    }
    for (auto h : hits) EXPECT_EQ(h, f.size() / p);
    for (int trial = 0; trial < 300; ++trial) {
      const auto a = random_element(f, rng), b = random_element(f, rng);
      const auto alpha = static_cast<std::uint32_t>(rng() % p);
      const auto lhs = f.trace(f.add(f.scale(alpha, a), b));
      const auto rhs = (std::uint64_t{alpha} * f.trace(a) + f.trace(b)) % p;
      ASSERT_EQ(lhs, rhs);
    }
  }
}

TEST(FieldProperties, BetaContractionMatchesReductionExhaustively) {
  for (const auto& f : sample_fields()) {
    if (f.size() > 125) continue;
    for (std::uint32_t i = 0; i < f.size(); ++i) {
      for (std::uint32_t j = 0; j < f.size(); ++j) {
        ASSERT_EQ(f.mul_beta(f.element(i), f.element(j)), f.mul(f.element(i), f.element(j)));
      }
    }
  }
}
