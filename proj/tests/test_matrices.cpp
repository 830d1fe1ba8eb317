#include <gtest/gtest.h>

#include "feynman/generate.hpp"
#include "feynman/matrices.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

namespace feynman {
namespace {

IntegerPolynomial poly(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return IntegerPolynomial(std::move(v));
}

TEST(Matrices, TriangleAdjacency) {
  const auto g = build_graph(cycle_spec(3));
  const auto t = edge_adjacency(g);
  ASSERT_EQ(t.order(), 6u);
  for (std::size_t i = 0; i < 6; ++i) {
    int row = 0;
    for (std::size_t j = 0; j < 6; ++j) row += t(i, j);
    EXPECT_EQ(row, 1);
  }
}

TEST(Matrices, TransitionSharesSupportWithUnitEntries) {
  for (const auto& [name, spec] : testing::corpus()) {
    const auto g = build_graph(spec);
    const auto t = edge_adjacency(g);
    const auto s = transition_matrix(g);
    for (std::size_t i = 0; i < t.order(); ++i) {
      for (std::size_t j = 0; j < t.order(); ++j) {
        if (t(i, j) == 1) {
          EXPECT_NEAR(std::abs(s(i, j)), 1.0, 1e-15) << name;
        } else {
          EXPECT_EQ(s(i, j), Complex(0.0, 0.0)) << name;
        }
      }
    }
    EXPECT_LT(block_structure_defect(s), 1e-12) << name;
  }
}

TEST(Matrices, TrianglePowerTraces) {
  const auto g = build_graph(cycle_spec(3));
  const auto tt = power_traces(edge_adjacency(g), 6);
  EXPECT_EQ(tt[1], 0);
  EXPECT_EQ(tt[2], 0);
  EXPECT_EQ(tt[3], 6);
  EXPECT_EQ(tt[6], 6);
  const auto ts = power_traces(transition_matrix(g), 6);
  EXPECT_EQ(ts[3], -6);
  EXPECT_EQ(ts[6], 6);
  EXPECT_LT(ts.max_residual, 1e-9);
}

TEST(Matrices, TriangleDeterminants) {
  const auto g = build_graph(cycle_spec(3));
  EXPECT_EQ(char_poly(edge_adjacency(g)), poly({1, 0, 0, -2, 0, 0, 1}));
  EXPECT_EQ(char_poly(transition_matrix(g)), poly({1, 0, 0, 2, 0, 0, 1}));
}

TEST(Matrices, IharaDeterminantMatchesBareissInterpolation) {
  for (const auto& [name, spec] : testing::corpus()) {
    const auto g = build_graph(spec);
    const auto t = edge_adjacency(g);
    EXPECT_EQ(char_poly(t), IntegerPolynomial(oracle::ihara_det_interpolated(t))) << name;
  }
}

TEST(Matrices, KacWardDeterminantMatchesDft) {
  for (const auto& [name, spec] : testing::corpus()) {
    const auto g = build_graph(spec);
    const auto s = transition_matrix(g);
    double residual = 1.0;
    const auto reference = IntegerPolynomial(oracle::kac_ward_det_dft(s, residual));
    EXPECT_LT(residual, 1e-6) << name;
    EXPECT_EQ(char_poly(s), reference) << name;
  }
}

TEST(Matrices, NonIntegralTraceIsRejected) {
  TransitionMatrix m(2, Complex(0.0, 0.0));
  m(0, 0) = Complex(0.25, 0.0);
  try {
    power_traces(m, 1);
    FAIL() << "expected NonIntegralTrace";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonIntegralTrace);
  }
}

TEST(Matrices, NonIntegralCoefficientIsRejected) {
  TraceTable fake;
  fake.values = {BigInt(1), BigInt(0)};  // d_2 = (1 - 0) / 2
  try {
    char_poly(fake, 2);
    FAIL() << "expected NonIntegralCoefficient";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonIntegralCoefficient);
  }
}

TEST(Matrices, PolynomialArithmetic) {
  EXPECT_EQ(poly({1, 1}) * poly({1, 1}), poly({1, 2, 1}));
  EXPECT_EQ(poly({1, 0, -2}) + poly({0, 0, 2}), poly({1}));
  EXPECT_EQ(poly({1, 2}) - poly({1, 2}), IntegerPolynomial{});
  EXPECT_EQ(poly({3})[5], 0);
}

}  // namespace
}  // namespace feynman
