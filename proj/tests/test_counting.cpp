#include <gtest/gtest.h>

#include "feynman/counting.hpp"
#include "feynman/generate.hpp"
#include "feynman/series.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

namespace feynman {
namespace {

struct Traces {
  TraceTable t, s;
};

Traces traces(const EmbeddedGraph& g, int max_n) {
  return {power_traces(edge_adjacency(g), max_n), power_traces(transition_matrix(g), max_n)};
}

TEST(Counting, MoebiusValues) {
  const int expected[] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(moebius(n), expected[n - 1]) << n;
  for (int n = 1; n <= 200; ++n) EXPECT_EQ(moebius(n), oracle::moebius_recursive(n)) << n;
  EXPECT_THROW(moebius(0), Error);
}

TEST(Counting, Divisors) { EXPECT_EQ(divisors(12), (std::vector<int>{1, 2, 3, 4, 6, 12})); }

TEST(Counting, PartitionCounts) {
  const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) {
    int count = 0;
    for_each_partition(n, [&](std::span<const int> m) {
      int total = 0;
      for (std::size_t k = 1; k < m.size(); ++k) total += static_cast<int>(k) * m[k];
      EXPECT_EQ(total, n);
      ++count;
    });
    EXPECT_EQ(count, p[n]) << n;
  }
}

TEST(Counting, ClassicalWittMatchesLyndonWords) {
  EXPECT_EQ(witt(1, 2), 2);
  EXPECT_EQ(witt(2, 2), 1);
  EXPECT_EQ(witt(3, 2), 2);
  for (int r = 0; r <= 3; ++r)
    for (int n = 1; n <= 8; ++n) EXPECT_EQ(witt(n, r), oracle::lyndon_count(n, r)) << n << " " << r;
}

TEST(Counting, TriangleTheta) {
  const auto g = build_graph(cycle_spec(3));
  const auto [t, s] = traces(g, 6);
  const auto table = theta_tables(t, s, 6);
  EXPECT_EQ(table[3].theta, 2);
  EXPECT_EQ(table[3].theta_plus, 2);
  EXPECT_EQ(table[3].theta_minus, 0);
  EXPECT_EQ(table[3].k_plus, 6);
  EXPECT_EQ(table[3].k_minus, 0);
  EXPECT_EQ(table[6].theta, 0);
}

TEST(Counting, SquareDoubleTraversal) {
  const auto g = build_graph(cycle_spec(4));
  const auto [t, s] = traces(g, 8);
  const auto table = theta_tables(t, s, 8);
  EXPECT_EQ(table[4].theta_plus, 2);
  EXPECT_EQ(table[8].k_plus, 0);
  EXPECT_EQ(table[8].k_minus, 8);
  EXPECT_EQ(table[8].theta_plus, 0);
  EXPECT_EQ(table[8].theta_minus, 0);
  EXPECT_EQ(table[8].omega, 2);
}

TEST(Counting, OmegaAgreesWithThetaCombination) {
  for (const auto& [name, spec] : testing::corpus()) {
    const auto g = build_graph(spec);
    const auto [t, s] = traces(g, 12);
    const auto table = theta_tables(t, s, 12);
    for (int n = 1; n <= 12; ++n) EXPECT_EQ(table[n].omega, omega_from_theta(table, n)) << name << " " << n;
  }
}

TEST(Counting, BouquetOmegaVanishesBeyondTwo) {
  for (int r = 1; r <= 3; ++r) {
    const auto [t, s] = traces(build_graph(bouquet_spec(r)), 6);
    EXPECT_EQ(omega(s, 1), -2 * r);
    EXPECT_EQ(omega(s, 2), 2 * r);
    for (int n = 3; n <= 6; ++n) EXPECT_EQ(omega(s, n), 0);
  }
}

TEST(Counting, FaaDiBrunoMatchesSeries) {
  for (const auto& [name, spec] : testing::corpus()) {
    const auto g = build_graph(spec);
    const int order = static_cast<int>(2 * g.num_edges());
    const auto s = power_traces(transition_matrix(g), order);
    const auto det = char_poly(s, order);
    const auto zeta = inverse(RationalSeries(order, std::span<const BigInt>(det.coefficients)));
    for (int i = 1; i <= order; ++i) {
      EXPECT_EQ(faa_di_bruno_c(s, i, Branch::Plus), -det[i]) << name << " " << i;
      EXPECT_EQ(Rational(faa_di_bruno_c(s, i, Branch::Minus)), zeta[i]) << name << " " << i;
    }
  }
}

TEST(Counting, TriangleCoefficients) {
  const auto s = power_traces(transition_matrix(build_graph(cycle_spec(3))), 6);
  for (int i = 1; i <= 6; ++i) {
    const BigInt expected = i == 3 ? BigInt(-2) : i == 6 ? BigInt(-1) : BigInt(0);
    EXPECT_EQ(faa_di_bruno_c(s, i, Branch::Plus), expected) << i;
  }
}

TEST(Counting, BouquetMinusCoefficients) {
  const auto s = power_traces(transition_matrix(build_graph(bouquet_spec(1))), 2);
  EXPECT_EQ(faa_di_bruno_c(s, 1, Branch::Minus), -2);
  EXPECT_EQ(faa_di_bruno_c(s, 2, Branch::Minus), 3);
}

TEST(Counting, TracesFromCoefficientsRoundTrip) {
  for (const auto& [name, spec] : testing::corpus()) {
    const auto s = power_traces(transition_matrix(build_graph(spec)), 10);
    for (Branch b : {Branch::Plus, Branch::Minus}) {
      std::vector<BigInt> c(11);
      for (int i = 1; i <= 10; ++i) c[i] = faa_di_bruno_c(s, i, b);
      for (int n = 1; n <= 10; ++n) EXPECT_EQ(traces_from_c(c, b, n), s[n]) << name << " " << n;
    }
  }
}

TEST(Counting, RecursionsOnTriangle) {
  const auto g = build_graph(cycle_spec(3));
  const auto s = power_traces(transition_matrix(g), 6);
  const auto report = verify_recursions(s, euler_polynomial(g), 6);
  for (const char* id : {"c-initial", "c-newton", "c-convolution", "omega-recursion", "euler-recursion"}) {
    EXPECT_TRUE(report.at(id).pass) << id;
  }
  // c+(3) = -2 while c-(3) = [z^3](1 + z^3)^-2 = -2, so |c+(3)| <= c-(3) is false.
  EXPECT_FALSE(report.at("c-bound").pass);
  EXPECT_EQ(report.at("c-bound").first_failure, 3);
}

TEST(Counting, RecursionsOnCorpus) {
  for (const auto& [name, spec] : testing::corpus()) {
    const auto g = build_graph(spec);
    const int max_n = static_cast<int>(2 * g.num_edges());
    const auto report = verify_recursions(power_traces(transition_matrix(g), max_n), euler_polynomial(g), max_n);
    for (const auto& r : report.relations) {
      if (r.id != "c-bound") {
        EXPECT_TRUE(r.pass) << name << " " << r.id;
      }
    }
  }
}

}  // namespace
}  // namespace feynman
