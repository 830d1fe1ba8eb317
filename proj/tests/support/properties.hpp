#pragma once

// Property checks shared by the property suite and the acceptance binary.
// Each returns an empty string on success, otherwise the first violation.

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "feynman/counting.hpp"
#include "feynman/cycle_oracle.hpp"
#include "feynman/geometry.hpp"
#include "feynman/series.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

namespace feynman::properties {

inline RationalSeries random_series(std::mt19937_64& rng, int order, bool unit_constant = false) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  RationalSeries s(order);
  for (int k = 0; k <= order; ++k) s[k] = Rational(num(rng), den(rng));
  if (unit_constant) s[0] = 1;
  return s;
}

inline std::string series_ring_axioms(unsigned seed, int trials = 200) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < trials; ++i) {
    const int order = 1 + i % 8;
    const auto a = random_series(rng, order), b = random_series(rng, order), c = random_series(rng, order);
    const auto zero = RationalSeries(order), one = RationalSeries::one(order);
    if (a + b != b + a) return "addition not commutative";
    if ((a + b) + c != a + (b + c)) return "addition not associative";
    if (a * b != b * a) return "multiplication not commutative";
    if ((a * b) * c != a * (b * c)) return "multiplication not associative";
    if (a * (b + c) != a * b + a * c) return "not distributive";
    if (a + zero != a || a * one != a || a - a != zero) return "identity elements";
    if (a[0] != 0 && a * inverse(a) != one) return "inverse";
  }
  return {};
}

inline std::string exp_log_round_trips(unsigned seed, int trials = 200) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < trials; ++i) {
    const int order = 1 + i % 8;
    const auto u = random_series(rng, order, true);
    if (exp(log(u)) != u) return "exp(log(u)) != u";
    auto g = random_series(rng, order);
    g[0] = 0;
    if (log(exp(g)) != g) return "log(exp(g)) != g";
    auto h = random_series(rng, order);
    h[0] = 0;
    if (exp(g + h) != exp(g) * exp(h)) return "exp not a homomorphism";
  }
  return {};
}

inline std::string moebius_values(int limit = 500) {
  for (int n = 1; n <= limit; ++n) {
    int sum = 0;
    for (int d : divisors(n)) sum += moebius(d);
    if (sum != (n == 1 ? 1 : 0)) return "sum over divisors fails at " + std::to_string(n);
    if (moebius(n) != oracle::moebius_recursive(n)) return "value differs at " + std::to_string(n);
    for (int m = 1; m * n <= limit; ++m) {
      if (std::gcd(m, n) == 1 && moebius(m * n) != moebius(m) * moebius(n)) {
        return "not multiplicative at " + std::to_string(m) + "*" + std::to_string(n);
      }
    }
  }
  return {};
}

inline std::string reversal_antisymmetry() {
  for (const auto& [name, spec] : testing::corpus()) {
    const auto g = build_graph(spec);
    const TurningTable table(g);
    for (EdgeId e = 0; e < g.num_oriented(); ++e) {
      for (EdgeId f : g.outgoing(g.end(e))) {
        if (f == g.reverse(e)) continue;
        const double forward = table.transition_angle(e, f);
        const double backward = table.transition_angle(g.reverse(f), g.reverse(e));
        if (std::abs(forward + backward) > 1e-12) return name + ": angle not antisymmetric";
      }
    }
  }
  return {};
}

/// Random tail-less closed non-backtracking walks on the corpus: each must
/// have an integral winding within tolerance that agrees with the polygon
/// oracle, and inversion must negate it.
inline std::string winding_integrality(unsigned seed, int walks = 1000) {
  std::mt19937_64 rng(seed);
  const auto corpus = testing::corpus();
  std::vector<EmbeddedGraph> graphs;
  for (const auto& [name, spec] : corpus) graphs.push_back(build_graph(spec));
  int done = 0;
  while (done < walks) {
    const auto& g = graphs[static_cast<std::size_t>(done) % graphs.size()];
    const TurningTable table(g);
    std::uniform_int_distribution<std::size_t> pick_start(0, g.num_oriented() - 1);
    CycleWord word{pick_start(rng)};
    const std::size_t target = std::uniform_int_distribution<std::size_t>(1, 24)(rng);
    while (word.size() < 200 && (word.size() < target || !g.can_follow(word.back(), word.front()))) {
      std::vector<EdgeId> next;
      for (EdgeId f : g.outgoing(g.end(word.back())))
        if (f != g.reverse(word.back())) next.push_back(f);
      word.push_back(next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)]);
    }
    if (!is_cycle_word(g, word)) continue;
    const double turns = table.total_turning(word) / (2.0 * std::numbers::pi);
    const double residual = std::abs(turns - std::round(turns));
    std::ostringstream where;
    where << corpus[static_cast<std::size_t>(done) % graphs.size()].name << " walk of length " << word.size();
    if (residual >= 1e-6) return where.str() + ": residual " + std::to_string(residual);
    const long n = table.winding(word);
    if (std::abs(oracle::polygon_turning(g, word) - static_cast<double>(n)) > 1e-6) {
      return where.str() + ": disagrees with polygon oracle";
    }
    if (table.winding(invert(g, word)) != -n) return where.str() + ": inversion does not negate";
    ++done;
  }
  return {};
}

}  // namespace feynman::properties
