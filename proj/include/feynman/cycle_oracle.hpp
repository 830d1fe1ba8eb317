#pragma once

// Brute-force ground truth for the counting formulas: enumerate tail-less
// closed non-backtracking walks, sign them by winding, and group the
// non-periodic ones into rotation classes. Exponential; test-scale only.

#include <algorithm>
#include <future>
#include <span>
#include <vector>

#include "feynman/counting.hpp"
#include "feynman/geometry.hpp"
#include "feynman/graph.hpp"
#include "feynman/numeric.hpp"

namespace feynman {

using CycleWord = std::vector<EdgeId>;

struct CycleClass {
  CycleWord canonical;  // lexicographically least rotation
  int length = 0;
  int sign = 1;
  long winding = 0;
};

struct SignedCount {
  BigInt plus = 0;
  BigInt minus = 0;
};

/// Closed, non-backtracking, and tail-less.
inline bool is_cycle_word(const EmbeddedGraph& g, std::span<const EdgeId> word) {
  if (word.empty()) return false;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (word[k] >= g.num_oriented()) return false;
    if (!g.can_follow(word[k], word[(k + 1) % word.size()])) return false;
  }
  return true;
}

/// Smallest d dividing |word| with word equal to its rotation by d.
inline std::size_t smallest_period(std::span<const EdgeId> word) {
  const std::size_t n = word.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool repeats = true;
    for (std::size_t k = 0; k + d < n && repeats; ++k) repeats = word[k] == word[k + d];
    if (repeats) return d;
  }
  return n;
}

inline CycleWord canonical_rotation(std::span<const EdgeId> word) {
  CycleWord best(word.begin(), word.end());
  CycleWord candidate(word.begin(), word.end());
  for (std::size_t r = 1; r < word.size(); ++r) {
    std::rotate(candidate.begin(), candidate.begin() + 1, candidate.end());
    if (candidate < best) best = candidate;
  }
  return best;
}

/// (e_N^{-1}, ..., e_1^{-1}).
inline CycleWord invert(const EmbeddedGraph& g, std::span<const EdgeId> word) {
  CycleWord out;
  out.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) out.push_back(g.reverse(*it));
  return out;
}

namespace detail {

inline void extend_walks(const EmbeddedGraph& g, CycleWord& word, std::size_t length,
                         std::vector<CycleWord>& out) {
  const EdgeId last = word.back();
  if (word.size() == length) {
    if (g.can_follow(last, word.front())) out.push_back(word);
    return;
  }
  for (EdgeId next : g.outgoing(g.end(last))) {
    if (next == g.reverse(last)) continue;
    word.push_back(next);
    extend_walks(g, word, length, out);
    word.pop_back();
  }
}

}  // namespace detail

/// Every tail-less closed non-backtracking walk of length N, one entry per
/// starting dart, in lexicographic order. Its size equals Tr T^N.
inline std::vector<CycleWord> enumerate_closed_walks(const EmbeddedGraph& g, int length) {
  if (length < 1) throw Error(Errc::BadParams, "walk length must be >= 1");
  std::vector<std::future<std::vector<CycleWord>>> jobs;
  jobs.reserve(g.num_oriented());
  for (EdgeId start = 0; start < g.num_oriented(); ++start) {
    jobs.push_back(std::async(std::launch::async, [&g, start, length] {
      std::vector<CycleWord> found;
      CycleWord word{start};
      detail::extend_walks(g, word, static_cast<std::size_t>(length), found);
      return found;
    }));
  }
  std::vector<CycleWord> walks;
  for (auto& job : jobs) {
    auto part = job.get();
    walks.insert(walks.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
  }
  // Each job already yields sorted words and jobs are ordered by first dart.
  return walks;
}

inline SignedCount count_signed(const EmbeddedGraph& g, int length,
                                double tolerance = kDefaultTolerance) {
  const TurningTable turning(g);
  SignedCount count;
  for (const auto& word : enumerate_closed_walks(g, length)) {
    if (sign_from_winding(turning.winding(word, tolerance)) > 0) {
      ++count.plus;
    } else {
      ++count.minus;
    }
  }
  return count;
}

/// One entry per rotation class of non-periodic length-N cycles, sorted by
/// canonical word. A cycle and its inversion are distinct classes.
inline std::vector<CycleClass> classes(const EmbeddedGraph& g, int length,
                                       double tolerance = kDefaultTolerance) {
  const TurningTable turning(g);
  std::vector<CycleClass> out;
  for (const auto& word : enumerate_closed_walks(g, length)) {
    if (smallest_period(word) != word.size()) continue;
    if (canonical_rotation(word) != word) continue;
    const long n = turning.winding(word, tolerance);
    out.push_back({word, length, sign_from_winding(n), n});
  }
  return out;
}

/// Count table built purely by enumeration: K+- from signed walks, theta+-
/// from classes, and Omega through the theta combination.
inline CountTable oracle_count_table(const EmbeddedGraph& g, int max_n,
                                     double tolerance = kDefaultTolerance) {
  if (max_n < 1) throw Error(Errc::BadParams, "oracle_count_table needs max_n >= 1");
  CountTable table;
  table.max_n = max_n;
  table.source = CountSource::Oracle;
  for (int n = 1; n <= max_n; ++n) {
    const SignedCount k = count_signed(g, n, tolerance);
    CountRow row;
    row.n = n;
    row.k_plus = k.plus;
    row.k_minus = k.minus;
    row.trace_t = k.plus + k.minus;
    row.trace_s = k.minus - k.plus;
    for (const auto& c : classes(g, n, tolerance)) {
      if (c.sign > 0) {
        ++row.theta_plus;
      } else {
        ++row.theta_minus;
      }
    }
    row.theta = row.theta_plus + row.theta_minus;
    table.rows.push_back(std::move(row));
    table.rows.back().omega = omega_from_theta(table, n);
  }
  return table;
}

}  // namespace feynman
