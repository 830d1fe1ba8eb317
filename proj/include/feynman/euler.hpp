#pragma once

#include <bit>
#include <cstdint>
#include <queue>
#include <string>
#include <vector>

#include "feynman/error.hpp"
#include "feynman/graph.hpp"
#include "feynman/matrices.hpp"
#include "feynman/numeric.hpp"

namespace feynman {

/// a(N) = number of N-edge subgraphs with every vertex of even degree; a(0) = 1.
struct EulerPolynomial {
  std::vector<BigInt> a;  // indices 0..|E|

  BigInt operator[](int n) const {
    if (n < 0 || n >= static_cast<int>(a.size())) return 0;
    return a[static_cast<std::size_t>(n)];
  }
  IntegerPolynomial polynomial() const { return IntegerPolynomial(a); }
  IntegerPolynomial squared() const { return polynomial() * polynomial(); }
};

inline constexpr int kDefaultCycleSpaceCap = 24;

/// Edge-subset bitmask over |E| edges.
class EdgeMask {
 public:
  explicit EdgeMask(std::size_t edges = 0) : words_((edges + 63) / 64, 0) {}
  void flip(std::size_t edge) { words_[edge / 64] ^= std::uint64_t{1} << (edge % 64); }
  EdgeMask& operator^=(const EdgeMask& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
  }
  int count() const {
    int n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
  }

 private:
  std::vector<std::uint64_t> words_;
};

/// Fundamental cycles of a BFS spanning tree rooted at vertex 0, as edge masks.
/// Loops are their own fundamental cycle.
inline std::vector<EdgeMask> fundamental_cycles(const EmbeddedGraph& g) {
  const std::size_t nv = g.num_vertices();
  const std::size_t ne = g.num_edges();
  std::vector<bool> visited(nv, false);
  std::vector<std::size_t> parent_edge(nv, ne);
  std::vector<VertexId> parent(nv, 0);
  std::vector<std::size_t> depth(nv, 0);
  std::vector<bool> tree_edge(ne, false);

  std::queue<VertexId> frontier;
  frontier.push(0);
  visited[0] = true;
  while (!frontier.empty()) {
    const VertexId v = frontier.front();
    frontier.pop();
    for (EdgeId d : g.outgoing(v)) {
      const VertexId w = g.end(d);
      if (visited[w]) continue;
      visited[w] = true;
      parent[w] = v;
      parent_edge[w] = g.edge_of(d);
      depth[w] = depth[v] + 1;
      tree_edge[g.edge_of(d)] = true;
      frontier.push(w);
    }
  }

  std::vector<EdgeMask> cycles;
  for (std::size_t e = 0; e < ne; ++e) {
    if (tree_edge[e]) continue;
    EdgeMask mask(ne);
    mask.flip(e);
    VertexId u = g.origin(e);
    VertexId w = g.end(e);
    while (u != w) {
      if (depth[u] < depth[w]) std::swap(u, w);
      mask.flip(parent_edge[u]);
      u = parent[u];
    }
    cycles.push_back(std::move(mask));
  }
  return cycles;
}

/// Tallies the cycle space by size, stepping through all 2^dim elements in
/// Gray-code order so each step is a single symmetric difference.
inline EulerPolynomial euler_polynomial(const EmbeddedGraph& g, int cap = kDefaultCycleSpaceCap) {
  const auto cycles = fundamental_cycles(g);
  const int dim = static_cast<int>(cycles.size());
  if (dim > cap) {
    throw Error(Errc::TooLarge, "cycle space dimension " + std::to_string(dim) + " exceeds cap " +
                                    std::to_string(cap));
  }
  std::vector<std::uint64_t> tally(g.num_edges() + 1, 0);
  EdgeMask current(g.num_edges());
  tally[0] = 1;
  const std::uint64_t total = std::uint64_t{1} << dim;
  for (std::uint64_t step = 1; step < total; ++step) {
    current ^= cycles[static_cast<std::size_t>(std::countr_zero(step))];
    ++tally[static_cast<std::size_t>(current.count())];
  }
  EulerPolynomial poly;
  poly.a.reserve(tally.size());
  for (auto count : tally) poly.a.emplace_back(count);
  return poly;
}

}  // namespace feynman
