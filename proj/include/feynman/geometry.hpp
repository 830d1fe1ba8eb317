#pragma once

// Turning angles of the drawing. A transition e -> e2 turns by the second half
// of e (midpoint to end), the vertex turn, and the first half of e2 (start to
// midpoint). Angles accumulate along the drawn path and are never reduced
// modulo 2*pi; only the single vertex turn lies in (-pi, pi).

#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "feynman/error.hpp"
#include "feynman/graph.hpp"

namespace feynman {

inline constexpr double kDefaultTolerance = 1e-6;

struct EdgeTurning {
  Point start_direction;  // unit vectors
  Point end_direction;
  double first_half_turn = 0.0;
  double second_half_turn = 0.0;

  double total() const { return first_half_turn + second_half_turn; }
};

namespace detail {

inline Point unit(Point p) {
  const double n = norm(p);
  return {p.x / n, p.y / n};
}

inline EdgeTurning forward_turning(const std::vector<Point>& pts) {
  const std::size_t segments = pts.size() - 1;
  std::vector<double> cumulative(segments + 1, 0.0);
  for (std::size_t i = 0; i < segments; ++i) {
    cumulative[i + 1] = cumulative[i] + norm(pts[i + 1] - pts[i]);
  }
  const double half = cumulative.back() / 2.0;

  EdgeTurning t;
  t.start_direction = unit(pts[1] - pts[0]);
  t.end_direction = unit(pts[segments] - pts[segments - 1]);
  // Joint i sits between segment i-1 and segment i at arclength cumulative[i].
  for (std::size_t i = 1; i < segments; ++i) {
    const double turn = signed_turn(pts[i] - pts[i - 1], pts[i + 1] - pts[i]);
    if (cumulative[i] < half) {
      t.first_half_turn += turn;
    } else if (cumulative[i] > half) {
      t.second_half_turn += turn;
    } else {
      t.first_half_turn += turn / 2.0;
      t.second_half_turn += turn / 2.0;
    }
  }
  return t;
}

}  // namespace detail

inline EdgeTurning edge_turning(const EmbeddedGraph& g, EdgeId e) {
  if (e >= g.num_oriented()) throw Error(Errc::NotAdjacent, "dart out of range");
  if (g.is_forward(e)) return detail::forward_turning(g.polyline(e));
  const EdgeTurning f = detail::forward_turning(g.polyline(g.reverse(e)));
  return {-f.end_direction, -f.start_direction, -f.second_half_turn, -f.first_half_turn};
}

/// Precomputed turning data for every dart; answers transition angles and
/// windings without revisiting the polylines.
class TurningTable {
 public:
  explicit TurningTable(const EmbeddedGraph& g) : g_(&g) {
    turnings_.reserve(g.num_oriented());
    for (EdgeId e = 0; e < g.num_oriented(); ++e) turnings_.push_back(edge_turning(g, e));
  }

  const EdgeTurning& operator[](EdgeId e) const { return turnings_.at(e); }

  double transition_angle(EdgeId e, EdgeId e2) const {
    if (e >= g_->num_oriented() || e2 >= g_->num_oriented() || g_->end(e) != g_->origin(e2)) {
      throw Error(Errc::NotAdjacent,
                  "dart " + std::to_string(e2) + " does not start where " + std::to_string(e) + " ends");
    }
    if (e2 == g_->reverse(e)) {
      throw Error(Errc::Backtrack, "dart " + std::to_string(e2) + " reverses " + std::to_string(e));
    }
    const EdgeTurning& a = turnings_[e];
    const EdgeTurning& b = turnings_[e2];
    if (is_cusp(a.end_direction, b.start_direction)) {
      throw Error(Errc::BadGeometry, "cusp at vertex between darts " + std::to_string(e) + " and " +
                                         std::to_string(e2));
    }
    return a.second_half_turn + signed_turn(a.end_direction, b.start_direction) + b.first_half_turn;
  }

  /// Sum of transition angles around a closed word, cyclically.
  double total_turning(std::span<const EdgeId> word) const {
    double sum = 0.0;
    for (std::size_t k = 0; k < word.size(); ++k) {
      sum += transition_angle(word[k], word[(k + 1) % word.size()]);
    }
    return sum;
  }

  long winding(std::span<const EdgeId> word, double tolerance = kDefaultTolerance) const {
    const double turns = total_turning(word) / (2.0 * std::numbers::pi);
    const double rounded = std::round(turns);
    if (!(std::abs(turns - rounded) < tolerance)) {
      throw Error(Errc::WindingNotIntegral,
                  "net turning is " + std::to_string(turns) + " revolutions");
    }
    return static_cast<long>(rounded);
  }

 private:
  const EmbeddedGraph* g_;
  std::vector<EdgeTurning> turnings_;
};

inline double transition_angle(const EmbeddedGraph& g, EdgeId e, EdgeId e2) {
  if (e >= g.num_oriented() || e2 >= g.num_oriented() || g.end(e) != g.origin(e2)) {
    throw Error(Errc::NotAdjacent, "darts are not consecutive");
  }
  if (e2 == g.reverse(e)) throw Error(Errc::Backtrack, "transition reverses the dart");
  const EdgeTurning a = edge_turning(g, e);
  const EdgeTurning b = edge_turning(g, e2);
  if (is_cusp(a.end_direction, b.start_direction)) {
    throw Error(Errc::BadGeometry, "cusp at vertex");
  }
  return a.second_half_turn + signed_turn(a.end_direction, b.start_direction) + b.first_half_turn;
}

/// Integral number of tangent revolutions of a closed non-backtracking word.
inline long walk_winding(const EmbeddedGraph& g, std::span<const EdgeId> word,
                         double tolerance = kDefaultTolerance) {
  return TurningTable(g).winding(word, tolerance);
}

/// Cycle sign (-1)^(1+n) for winding number n.
inline int sign_from_winding(long winding) { return (winding % 2 == 0) ? -1 : 1; }

}  // namespace feynman
