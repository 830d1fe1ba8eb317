#pragma once

// Finite connected planar multigraphs with a polyline drawing, and the
// oriented double in which dart j < |E| is edge j traversed from->to and
// dart j + |E| is its reversal.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "feynman/error.hpp"

namespace feynman {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator-(Point a) { return {-a.x, -a.y}; }
  friend bool operator==(Point a, Point b) = default;
};

inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }

/// Signed anticlockwise angle from direction `a` to direction `b`, in [-pi, pi].
/// Antisymmetric bit-for-bit: signed_turn(b, a) == -signed_turn(a, b) away from +-pi.
inline double signed_turn(Point a, Point b) { return std::atan2(cross(a, b), dot(a, b)); }

/// Directions exactly opposite: the path reverses on itself.
inline bool is_cusp(Point a, Point b) { return cross(a, b) == 0.0 && dot(a, b) < 0.0; }

struct VertexSpec {
  int id = 0;
  Point position;
};

struct EdgeSpec {
  int id = 0;
  int from = 0;
  int to = 0;
  std::vector<Point> waypoints;  // in from->to traversal order
};

struct GraphSpec {
  std::vector<VertexSpec> vertices;
  std::vector<EdgeSpec> edges;
};

using VertexId = std::size_t;
/// Index into the oriented-edge table of size 2|E|.
using EdgeId = std::size_t;

class EmbeddedGraph;
EmbeddedGraph build_graph(const GraphSpec& spec);

class EmbeddedGraph {
 public:
  const GraphSpec& spec() const noexcept { return spec_; }

  std::size_t num_vertices() const noexcept { return spec_.vertices.size(); }
  std::size_t num_edges() const noexcept { return spec_.edges.size(); }
  std::size_t num_oriented() const noexcept { return 2 * spec_.edges.size(); }

  VertexId origin(EdgeId e) const { return origin_.at(e); }
  VertexId end(EdgeId e) const { return end_.at(e); }
  EdgeId reverse(EdgeId e) const { return (e + num_edges()) % num_oriented(); }
  bool is_forward(EdgeId e) const noexcept { return e < num_edges(); }
  bool is_loop(EdgeId e) const { return origin(e) == end(e); }

  /// Undirected edge underlying a dart.
  std::size_t edge_of(EdgeId e) const noexcept { return e % num_edges(); }

  /// Polyline from origin(e), through the waypoints in traversal order, to end(e).
  const std::vector<Point>& polyline(EdgeId e) const { return polylines_.at(e); }

  /// Darts whose origin is `v`, in increasing index order.
  std::span<const EdgeId> outgoing(VertexId v) const { return outgoing_.at(v); }

  /// Degree in G, loops counted twice.
  std::size_t degree(VertexId v) const { return outgoing_.at(v).size(); }

  std::size_t num_loops() const {
    std::size_t n = 0;
    for (EdgeId e = 0; e < num_edges(); ++e) n += is_loop(e) ? 1 : 0;
    return n;
  }

  /// T-support: `next` may follow `e` without backtracking.
  bool can_follow(EdgeId e, EdgeId next) const {
    return end(e) == origin(next) && next != reverse(e);
  }

 private:
  friend EmbeddedGraph build_graph(const GraphSpec& spec);
  EmbeddedGraph() = default;

  GraphSpec spec_;
  std::vector<VertexId> origin_;
  std::vector<VertexId> end_;
  std::vector<std::vector<Point>> polylines_;
  std::vector<std::vector<EdgeId>> outgoing_;
};

namespace detail {

inline void check_polyline(const std::vector<Point>& pts, int edge_id) {
  const std::string where = "edge " + std::to_string(edge_id);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const Point d = pts[i + 1] - pts[i];
    if (!(std::isfinite(d.x) && std::isfinite(d.y))) {
      throw Error(Errc::BadGeometry, where + ": non-finite coordinate");
    }
    if (d.x == 0.0 && d.y == 0.0) {
      throw Error(Errc::BadGeometry, where + ": zero-length segment " + std::to_string(i));
    }
  }
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    if (is_cusp(pts[i] - pts[i - 1], pts[i + 1] - pts[i])) {
      throw Error(Errc::BadGeometry, where + ": cusp at waypoint " + std::to_string(i - 1));
    }
  }
}

}  // namespace detail

inline EmbeddedGraph build_graph(const GraphSpec& input) {
  const std::size_t nv = input.vertices.size();
  const std::size_t ne = input.edges.size();
  if (nv == 0) throw Error(Errc::NotConnected, "graph has no vertices");

  // Order by id; ids must be exactly 0..n-1.
  EmbeddedGraph g;
  g.spec_.vertices.resize(nv);
  std::vector<bool> seen(nv, false);
  for (const auto& v : input.vertices) {
    if (v.id < 0 || static_cast<std::size_t>(v.id) >= nv || seen[v.id]) {
      throw Error(Errc::DanglingReference, "vertex ids must be distinct and contiguous from 0");
    }
    seen[v.id] = true;
    g.spec_.vertices[v.id] = v;
  }
  g.spec_.edges.resize(ne);
  seen.assign(ne, false);
  for (const auto& e : input.edges) {
    if (e.id < 0 || static_cast<std::size_t>(e.id) >= ne || seen[e.id]) {
      throw Error(Errc::DanglingReference, "edge ids must be distinct and contiguous from 0");
    }
    if (e.from < 0 || e.to < 0 || static_cast<std::size_t>(e.from) >= nv ||
        static_cast<std::size_t>(e.to) >= nv) {
      throw Error(Errc::DanglingReference,
                  "edge " + std::to_string(e.id) + " references a missing vertex");
    }
    seen[e.id] = true;
    g.spec_.edges[e.id] = e;
  }

  g.origin_.resize(2 * ne);
  g.end_.resize(2 * ne);
  g.polylines_.resize(2 * ne);
  g.outgoing_.assign(nv, {});
  for (std::size_t j = 0; j < ne; ++j) {
    const auto& e = g.spec_.edges[j];
    g.origin_[j] = static_cast<VertexId>(e.from);
    g.end_[j] = static_cast<VertexId>(e.to);
    g.origin_[j + ne] = g.end_[j];
    g.end_[j + ne] = g.origin_[j];

    std::vector<Point> pts;
    pts.reserve(e.waypoints.size() + 2);
    pts.push_back(g.spec_.vertices[e.from].position);
    pts.insert(pts.end(), e.waypoints.begin(), e.waypoints.end());
    pts.push_back(g.spec_.vertices[e.to].position);
    detail::check_polyline(pts, e.id);
    g.polylines_[j] = pts;
    std::reverse(pts.begin(), pts.end());
    g.polylines_[j + ne] = std::move(pts);
  }
  for (EdgeId d = 0; d < 2 * ne; ++d) g.outgoing_[g.origin_[d]].push_back(d);

  // Connectivity by union-find over undirected edges.
  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t j = 0; j < ne; ++j) parent[find(g.origin_[j])] = find(g.end_[j]);
  for (std::size_t v = 1; v < nv; ++v) {
    if (find(v) != find(0)) {
      throw Error(Errc::NotConnected, "vertex " + std::to_string(v) + " unreachable from vertex 0");
    }
  }
  for (std::size_t v = 0; v < nv; ++v) {
    if (g.outgoing_[v].size() < 2) {
      throw Error(Errc::DegreeOneVertex, "vertex " + std::to_string(v) + " has degree " +
                                             std::to_string(g.outgoing_[v].size()));
    }
  }
  return g;
}

enum class Severity { Warning, Error };

struct Finding {
  Severity severity = Severity::Error;
  std::string code;
  std::string message;
  std::string locus;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Finding> findings;
};

namespace detail {

struct Segment {
  Point a, b;
  std::size_t edge;
  std::size_t index;
};

inline int orientation(Point a, Point b, Point c) {
  const double v = cross(b - a, c - a);
  return (v > 0.0) - (v < 0.0);
}

inline bool on_segment(Point a, Point b, Point p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

/// Segments meet somewhere other than at a shared endpoint.
inline bool segments_conflict(const Segment& s, const Segment& t) {
  const bool shares = s.a == t.a || s.a == t.b || s.b == t.a || s.b == t.b;
  const int o1 = orientation(s.a, s.b, t.a);
  const int o2 = orientation(s.a, s.b, t.b);
  const int o3 = orientation(t.a, t.b, s.a);
  const int o4 = orientation(t.a, t.b, s.b);
  if (o1 == 0 && o2 == 0) {
    // Collinear: conflict iff the overlap has positive length.
    const Point d = s.b - s.a;
    auto param = [&](Point p) { return dot(p - s.a, d) / dot(d, d); };
    const double lo = std::max(0.0, std::min(param(t.a), param(t.b)));
    const double hi = std::min(1.0, std::max(param(t.a), param(t.b)));
    return hi > lo;
  }
  if (shares) return false;
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return (o1 == 0 && on_segment(s.a, s.b, t.a)) || (o2 == 0 && on_segment(s.a, s.b, t.b)) ||
         (o3 == 0 && on_segment(t.a, t.b, s.a)) || (o4 == 0 && on_segment(t.a, t.b, s.b));
}

}  // namespace detail

inline constexpr double kNearCuspTolerance = 1e-9;

/// Advisory checks on the drawing: proper crossings between edge segments are
/// errors, turns within kNearCuspTolerance of a reversal are warnings. Quadratic
/// in the number of segments.
inline ValidationReport validate_embedding(const EmbeddedGraph& g) {
  ValidationReport report;
  std::vector<detail::Segment> segments;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto& pts = g.polyline(e);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) segments.push_back({pts[i], pts[i + 1], e, i});
  }
  for (std::size_t i = 0; i < segments.size(); ++i) {
    for (std::size_t j = i + 1; j < segments.size(); ++j) {
      const auto& s = segments[i];
      const auto& t = segments[j];
      if (s.edge == t.edge && t.index == s.index + 1) continue;  // consecutive in one polyline
      if (detail::segments_conflict(s, t)) {
        report.findings.push_back(
            {Severity::Error, "crossing",
             "drawing of edge " + std::to_string(s.edge) + " meets edge " + std::to_string(t.edge),
             "edge " + std::to_string(s.edge) + " segment " + std::to_string(s.index) + " / edge " +
                 std::to_string(t.edge) + " segment " + std::to_string(t.index)});
      }
    }
  }

  auto near_cusp = [](Point a, Point b) {
    return std::numbers::pi - std::abs(signed_turn(a, b)) < kNearCuspTolerance;
  };
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto& pts = g.polyline(e);
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
      if (near_cusp(pts[i] - pts[i - 1], pts[i + 1] - pts[i])) {
        report.findings.push_back({Severity::Warning, "near-cusp",
                                   "waypoint turn within tolerance of a reversal",
                                   "edge " + std::to_string(e) + " waypoint " + std::to_string(i - 1)});
      }
    }
  }
  for (EdgeId e = 0; e < g.num_oriented(); ++e) {
    const auto& in = g.polyline(e);
    const Point arrive = in[in.size() - 1] - in[in.size() - 2];
    for (EdgeId next : g.outgoing(g.end(e))) {
      if (next == g.reverse(e)) continue;
      const auto& out = g.polyline(next);
      const Point leave = out[1] - out[0];
      if (is_cusp(arrive, leave)) {
        report.findings.push_back({Severity::Error, "vertex-cusp",
                                   "transition reverses direction at a vertex",
                                   "darts " + std::to_string(e) + " -> " + std::to_string(next)});
      } else if (near_cusp(arrive, leave)) {
        report.findings.push_back({Severity::Warning, "near-cusp",
                                   "vertex turn within tolerance of a reversal",
                                   "darts " + std::to_string(e) + " -> " + std::to_string(next)});
      }
    }
  }
  report.ok = std::none_of(report.findings.begin(), report.findings.end(),
                           [](const Finding& f) { return f.severity == Severity::Error; });
  return report;
}

}  // namespace feynman
