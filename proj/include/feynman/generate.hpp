#pragma once

#include <charconv>
#include <cmath>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "feynman/error.hpp"
#include "feynman/graph.hpp"

namespace feynman {

namespace detail {

inline Point polar(double radius, double angle) {
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

inline void require_params(std::string_view family, const std::vector<int>& params,
                           std::size_t count) {
  if (params.size() != count) {
    throw Error(Errc::BadParams, std::string(family) + " expects " + std::to_string(count) +
                                     " parameter(s), got " + std::to_string(params.size()));
  }
}

}  // namespace detail

/// One vertex at the origin with R loops drawn as disjoint convex petals,
/// each traversed anticlockwise when read forward.
inline GraphSpec bouquet_spec(int loops) {
  if (loops < 1) throw Error(Errc::BadParams, "bouquet needs R >= 1");
  GraphSpec spec;
  spec.vertices.push_back({0, {0.0, 0.0}});
  const double half_width = 0.8 * std::min(std::numbers::pi / loops, std::numbers::pi / 3.0);
  for (int j = 0; j < loops; ++j) {
    const double centre = 2.0 * std::numbers::pi * (j + 0.5) / loops;
    spec.edges.push_back({j, 0, 0,
                          {detail::polar(1.0, centre - half_width), detail::polar(1.2, centre),
                           detail::polar(1.0, centre + half_width)}});
  }
  return spec;
}

/// R digons glued in a chain: vertices 0..R on the x-axis, each consecutive
/// pair joined by an upper and a lower bent edge.
inline GraphSpec theta_chain_spec(int copies) {
  if (copies < 1) throw Error(Errc::BadParams, "theta_chain needs R >= 1");
  GraphSpec spec;
  for (int k = 0; k <= copies; ++k) spec.vertices.push_back({k, {double(k), 0.0}});
  for (int k = 0; k < copies; ++k) {
    spec.edges.push_back({2 * k, k, k + 1, {{k + 0.5, 0.4}}});
    spec.edges.push_back({2 * k + 1, k, k + 1, {{k + 0.5, -0.4}}});
  }
  return spec;
}

/// Regular n-gon on the unit circle; edge k runs from vertex k to k+1 anticlockwise.
inline GraphSpec cycle_spec(int n) {
  if (n < 3) throw Error(Errc::BadParams, "cycle needs n >= 3");
  GraphSpec spec;
  for (int k = 0; k < n; ++k) {
    spec.vertices.push_back({k, detail::polar(1.0, 2.0 * std::numbers::pi * k / n)});
  }
  for (int k = 0; k < n; ++k) spec.edges.push_back({k, k, (k + 1) % n, {}});
  return spec;
}

/// K4 with vertex 3 at the centre of the triangle 0,1,2.
inline GraphSpec k4_spec() {
  GraphSpec spec;
  for (int k = 0; k < 3; ++k) {
    spec.vertices.push_back(
        {k, detail::polar(1.0, std::numbers::pi / 2.0 + 2.0 * std::numbers::pi * k / 3.0)});
  }
  spec.vertices.push_back({3, {0.0, 0.0}});
  spec.edges = {{0, 0, 1, {}}, {1, 1, 2, {}}, {2, 2, 0, {}},
                {3, 0, 3, {}}, {4, 1, 3, {}}, {5, 2, 3, {}}};
  return spec;
}

/// Builtin family by name: bouquet(R), theta_chain(R), cycle(n), k4().
inline GraphSpec generate(std::string_view name, const std::vector<int>& params) {
  if (name == "bouquet") {
    detail::require_params(name, params, 1);
    return bouquet_spec(params[0]);
  }
  if (name == "theta_chain") {
    detail::require_params(name, params, 1);
    return theta_chain_spec(params[0]);
  }
  if (name == "cycle") {
    detail::require_params(name, params, 1);
    return cycle_spec(params[0]);
  }
  if (name == "k4") {
    detail::require_params(name, params, 0);
    return k4_spec();
  }
  throw Error(Errc::UnknownFamily, "unknown builtin family '" + std::string(name) + "'");
}

/// Parses "family" or "family:p1,p2,..." as used on the command line.
inline GraphSpec generate_from_string(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  std::vector<int> params;
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    while (true) {
      const auto comma = rest.find(',');
      const std::string_view item = rest.substr(0, comma);
      int value = 0;
      const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
      if (ec != std::errc() || ptr != item.data() + item.size() || item.empty()) {
        throw Error(Errc::BadParams, "bad builtin parameter '" + std::string(item) + "'");
      }
      params.push_back(value);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  return generate(name, params);
}

}  // namespace feynman
