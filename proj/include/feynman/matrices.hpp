#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "feynman/error.hpp"
#include "feynman/geometry.hpp"
#include "feynman/graph.hpp"
#include "feynman/numeric.hpp"

namespace feynman {

template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t order, const T& fill = T{})
      : order_(order), data_(order * order, fill) {}

  static DenseMatrix identity(std::size_t order) {
    DenseMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t order() const noexcept { return order_; }

  T& operator()(std::size_t row, std::size_t col) { return data_[row * order_ + col]; }
  const T& operator()(std::size_t row, std::size_t col) const { return data_[row * order_ + col]; }

  T trace() const {
    T sum{};
    for (std::size_t i = 0; i < order_; ++i) sum += (*this)(i, i);
    return sum;
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix c(a.order_);
    for (std::size_t i = 0; i < a.order_; ++i) {
      for (std::size_t k = 0; k < a.order_; ++k) {
        const T& aik = a(i, k);
        if (aik == T{}) continue;
        for (std::size_t j = 0; j < a.order_; ++j) c(i, j) += aik * b(k, j);
      }
    }
    return c;
  }

  template <typename U>
  DenseMatrix<U> cast() const {
    DenseMatrix<U> out(order_);
    for (std::size_t i = 0; i < order_; ++i)
      for (std::size_t j = 0; j < order_; ++j) out(i, j) = U((*this)(i, j));
    return out;
  }

 private:
  std::size_t order_ = 0;
  std::vector<T> data_;
};

using Complex = std::complex<double>;
using EdgeAdjacencyMatrix = DenseMatrix<int>;
using TransitionMatrix = DenseMatrix<Complex>;

/// T[e][e2] = 1 iff e2 can follow e without backtracking.
inline EdgeAdjacencyMatrix edge_adjacency(const EmbeddedGraph& g) {
  EdgeAdjacencyMatrix t(g.num_oriented(), 0);
  for (EdgeId e = 0; e < g.num_oriented(); ++e)
    for (EdgeId next : g.outgoing(g.end(e)))
      if (next != g.reverse(e)) t(e, next) = 1;
  return t;
}

/// Kac-Ward transition matrix: exp(i*alpha/2) on the support of T.
inline TransitionMatrix transition_matrix(const EmbeddedGraph& g) {
  const TurningTable turning(g);
  TransitionMatrix s(g.num_oriented(), Complex{0.0, 0.0});
  for (EdgeId e = 0; e < g.num_oriented(); ++e)
    for (EdgeId next : g.outgoing(g.end(e)))
      if (next != g.reverse(e)) s(e, next) = std::polar(1.0, turning.transition_angle(e, next) / 2.0);
  return s;
}

/// Largest deviation from the forward/reverse block relations
/// B = conj(B)^t, C = conj(C)^t, D = conj(A)^t, with zero diagonals in B and C.
inline double block_structure_defect(const TransitionMatrix& s) {
  const std::size_t n = s.order() / 2;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    worst = std::max({worst, std::abs(s(i, i + n)), std::abs(s(i + n, i))});
    for (std::size_t j = 0; j < n; ++j) {
      worst = std::max(worst, std::abs(s(i, j + n) - std::conj(s(j, i + n))));
      worst = std::max(worst, std::abs(s(i + n, j) - std::conj(s(j + n, i))));
      worst = std::max(worst, std::abs(s(i + n, j + n) - std::conj(s(j, i))));
    }
  }
  return worst;
}

enum class MatrixKind { T, S };

/// Tr M^N for N = 1..max_n as exact integers. For S the complex traces are kept
/// alongside, and each was certified to lie within `tolerance` of its integer.
struct TraceTable {
  MatrixKind kind = MatrixKind::T;
  std::vector<BigInt> values;    // values[N-1] = Tr M^N
  std::vector<Complex> raw;      // S only
  double max_residual = 0.0;     // S only

  int max_n() const { return static_cast<int>(values.size()); }
  /// Tr M^N; 1-based.
  const BigInt& operator[](int n) const { return values.at(static_cast<std::size_t>(n - 1)); }
};

inline TraceTable power_traces(const EdgeAdjacencyMatrix& t, int max_n) {
  if (max_n < 1) throw Error(Errc::BadParams, "power_traces needs N_max >= 1");
  TraceTable table;
  table.kind = MatrixKind::T;
  const auto base = t.cast<BigInt>();
  auto power = base;
  for (int n = 1; n <= max_n; ++n) {
    if (n > 1) power = power * base;
    table.values.push_back(power.trace());
  }
  return table;
}

inline TraceTable power_traces(const TransitionMatrix& s, int max_n,
                               double tolerance = kDefaultTolerance) {
  if (max_n < 1) throw Error(Errc::BadParams, "power_traces needs N_max >= 1");
  TraceTable table;
  table.kind = MatrixKind::S;
  auto power = s;
  for (int n = 1; n <= max_n; ++n) {
    if (n > 1) power = power * s;
    const Complex tr = power.trace();
    const double nearest = std::round(tr.real());
    const double residual = std::max(std::abs(tr.imag()), std::abs(tr.real() - nearest));
    if (!(residual < tolerance)) {
      throw Error(Errc::NonIntegralTrace, "Tr S^" + std::to_string(n) + " = (" +
                                              std::to_string(tr.real()) + ", " +
                                              std::to_string(tr.imag()) + ") is not an integer");
    }
    table.raw.push_back(tr);
    table.max_residual = std::max(table.max_residual, residual);
    table.values.emplace_back(static_cast<long long>(nearest));
  }
  return table;
}

/// Exact integer polynomial, coefficient index = degree, trailing zeros trimmed.
struct IntegerPolynomial {
  std::vector<BigInt> coefficients;

  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<BigInt> c) : coefficients(std::move(c)) { trim(); }

  void trim() {
    while (!coefficients.empty() && coefficients.back() == 0) coefficients.pop_back();
  }
  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  BigInt operator[](int k) const {
    if (k < 0 || k >= static_cast<int>(coefficients.size())) return 0;
    return coefficients[static_cast<std::size_t>(k)];
  }

  friend IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    if (a.coefficients.empty() || b.coefficients.empty()) return {};
    std::vector<BigInt> c(a.coefficients.size() + b.coefficients.size() - 1);
    for (std::size_t i = 0; i < a.coefficients.size(); ++i)
      for (std::size_t j = 0; j < b.coefficients.size(); ++j)
        c[i + j] += a.coefficients[i] * b.coefficients[j];
    return IntegerPolynomial(std::move(c));
  }
  friend IntegerPolynomial operator+(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coefficients.size(), b.coefficients.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[int(i)] + b[int(i)];
    return IntegerPolynomial(std::move(c));
  }
  friend IntegerPolynomial operator-(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coefficients.size(), b.coefficients.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[int(i)] - b[int(i)];
    return IntegerPolynomial(std::move(c));
  }
  friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;
};

/// det(1 - zM) of degree <= `order` from Tr M^1..Tr M^order by Newton's
/// identities, k d_k = -sum_{i=1..k} Tr M^i d_{k-i}, over exact rationals.
inline IntegerPolynomial char_poly(const TraceTable& traces, int order) {
  if (traces.max_n() < order) {
    throw Error(Errc::BadParams, "char_poly needs traces up to " + std::to_string(order));
  }
  std::vector<Rational> d(static_cast<std::size_t>(order) + 1);
  d[0] = 1;
  for (int k = 1; k <= order; ++k) {
    Rational sum = 0;
    for (int i = 1; i <= k; ++i) sum += Rational(traces[i]) * d[static_cast<std::size_t>(k - i)];
    d[static_cast<std::size_t>(k)] = -sum / k;
  }
  std::vector<BigInt> coeffs;
  coeffs.reserve(d.size());
  for (int k = 0; k <= order; ++k) {
    coeffs.push_back(to_integer(d[static_cast<std::size_t>(k)], Errc::NonIntegralCoefficient,
                                "coefficient " + std::to_string(k) + " of det(1 - zM)"));
  }
  return IntegerPolynomial(std::move(coeffs));
}

inline IntegerPolynomial char_poly(const EdgeAdjacencyMatrix& t) {
  const int order = static_cast<int>(t.order());
  if (order == 0) return IntegerPolynomial({BigInt(1)});
  return char_poly(power_traces(t, order), order);
}

inline IntegerPolynomial char_poly(const TransitionMatrix& s, double tolerance = kDefaultTolerance) {
  const int order = static_cast<int>(s.order());
  if (order == 0) return IntegerPolynomial({BigInt(1)});
  return char_poly(power_traces(s, order, tolerance), order);
}

}  // namespace feynman
