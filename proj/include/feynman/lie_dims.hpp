#pragma once

// Graded Lie superalgebra dimensions from the generating spaces read off the
// determinants, via the univariate and bivariate Witt partition sums.
//
// Lists indexed by degree keep slot 0 unused (t[n] is the degree-n entry).

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "feynman/counting.hpp"
#include "feynman/identities.hpp"
#include "feynman/series.hpp"

namespace feynman {

struct SuperdimensionRow {
  int n = 0;
  BigInt t, t_prime, t0, t1;
  BigInt dim_l0, dim_l1;
  BigInt enveloping;
};

struct SuperdimensionTable {
  int max_n = 0;
  std::vector<SuperdimensionRow> rows;  // rows[n-1]

  const SuperdimensionRow& operator[](int n) const { return rows.at(static_cast<std::size_t>(n - 1)); }
  std::vector<BigInt> column(BigInt SuperdimensionRow::*field) const {
    std::vector<BigInt> out(rows.size() + 1);
    for (const auto& r : rows) out[static_cast<std::size_t>(r.n)] = r.*field;
    return out;
  }
};

/// Fills t, t', t0, t1 from the determinants; dims are left for the Witt step.
inline SuperdimensionTable superdims_from_graph(const GraphAnalysis& a, int max_n) {
  if (max_n < 1) throw Error(Errc::BadParams, "superdims need max_n >= 1");
  SuperdimensionTable table;
  table.max_n = max_n;
  for (int n = 1; n <= max_n; ++n) {
    SuperdimensionRow row;
    row.n = n;
    row.t = -a.det_t[n];
    row.t_prime = -a.det_s[n];
    const std::string at = "(" + std::to_string(n) + ")";
    row.t0 = exact_quotient(row.t_prime + row.t, 2, Errc::ParityViolation, "t" + at + " + t'" + at);
    row.t1 = exact_quotient(row.t - row.t_prime, 2, Errc::ParityViolation, "t" + at + " - t'" + at);
    table.rows.push_back(std::move(row));
  }
  return table;
}

/// W(N) = sum over partitions s of N of (|s|-1)!/s! prod t(i)^{s_i}.
inline Rational witt_partition_sum(std::span<const BigInt> t, int n) {
  if (n < 1 || static_cast<int>(t.size()) <= n) throw Error(Errc::BadParams, "W(N) needs t up to N");
  Rational total = 0;
  for_each_partition(n, [&](std::span<const int> s) {
    unsigned parts = 0;
    BigInt weight = 1;
    BigInt denom = 1;
    for (int i = 1; i <= n; ++i) {
      const int si = s[static_cast<std::size_t>(i)];
      if (si == 0) continue;
      if (t[static_cast<std::size_t>(i)] == 0) return;
      parts += static_cast<unsigned>(si);
      weight *= ipow(t[static_cast<std::size_t>(i)], static_cast<unsigned>(si));
      denom *= factorial(static_cast<unsigned>(si));
    }
    total += Rational(weight * factorial(parts - 1), denom);
  });
  return total;
}

/// Dim L_N = sum_{g|N} (mu(g)/g) W(N/g), for N = 1..max_n.
inline std::vector<BigInt> witt_dimensions_univariate(std::span<const BigInt> t, int max_n) {
  if (max_n < 1 || static_cast<int>(t.size()) <= max_n) {
    throw Error(Errc::BadParams, "univariate Witt needs t up to max_n >= 1");
  }
  std::vector<Rational> w(static_cast<std::size_t>(max_n) + 1);
  for (int n = 1; n <= max_n; ++n) w[n] = witt_partition_sum(t, n);
  std::vector<BigInt> dims(w.size());
  for (int n = 1; n <= max_n; ++n) {
    Rational sum = 0;
    for (int g : divisors(n)) sum += Rational(moebius(g), g) * w[n / g];
    dims[n] = to_integer(sum, Errc::NonIntegerCount, "Dim L_" + std::to_string(n));
  }
  return dims;
}

/// W(tau, 0) and W(tau, 1): partitions of tau into parts (i, b) weighted by
/// t(i, b), split by the parity of sum b.
inline std::pair<Rational, Rational> witt_partition_sum_bivariate(std::span<const BigInt> t0,
                                                                  std::span<const BigInt> t1, int tau) {
  if (tau < 1 || static_cast<int>(t0.size()) <= tau || static_cast<int>(t1.size()) <= tau) {
    throw Error(Errc::BadParams, "W(tau, b) needs t0, t1 up to tau");
  }
  struct Part {
    int size;
    int parity;
    BigInt weight;
  };
  std::vector<Part> parts;
  for (int i = tau; i >= 1; --i) {
    if (t0[static_cast<std::size_t>(i)] != 0) parts.push_back({i, 0, t0[static_cast<std::size_t>(i)]});
    if (t1[static_cast<std::size_t>(i)] != 0) parts.push_back({i, 1, t1[static_cast<std::size_t>(i)]});
  }
  Rational w[2] = {0, 0};
  std::function<void(std::size_t, int, int, unsigned, const BigInt&, const BigInt&)> recurse =
      [&](std::size_t index, int remaining, int parity, unsigned count, const BigInt& weight,
          const BigInt& denom) {
        if (remaining == 0) {
          w[parity] += Rational(weight * factorial(count - 1), denom);
          return;
        }
        if (index == parts.size()) return;
        const Part& p = parts[index];
        BigInt wk = weight;
        BigInt dk = denom;
        for (int m = 0; m * p.size <= remaining; ++m) {
          if (m > 0) {
            wk *= p.weight;
            dk *= m;
          }
          recurse(index + 1, remaining - m * p.size, (parity + m * p.parity) % 2,
                  count + static_cast<unsigned>(m), wk, dk);
        }
      };
  recurse(0, tau, 0, 0, BigInt(1), BigInt(1));
  return {w[0], w[1]};
}

/// Dim L_(n,0) = sum_{g|n} (mu(g)/g) W(n/g, 0) + sum_{g even|n} (mu(g)/g) W(n/g, 1);
/// Dim L_(n,1) = sum_{g odd|n} (mu(g)/g) W(n/g, 1).
inline std::pair<std::vector<BigInt>, std::vector<BigInt>> witt_dimensions_bivariate(
    std::span<const BigInt> t0, std::span<const BigInt> t1, int max_n) {
  if (max_n < 1) throw Error(Errc::BadParams, "bivariate Witt needs max_n >= 1");
  std::vector<Rational> w0(static_cast<std::size_t>(max_n) + 1), w1(w0.size());
  for (int n = 1; n <= max_n; ++n) std::tie(w0[n], w1[n]) = witt_partition_sum_bivariate(t0, t1, n);
  std::vector<BigInt> dim0(w0.size()), dim1(w0.size());
  for (int n = 1; n <= max_n; ++n) {
    Rational even = 0, odd = 0;
    for (int g : divisors(n)) {
      const Rational weight(moebius(g), g);
      even += weight * w0[n / g];
      if (g % 2 == 0) {
        even += weight * w1[n / g];
      } else {
        odd += weight * w1[n / g];
      }
    }
    dim0[n] = to_integer(even, Errc::NonIntegerCount, "Dim L_(" + std::to_string(n) + ",0)");
    dim1[n] = to_integer(odd, Errc::NonIntegerCount, "Dim L_(" + std::to_string(n) + ",1)");
  }
  return {std::move(dim0), std::move(dim1)};
}

/// Coefficients of zeta_KW(z) = 1/det(1 - zS) for degrees 0..max_n.
inline std::vector<BigInt> enveloping_dims(const GraphAnalysis& a, int max_n) {
  if (max_n < 0) throw Error(Errc::BadParams, "enveloping dims need max_n >= 0");
  return zeta_series(a, ZetaKind::KacWard, max_n).integer_coefficients();
}

/// Full table: generating spaces, bivariate dimensions and enveloping dims.
inline SuperdimensionTable lie_dims_table(const GraphAnalysis& a, int max_n) {
  SuperdimensionTable table = superdims_from_graph(a, max_n);
  const auto t0 = table.column(&SuperdimensionRow::t0);
  const auto t1 = table.column(&SuperdimensionRow::t1);
  const auto [dim0, dim1] = witt_dimensions_bivariate(t0, t1, max_n);
  const auto env = enveloping_dims(a, max_n);
  for (auto& row : table.rows) {
    row.dim_l0 = dim0[static_cast<std::size_t>(row.n)];
    row.dim_l1 = dim1[static_cast<std::size_t>(row.n)];
    row.enveloping = env[static_cast<std::size_t>(row.n)];
  }
  return table;
}

}  // namespace feynman
