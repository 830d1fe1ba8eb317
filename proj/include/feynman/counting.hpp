#pragma once

#include <cstdlib>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "feynman/error.hpp"
#include "feynman/euler.hpp"
#include "feynman/matrices.hpp"
#include "feynman/numeric.hpp"

namespace feynman {

inline int moebius(long n) {
  if (n < 1) throw Error(Errc::BadParams, "moebius needs n >= 1");
  int result = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

inline std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

/// Visits every partition of n as a multiplicity vector m (m[k] = number of
/// parts equal to k, m[0] unused), largest parts chosen first.
inline void for_each_partition(int n, const std::function<void(std::span<const int>)>& visit) {
  if (n < 0) return;
  std::vector<int> mult(static_cast<std::size_t>(n) + 1, 0);
  std::function<void(int, int)> recurse = [&](int remaining, int largest) {
    if (remaining == 0) {
      visit(mult);
      return;
    }
    if (largest == 0) return;
    for (int count = remaining / largest; count >= 0; --count) {
      mult[static_cast<std::size_t>(largest)] = count;
      recurse(remaining - count * largest, largest - 1);
    }
    mult[static_cast<std::size_t>(largest)] = 0;
  };
  recurse(n, n);
}

enum class CountSource { ClosedForm, Oracle };

struct CountRow {
  int n = 0;
  BigInt trace_t, trace_s;
  BigInt k_plus, k_minus;
  BigInt theta_plus, theta_minus, theta;
  BigInt omega;
};

struct CountTable {
  int max_n = 0;
  CountSource source = CountSource::ClosedForm;
  std::vector<CountRow> rows;  // rows[N-1]

  const CountRow& operator[](int n) const { return rows.at(static_cast<std::size_t>(n - 1)); }
};

/// Omega(N) = (1/N) sum_{g|N} mu(g) Tr S^{N/g}.
inline BigInt omega(const TraceTable& trace_s, int n) {
  if (n < 1 || n > trace_s.max_n()) throw Error(Errc::BadParams, "omega needs 1 <= N <= traces");
  BigInt sum = 0;
  for (int g : divisors(n)) sum += moebius(g) * trace_s[n / g];
  return exact_quotient(sum, n, Errc::NonIntegerCount, "Omega(" + std::to_string(n) + ")");
}

/// Omega(N) from the class counts: theta- - theta+ (+ theta+(N/2) for even N).
inline BigInt omega_from_theta(const CountTable& table, int n) {
  BigInt value = table[n].theta_minus - table[n].theta_plus;
  if (n % 2 == 0) value += table[n / 2].theta_plus;
  return value;
}

/// Closed-form class counts from the power traces of T and S.
inline CountTable theta_tables(const TraceTable& trace_t, const TraceTable& trace_s, int max_n) {
  if (max_n < 1 || trace_t.max_n() < max_n || trace_s.max_n() < max_n) {
    throw Error(Errc::BadParams, "theta_tables needs traces up to max_n >= 1");
  }
  CountTable table;
  table.max_n = max_n;
  table.source = CountSource::ClosedForm;
  std::vector<BigInt> kp(static_cast<std::size_t>(max_n) + 1), km(kp.size());
  for (int n = 1; n <= max_n; ++n) {
    const std::string tag = "K(" + std::to_string(n) + ")";
    kp[n] = exact_quotient(trace_t[n] - trace_s[n], 2, Errc::NonIntegerCount, tag);
    km[n] = exact_quotient(trace_t[n] + trace_s[n], 2, Errc::NonIntegerCount, tag);
  }
  for (int n = 1; n <= max_n; ++n) {
    BigInt plus = 0, minus = 0, all = 0;
    for (int g : divisors(n)) {
      const int mu = moebius(g);
      if (mu == 0) continue;
      if (g % 2 == 1) {
        plus += mu * kp[n / g];
      } else {
        minus += mu * kp[n / g];
      }
      minus += mu * km[n / g];
      all += mu * trace_t[n / g];
    }
    CountRow row;
    row.n = n;
    row.trace_t = trace_t[n];
    row.trace_s = trace_s[n];
    row.k_plus = kp[n];
    row.k_minus = km[n];
    const std::string at = "(" + std::to_string(n) + ")";
    row.theta_plus = exact_quotient(plus, n, Errc::NonIntegerCount, "theta+" + at);
    row.theta_minus = exact_quotient(minus, n, Errc::NonIntegerCount, "theta-" + at);
    row.theta = exact_quotient(all, n, Errc::NonIntegerCount, "theta" + at);
    if (row.theta != row.theta_plus + row.theta_minus) {
      throw Error(Errc::NonIntegerCount, "theta" + at + " != theta+ + theta-");
    }
    row.omega = omega(trace_s, n);
    table.rows.push_back(std::move(row));
  }
  return table;
}

/// Classical Witt formula M(N;R) = (1/N) sum_{g|N} mu(g) R^{N/g}.
inline BigInt witt(int n, int rank) {
  if (n < 1 || rank < 0) throw Error(Errc::BadParams, "witt needs N >= 1 and R >= 0");
  BigInt sum = 0;
  for (int g : divisors(n)) sum += moebius(g) * ipow(BigInt(rank), static_cast<unsigned>(n / g));
  return exact_quotient(sum, n, Errc::NonIntegerCount, "M(N;R)");
}

enum class Branch { Plus, Minus };

/// c+-(i): coefficients of E^{+-2} = exp(-+g) = 1 -+ sum c+-(i) z^i with
/// g = sum Tr S^N z^N / N, summed over the partitions of i.
inline BigInt faa_di_bruno_c(const TraceTable& traces, int i, Branch branch) {
  if (i < 1 || i > traces.max_n()) throw Error(Errc::BadParams, "c(i) needs 1 <= i <= traces");
  Rational total = 0;
  for_each_partition(i, [&](std::span<const int> a) {
    Rational term = 1;
    int parts = 0;
    for (int k = 1; k <= i; ++k) {
      const int ak = a[static_cast<std::size_t>(k)];
      if (ak == 0) continue;
      parts += ak;
      term *= Rational(ipow(traces[k], static_cast<unsigned>(ak)),
                       factorial(static_cast<unsigned>(ak)) * ipow(BigInt(k), static_cast<unsigned>(ak)));
    }
    if (branch == Branch::Plus && parts % 2 == 0) term = -term;  // (-1)^{m+1}
    total += term;
  });
  return to_integer(total, Errc::NonIntegerCount, "c(" + std::to_string(i) + ")");
}

/// Tr S^N = N sum_{s |- N} (+-1)^{|s|+1} (|s|-1)!/s! prod c(i)^{s_i}.
/// `c` is indexed by degree; c[0] is ignored.
inline BigInt traces_from_c(std::span<const BigInt> c, Branch branch, int n) {
  if (n < 1 || static_cast<int>(c.size()) <= n) throw Error(Errc::BadParams, "traces_from_c needs c up to N");
  Rational total = 0;
  for_each_partition(n, [&](std::span<const int> s) {
    unsigned parts = 0;
    BigInt denom = 1;
    BigInt numer = 1;
    for (int i = 1; i <= n; ++i) {
      const int si = s[static_cast<std::size_t>(i)];
      if (si == 0) continue;
      parts += static_cast<unsigned>(si);
      denom *= factorial(static_cast<unsigned>(si));
      numer *= ipow(c[static_cast<std::size_t>(i)], static_cast<unsigned>(si));
    }
    Rational term(numer * factorial(parts - 1), denom);
    if (branch == Branch::Minus && parts % 2 == 0) term = -term;
    total += term;
  });
  return to_integer(total * n, Errc::NonIntegerCount, "Tr S^" + std::to_string(n));
}

struct RelationCheck {
  std::string id;
  std::string statement;
  bool pass = true;
  std::optional<int> first_failure;
};

struct RecursionReport {
  int max_n = 0;
  std::vector<RelationCheck> relations;

  bool all_pass() const {
    for (const auto& r : relations)
      if (!r.pass) return false;
    return true;
  }
  const RelationCheck& at(std::string_view id) const {
    for (const auto& r : relations)
      if (r.id == id) return r;
    throw Error(Errc::BadParams, "no relation " + std::string(id));
  }
};

/// Checks the relations tying omega(n) = Tr S^n, c+-(n), Omega(n) and a(n)
/// for n = 1..max_n, all in exact arithmetic.
inline RecursionReport verify_recursions(const TraceTable& trace_s, const EulerPolynomial& euler,
                                         int max_n) {
  if (max_n < 1 || max_n > trace_s.max_n()) {
    throw Error(Errc::BadParams, "verify_recursions needs 1 <= max_n <= traces");
  }
  const auto N = static_cast<std::size_t>(max_n);
  std::vector<BigInt> w(N + 1), cp(N + 1), cm(N + 1), om(N + 1), a(N + 1);
  for (int n = 1; n <= max_n; ++n) {
    w[n] = trace_s[n];
    cp[n] = faa_di_bruno_c(trace_s, n, Branch::Plus);
    cm[n] = faa_di_bruno_c(trace_s, n, Branch::Minus);
    om[n] = omega(trace_s, n);
    a[n] = euler[n];
  }
  a[0] = 1;

  RecursionReport report;
  report.max_n = max_n;
  auto check = [&](std::string id, std::string statement, int from,
                   const std::function<bool(int)>& holds) {
    RelationCheck r{std::move(id), std::move(statement), true, std::nullopt};
    for (int n = from; n <= max_n; ++n) {
      if (!holds(n)) {
        r.pass = false;
        r.first_failure = n;
        break;
      }
    }
    report.relations.push_back(std::move(r));
  };

  check("c-initial", "c+(1) = c-(1) = omega(1) = Omega(1)", 1, [&](int n) {
    return n != 1 || (cp[1] == w[1] && cm[1] == w[1] && om[1] == w[1]);
  });
  check("c-newton", "n c+-(n) = omega(n) -+ sum omega(n-k) c+-(k)", 2, [&](int n) {
    BigInt sp = 0, sm = 0;
    for (int k = 1; k < n; ++k) {
      sp += w[n - k] * cp[k];
      sm += w[n - k] * cm[k];
    }
    return n * cp[n] == w[n] - sp && n * cm[n] == w[n] + sm;
  });
  check("c-convolution", "c-(n) = c+(n) + sum c+(i) c-(n-i)", 2, [&](int n) {
    BigInt s = 0;
    for (int i = 1; i < n; ++i) s += cp[i] * cm[n - i];
    return cm[n] == cp[n] + s;
  });
  check("c-bound", "|c+(n)| <= c-(n)", 1, [&](int n) { return abs(cp[n]) <= cm[n]; });
  check("omega-recursion", "Omega(n) = c+(n) + (1/n) sum (sum_{g|k} g Omega(g)) c+(n-k) - sum_{g|n,g<n} (g/n) Omega(g)",
        1, [&](int n) {
          Rational rhs = cp[n];
          for (int k = 1; k < n; ++k) {
            BigInt inner = 0;
            for (int g : divisors(k)) inner += g * om[g];
            rhs += Rational(inner * cp[n - k], n);
          }
          for (int g : divisors(n))
            if (g != n) rhs -= Rational(g * om[g], n);
          return rhs == Rational(om[n]);
        });
  check("euler-recursion", "2n a(n) = -n c+(n) + sum_{k=1}^{n-1} (3k-n) a(k) c+(n-k), c+(0) = 0", 1, [&](int n) {
    BigInt rhs = -n * cp[n];
    for (int k = 1; k < n; ++k) rhs += (3 * k - n) * a[k] * cp[n - k];
    return 2 * n * a[n] == rhs;
  });
  return report;
}

}  // namespace feynman
