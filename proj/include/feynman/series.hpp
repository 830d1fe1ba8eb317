#pragma once

// Truncated formal power series over exact rationals. A series of order k
// carries coefficients of z^0..z^k; results of binary operations take the
// smaller order of the operands.

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "feynman/error.hpp"
#include "feynman/numeric.hpp"

namespace feynman {

class RationalSeries {
 public:
  RationalSeries() : RationalSeries(0) {}
  explicit RationalSeries(int order) : coeffs_(static_cast<std::size_t>(std::max(order, 0)) + 1) {
    if (order < 0) throw Error(Errc::BadParams, "series order must be >= 0");
  }
  RationalSeries(int order, std::span<const Rational> coefficients) : RationalSeries(order) {
    for (std::size_t k = 0; k < coefficients.size() && k < coeffs_.size(); ++k) coeffs_[k] = coefficients[k];
  }
  RationalSeries(int order, std::span<const BigInt> coefficients) : RationalSeries(order) {
    for (std::size_t k = 0; k < coefficients.size() && k < coeffs_.size(); ++k) coeffs_[k] = coefficients[k];
  }

  static RationalSeries constant(int order, const Rational& c) {
    RationalSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }
  static RationalSeries one(int order) { return constant(order, 1); }
  /// c z^k, truncated away if k > order.
  static RationalSeries monomial(int order, int k, const Rational& c) {
    RationalSeries s(order);
    if (k <= order) s.coeffs_[static_cast<std::size_t>(k)] = c;
    return s;
  }

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  Rational& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  RationalSeries truncate(int order) const {
    RationalSeries s(std::min(order, this->order()));
    std::copy_n(coeffs_.begin(), s.coeffs_.size(), s.coeffs_.begin());
    return s;
  }

  friend RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
    RationalSeries c(std::min(a.order(), b.order()));
    for (int k = 0; k <= c.order(); ++k) c[k] = a[k] + b[k];
    return c;
  }
  friend RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) {
    RationalSeries c(std::min(a.order(), b.order()));
    for (int k = 0; k <= c.order(); ++k) c[k] = a[k] - b[k];
    return c;
  }
  friend RationalSeries operator-(const RationalSeries& a) {
    RationalSeries c(a.order());
    for (int k = 0; k <= c.order(); ++k) c[k] = -a[k];
    return c;
  }
  friend RationalSeries operator*(const Rational& s, const RationalSeries& a) {
    RationalSeries c(a.order());
    for (int k = 0; k <= c.order(); ++k) c[k] = s * a[k];
    return c;
  }
  friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
    RationalSeries c(std::min(a.order(), b.order()));
    for (int i = 0; i <= c.order(); ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; i + j <= c.order(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
  }
  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

  /// Replaces z by z^k.
  RationalSeries substitute_power(int k) const {
    RationalSeries c(order());
    for (int i = 0; i * k <= order(); ++i) c[i * k] = coeffs_[static_cast<std::size_t>(i)];
    return c;
  }

  RationalSeries derivative() const {
    RationalSeries c(std::max(order() - 1, 0));
    for (int k = 1; k <= order(); ++k) c[k - 1] = k * coeffs_[static_cast<std::size_t>(k)];
    return c;
  }

  bool is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& r) { return denominator(r) == 1; });
  }

  std::vector<BigInt> integer_coefficients(Errc code = Errc::NonIntegerCount) const {
    std::vector<BigInt> out;
    out.reserve(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      out.push_back(to_integer(coeffs_[k], code, "series coefficient " + std::to_string(k)));
    }
    return out;
  }

 private:
  std::vector<Rational> coeffs_;
};

inline RationalSeries mul(const RationalSeries& a, const RationalSeries& b) { return a * b; }

inline RationalSeries inverse(const RationalSeries& a) {
  if (a[0] == 0) throw Error(Errc::ZeroConstantTerm, "series has no inverse");
  RationalSeries b(a.order());
  const Rational lead = 1 / a[0];
  b[0] = lead;
  for (int k = 1; k <= a.order(); ++k) {
    Rational sum = 0;
    for (int i = 1; i <= k; ++i) sum += a[i] * b[k - i];
    b[k] = -sum * lead;
  }
  return b;
}

/// log(a) for a(0) = 1, from a * (log a)' = a'.
inline RationalSeries log(const RationalSeries& a) {
  if (a[0] != 1) throw Error(Errc::BadConstantTerm, "log needs constant term 1");
  RationalSeries l(a.order());
  for (int k = 1; k <= a.order(); ++k) {
    // k l_k = k a_k - sum_{i=1}^{k-1} i l_i a_{k-i}
    Rational sum = k * a[k];
    for (int i = 1; i < k; ++i) sum -= i * l[i] * a[k - i];
    l[k] = sum / k;
  }
  return l;
}

/// exp(a) for a(0) = 0, from e' = a' e.
inline RationalSeries exp(const RationalSeries& a) {
  if (a[0] != 0) throw Error(Errc::BadConstantTerm, "exp needs constant term 0");
  RationalSeries e(a.order());
  e[0] = 1;
  for (int k = 1; k <= a.order(); ++k) {
    Rational sum = 0;
    for (int i = 1; i <= k; ++i) sum += i * a[i] * e[k - i];
    e[k] = sum / k;
  }
  return e;
}

/// Factor (1 + sign*z^degree)^exponent.
struct ProductFactor {
  int degree = 1;
  int sign = -1;
  BigInt exponent = 0;
};

/// prod (1 + sign z^N)^e_N truncated at `order`; negative exponents expand by
/// the generalized binomial series.
inline RationalSeries product_form(std::span<const ProductFactor> factors, int order) {
  RationalSeries result = RationalSeries::one(order);
  for (const auto& f : factors) {
    if (f.degree < 1) throw Error(Errc::BadParams, "product factor degree must be >= 1");
    if (f.exponent == 0 || f.degree > order) continue;
    RationalSeries factor(order);
    BigInt binom = 1;  // C(e, k)
    BigInt power = 1;  // sign^k
    for (int k = 0; k * f.degree <= order; ++k) {
      factor[k * f.degree] = binom * power;
      binom = binom * (f.exponent - k) / (k + 1);
      power *= f.sign;
      if (binom == 0) break;
    }
    result = result * factor;
  }
  return result;
}

/// Index of the first differing coefficient up to the common order.
inline std::optional<int> first_mismatch(const RationalSeries& a, const RationalSeries& b) {
  const int order = std::min(a.order(), b.order());
  for (int k = 0; k <= order; ++k)
    if (a[k] != b[k]) return k;
  return std::nullopt;
}

/// `c0 + c1 z + ... + ck z^k [O(z^{k+1})]`, zero terms omitted.
inline std::string to_string(const RationalSeries& s) {
  std::string out;
  for (int k = 0; k <= s.order(); ++k) {
    const Rational& c = s[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = mag == 1 && k > 0;
    if (!unit) out += to_string(mag);
    if (k > 0) {
      if (!unit) out += " ";
      out += k == 1 ? "z" : "z^" + std::to_string(k);
    }
  }
  if (out.empty()) out = "0";
  return out + " [O(z^" + std::to_string(s.order() + 1) + ")]";
}

}  // namespace feynman
