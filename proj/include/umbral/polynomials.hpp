#pragma once

// Two-variable Hermite, m-variable Hermite, two-variable Laguerre,
// associated Laguerre and hybrid Laguerre-Hermite polynomials.
//
// The evaluators are templates over the scalar type so the same recurrences
// run in double and in exact Rational arithmetic.

#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "umbral/umbral_core.hpp"

namespace umbral {

enum class FamilyTag { hermite2, hermite_m, laguerre2, assoc_laguerre, hybrid_hl };

struct PolyFamily {
  FamilyTag tag = FamilyTag::laguerre2;
  int n = 0;
  double alpha = 0.0;  // assoc_laguerre only
  int m = 1;           // hermite_m only

  void validate() const;
};

[[nodiscard]] std::string_view to_string(FamilyTag tag) noexcept;
[[nodiscard]] std::optional<FamilyTag> parse_family(std::string_view name) noexcept;

namespace detail {

inline void require_degree(int n) {
  if (n < 0) {
    throw std::invalid_argument("polynomial degree must be >= 0");
  }
}

template <class T>
T ipow(T base, int e) {
  T result(1);
  while (e > 0) {
    if (e & 1) {
      result *= base;
    }
    e >>= 1;
    if (e > 0) {
      base *= base;
    }
  }
  return result;
}

// (k+1) L_{k+1} = ((2k+a+1) y - x) L_k - (k+a) y^2 L_{k-1}
template <class T>
T laguerre_recurrence(int n, const T& alpha, const T& x, const T& y) {
  require_degree(n);
  if (n == 0) {
    return T(1);
  }
  T prev(1);
  T cur = (alpha + T(1)) * y - x;
  const T y2 = y * y;
  for (int k = 1; k < n; ++k) {
    T next = ((T(2 * k + 1) + alpha) * y - x) * cur - (T(k) + alpha) * y2 * prev;
    next /= T(k + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace detail

/// H_n(x, y) = n! sum_r x^(n-2r) y^r / ((n-2r)! r!), via
/// H_{k+1} = x H_k + 2 k y H_{k-1}.
template <class T>
T hermite2(int n, const T& x, const T& y) {
  detail::require_degree(n);
  if (n == 0) {
    return T(1);
  }
  T prev(1);
  T cur = x;
  for (int k = 1; k < n; ++k) {
    T next = x * cur + T(2 * k) * y * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// m-variable Hermite H_n^{(m)}(x_1..x_m), generating function
/// exp(sum_s x_s t^s). Built by the recursion on m
///   H_n^{(m)} = n! sum_r x_m^r H_{n-mr}^{(m-1)} / ((n-mr)! r!)
/// carried out on the normalized values H_k^{(j)}/k!.
template <class T>
T hermite_m(int n, std::span<const T> xs) {
  detail::require_degree(n);
  if (xs.empty()) {
    throw std::invalid_argument("hermite_m needs at least one variable");
  }
  const auto size = static_cast<std::size_t>(n) + 1;
  std::vector<T> level(size);
  {
    T term(1);
    for (int k = 0; k <= n; ++k) {
      level[static_cast<std::size_t>(k)] = term;  // x_1^k / k!
      term = term * xs[0] / T(k + 1);
    }
  }
  for (std::size_t j = 2; j <= xs.size(); ++j) {
    const int step = static_cast<int>(j);
    std::vector<T> next(size, T(0));
    for (int k = 0; k <= n; ++k) {
      T weight(1);  // x_j^r / r!
      T acc(0);
      for (int r = 0; step * r <= k; ++r) {
        acc += weight * level[static_cast<std::size_t>(k - step * r)];
        weight = weight * xs[j - 1] / T(r + 1);
      }
      next[static_cast<std::size_t>(k)] = std::move(acc);
    }
    level = std::move(next);
  }
  T factorial(1);
  for (int k = 2; k <= n; ++k) {
    factorial *= T(k);
  }
  return level[static_cast<std::size_t>(n)] * factorial;
}

/// L_n(x, y) = sum_s C(n,s) (-1)^s y^(n-s) x^s / s!.
template <class T>
T laguerre2(int n, const T& x, const T& y) {
  return detail::laguerre_recurrence(n, T(0), x, y);
}

/// L_n^{(alpha)}(x, y) = Gamma(n+alpha+1)/n! sum_s C(n,s)(-1)^s y^(n-s) x^s / Gamma(s+alpha+1).
/// Throws GammaPole when alpha is a negative integer.
[[nodiscard]] double assoc_laguerre(int n, double alpha, double x, double y);

/// HL_n(x, y) = H_n(x, c y) phi0 = n! sum_r x^(n-2r) y^r / ((n-2r)! (r!)^2), via
/// (k+1) HL_{k+1} = (2k+1) x HL_k - k (x^2 - 4y) HL_{k-1}.
template <class T>
T hybrid_hl(int n, const T& x, const T& y) {
  detail::require_degree(n);
  if (n == 0) {
    return T(1);
  }
  const T shift = x * x - T(4) * y;
  T prev(1);
  T cur = x;
  for (int k = 1; k < n; ++k) {
    T next = T(2 * k + 1) * x * cur - T(k) * shift * prev;
    next /= T(k + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Successive coefficients c_r = H_r^{(m)}(x_1..x_m)/r! of
/// exp(sum_s x_s t^s), from r c_r = sum_s s x_s c_{r-s}.
class HermiteCoefficients {
 public:
  explicit HermiteCoefficients(std::span<const double> xs);

  /// Returns c_0, c_1, ... on successive calls.
  long double next();

  /// Longest possible run of structurally zero coefficients, plus one.
  [[nodiscard]] int zero_run_bound() const noexcept { return zero_run_bound_; }

 private:
  std::vector<long double> xs_;
  std::vector<long double> history_;
  int zero_run_bound_ = 1;
};

// Umbral definitions, evaluated with eval_poly under the rule noted.

/// (y - c x)^n, Laguerre vacuum.
[[nodiscard]] UmbralPolynomial laguerre_umbral(int n, double x, double y);
/// Gamma(n+alpha+1)/n! c^alpha (y - c x)^n, Laguerre vacuum.
[[nodiscard]] UmbralPolynomial assoc_laguerre_umbral(int n, double alpha, double x, double y);
/// (x + h)^n, Hermite vacuum with parameter y.
[[nodiscard]] UmbralPolynomial hermite_umbral(int n, double x);
/// (x + c^(1/2) h)^n, tensor vacuum with parameter y.
[[nodiscard]] UmbralPolynomial hybrid_umbral(int n, double x);

}  // namespace umbral
