#pragma once

// Large-index approximations of order m.
//
// Every formula takes the true evaluation point of the polynomial and
// performs the rescaling internally:
//   Laguerre L_n(x, y)        u = n x / y
//   Hermite / hybrid at (x,y) Y = n^2 y
// Order m truncates n ln(1 + z/n) after m terms; the resulting umbral
// exponential is summed through m-variable Hermite coefficients.

#include <optional>
#include <vector>

#include "umbral/oracle.hpp"
#include "umbral/polynomials.hpp"
#include "umbral/series.hpp"
#include "umbral/umbral_core.hpp"

namespace umbral {

/// a_s = -n (x/y)^s / s, s = 1..m.
[[nodiscard]] std::vector<double> laguerre_log_coefficients(int n, double x, double y, int m);
/// a_s = (-1)^(s-1) / (s n^(s-1) x^s), s = 1..m. Shared by Hermite and hybrid.
[[nodiscard]] std::vector<double> hermite_log_coefficients(int n, double x, int m);

/// sum_s a_s c^s
[[nodiscard]] UmbralPolynomial laguerre_log_exponent(int n, double x, double y, int m);
/// sum_s a_s h^s
[[nodiscard]] UmbralPolynomial hermite_log_exponent(int n, double x, int m);
/// sum_s a_s c^(s/2) h^s
[[nodiscard]] UmbralPolynomial hybrid_log_exponent(int n, double x, int m);

/// L_n(x, y) ~ y^n _H C_0(a_1..a_m). m = 1 is y^n J_0(2 sqrt(u)).
[[nodiscard]] SeriesValue approx_laguerre(int n, double x, double y, int m, const SeriesControl& ctl = {});

/// Second-order two-Bessel form y^n (J_0(2 sqrt u) - u/(2n) J_2(2 sqrt u)).
/// DomainError for y = 0 or u < 0.
[[nodiscard]] SeriesValue approx_laguerre_j2(int n, double x, double y, const SeriesControl& ctl = {});

/// L_n^{(alpha)}(x, y) ~ Gamma(n+alpha+1)/n! y^n _H C_alpha(a_1..a_m).
[[nodiscard]] SeriesValue approx_assoc_laguerre(int n, double alpha, double x, double y, int m,
                                                const SeriesControl& ctl = {});

/// H_n(x, y) ~ x^n sum_k H_{2k}^{(m)}(a) Y^k / k!. m = 1 is x^n exp(Y/x^2).
[[nodiscard]] SeriesValue approx_hermite(int n, double x, double y, int m, const SeriesControl& ctl = {});

/// Second-order Gaussian closed form sqrt(n) x^(n+1) exp(nY/(nx^2+2Y)) / sqrt(nx^2+2Y).
/// Negative x goes through H_n(-x, y) = (-1)^n H_n(x, y).
[[nodiscard]] double approx_hermite_closed(int n, double x, double y);

/// HL_n(x, y) ~ x^n sum_k H_{2k}^{(m)}(a) Y^k / (k!)^2. m = 1 is x^n I_0(2 sqrt(Y)/x).
[[nodiscard]] SeriesValue approx_hybrid(int n, double x, double y, int m, const SeriesControl& ctl = {});

enum class Formula { order_m, laguerre_j2, hermite_closed };

[[nodiscard]] std::string_view to_string(Formula f) noexcept;

/// Evaluation point. When both exact coordinates are present the oracle
/// value comes from rational arithmetic.
struct EvalPoint {
  double x = 0.0;
  double y = 0.0;
  std::optional<Rational> exact_x;
  std::optional<Rational> exact_y;

  static EvalPoint decimal(double x, double y) { return {x, y, std::nullopt, std::nullopt}; }
  static EvalPoint exact(const Rational& x, const Rational& y) { return {to_double(x), to_double(y), x, y}; }
  [[nodiscard]] bool is_exact() const noexcept { return exact_x.has_value() && exact_y.has_value(); }
};

/// One row of an accuracy table.
struct ApproxReport {
  PolyFamily family;
  int n = 0;
  double x = 0.0;
  double y = 0.0;
  int order_m = 1;
  Formula formula = Formula::order_m;
  double exact = 0.0;
  double approx = 0.0;
  /// |approx - exact| / |exact|; 0 when both vanish, +inf when only exact does.
  double relative_error = 0.0;
  int terms_used = 0;
  bool exact_from_rational = false;
};

[[nodiscard]] double relative_error(double approx, double exact) noexcept;

/// Exact value of the family at the point: rational oracle when the point is
/// exact and the family has one (laguerre2, hermite2, hybrid), float
/// evaluator otherwise. The bool reports which route was taken.
[[nodiscard]] std::pair<double, bool> reference_value(const PolyFamily& family, const EvalPoint& point);

/// Pairs the reference value with the chosen approximation.
[[nodiscard]] ApproxReport make_report(const PolyFamily& family, const EvalPoint& point, int m,
                                       const SeriesControl& ctl = {}, Formula formula = Formula::order_m);

}  // namespace umbral
