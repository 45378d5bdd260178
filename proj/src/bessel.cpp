#include "umbral/bessel.hpp"

#include <cmath>

#include <fmt/format.h>

#include "umbral/errors.hpp"
#include "umbral/gamma.hpp"
#include "umbral/polynomials.hpp"

namespace umbral {

namespace {

constexpr double kMaxSeriesArgument = 30.0;

// Shared driver: `first` is term 0, `ratio(r)` maps term r to term r+1.
template <class Ratio>
SeriesValue sum_ratio_series(long double first, Ratio ratio, const SeriesControl& ctl, const char* name) {
  SeriesSummer summer(ctl);
  long double term = first;
  int r = 0;
  while (!summer.add(term)) {
    if (!summer.has_budget()) {
      throw NoConvergence(fmt::format("{}: no convergence within {} terms", name, ctl.max_terms));
    }
    term *= ratio(r);
    ++r;
  }
  term *= ratio(r);
  return {static_cast<double>(summer.sum()), summer.terms(), static_cast<double>(std::fabs(term))};
}

void check_bessel_args(int n, double x, const char* name) {
  if (n < 0) {
    throw DomainError(fmt::format("{}: order n = {} must be >= 0", name, n));
  }
  if (!(std::abs(x) <= kMaxSeriesArgument)) {
    throw DomainError(fmt::format("{}: |x| = {} exceeds the series range {}", name, std::abs(x), kMaxSeriesArgument));
  }
}

long double bessel_first_term(int n, double x) {
  long double term = 1.0L;
  const long double half = static_cast<long double>(x) / 2.0L;
  for (int k = 1; k <= n; ++k) {
    term *= half / static_cast<long double>(k);
  }
  return term;
}

SeriesValue bessel_series(int n, double x, double sign, const SeriesControl& ctl, const char* name) {
  check_bessel_args(n, x, name);
  const long double q = static_cast<long double>(sign) * static_cast<long double>(x) * x / 4.0L;
  return sum_ratio_series(
      bessel_first_term(n, x),
      [&](int r) { return q / (static_cast<long double>(r + 1) * static_cast<long double>(n + r + 1)); }, ctl, name);
}

}  // namespace

SeriesValue bessel_j(int n, double x, const SeriesControl& ctl) { return bessel_series(n, x, -1.0, ctl, "bessel_j"); }

SeriesValue bessel_i(int n, double x, const SeriesControl& ctl) { return bessel_series(n, x, 1.0, ctl, "bessel_i"); }

SeriesValue tricomi(double alpha, double x, const SeriesControl& ctl) {
  const long double first = inv_gamma(alpha + 1.0);
  return sum_ratio_series(
      first,
      [&](int r) {
        return -static_cast<long double>(x) / (static_cast<long double>(r + 1) * (static_cast<long double>(alpha) + r + 1));
      },
      ctl, "tricomi");
}

SeriesValue hermite_bessel(double nu, std::span<const double> xs, const SeriesControl& ctl) {
  if (xs.empty()) {
    throw std::invalid_argument("hermite_bessel needs at least one argument");
  }
  HermiteCoefficients coeffs(xs);
  long double weight = inv_gamma(nu + 1.0);  // 1/Gamma(nu+r+1)
  SeriesSummer summer(ctl, coeffs.zero_run_bound());
  int r = 0;
  auto next_term = [&]() {
    const long double t = coeffs.next() * weight;
    weight /= static_cast<long double>(nu) + r + 1;
    ++r;
    return t;
  };
  while (!summer.add(next_term())) {
    if (!summer.has_budget()) {
      throw NoConvergence(fmt::format("hermite_bessel: no convergence within {} terms", ctl.max_terms));
    }
  }
  const double tail = static_cast<double>(std::fabs(next_term()));
  return {static_cast<double>(summer.sum()), summer.terms(), tail};
}

double even_hermite_gf(double x, double y, double t) {
  const double d = 1.0 - 4.0 * y * t;
  if (!(d > 0.0)) {
    throw DomainError(fmt::format("even_hermite_gf: 1 - 4yt = {} must be > 0", d));
  }
  return std::exp(t * x * x / d) / std::sqrt(d);
}

}  // namespace umbral
