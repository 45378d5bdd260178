#include "umbral/asymptotics.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "umbral/bessel.hpp"
#include "umbral/errors.hpp"
#include "umbral/gamma.hpp"

namespace umbral {

namespace {

// The log expansion divides by x.
constexpr double kMinHermiteX = 1e-8;

void require_index_and_order(int n, int m) {
  if (n < 1) {
    throw DomainError(fmt::format("asymptotic index n = {} must be >= 1", n));
  }
  if (m < 1) {
    throw DomainError(fmt::format("expansion order m = {} must be >= 1", m));
  }
}

void require_nonzero_y(double y) {
  if (y == 0.0) {
    throw DomainError("Laguerre asymptotics need y != 0");
  }
}

void require_hermite_x(double x) {
  if (!(std::abs(x) >= kMinHermiteX)) {
    throw DomainError(fmt::format("|x| = {} is below {}; the expansion is singular at x = 0", std::abs(x), kMinHermiteX));
  }
}

// x^n sum_k c_{2k} Y^k (2k)!/k!^p, p = 1 (Hermite vacuum) or 2 (tensor vacuum).
SeriesValue even_moment_series(int n, double x, double y, int m, int k_factorial_power, const SeriesControl& ctl,
                               const char* name) {
  require_index_and_order(n, m);
  require_hermite_x(x);
  const auto a = hermite_log_coefficients(n, x, m);
  const long double big_y = static_cast<long double>(n) * n * y;
  HermiteCoefficients coeffs(a);
  long double moment = 1.0L;  // Y^k (2k)! / k!^p
  int k = 0;
  auto next_term = [&]() {
    const long double c = coeffs.next();
    coeffs.next();  // odd powers of h vanish against the vacuum
    const long double t = c * moment;
    moment *= big_y * static_cast<long double>(2 * k + 1) * static_cast<long double>(2 * k + 2);
    for (int p = 0; p < k_factorial_power; ++p) {
      moment /= static_cast<long double>(k + 1);
    }
    ++k;
    return t;
  };
  SeriesSummer summer(ctl);
  while (!summer.add(next_term())) {
    if (!summer.has_budget()) {
      throw NoConvergence(fmt::format("{}: no convergence within {} terms", name, ctl.max_terms));
    }
  }
  const double scale = std::pow(x, n);
  const double tail = static_cast<double>(std::fabs(next_term())) * std::abs(scale);
  return {scale * static_cast<double>(summer.sum()), summer.terms(), tail};
}

}  // namespace

std::vector<double> laguerre_log_coefficients(int n, double x, double y, int m) {
  require_index_and_order(n, m);
  require_nonzero_y(y);
  std::vector<double> a;
  a.reserve(static_cast<std::size_t>(m));
  const double ratio = x / y;
  double power = 1.0;
  for (int s = 1; s <= m; ++s) {
    power *= ratio;
    a.push_back(-static_cast<double>(n) * power / s);
  }
  return a;
}

std::vector<double> hermite_log_coefficients(int n, double x, int m) {
  require_index_and_order(n, m);
  require_hermite_x(x);
  std::vector<double> a;
  a.reserve(static_cast<std::size_t>(m));
  // 1/(x n) to the power s, times n / s
  const double base = 1.0 / (x * n);
  double power = 1.0;
  for (int s = 1; s <= m; ++s) {
    power *= base;
    const double sign = (s % 2 == 1) ? 1.0 : -1.0;
    a.push_back(sign * static_cast<double>(n) * power / s);
  }
  return a;
}

UmbralPolynomial laguerre_log_exponent(int n, double x, double y, int m) {
  const auto a = laguerre_log_coefficients(n, x, y, m);
  UmbralPolynomial p;
  for (int s = 1; s <= m; ++s) {
    p += UmbralPolynomial::c(a[static_cast<std::size_t>(s - 1)], s);
  }
  return p;
}

UmbralPolynomial hermite_log_exponent(int n, double x, int m) {
  const auto a = hermite_log_coefficients(n, x, m);
  UmbralPolynomial p;
  for (int s = 1; s <= m; ++s) {
    p += UmbralPolynomial::h(a[static_cast<std::size_t>(s - 1)], s);
  }
  return p;
}

UmbralPolynomial hybrid_log_exponent(int n, double x, int m) {
  const auto a = hermite_log_coefficients(n, x, m);
  UmbralPolynomial p;
  for (int s = 1; s <= m; ++s) {
    p += UmbralPolynomial(UmbralMonomial{a[static_cast<std::size_t>(s - 1)], Exponent::fraction(s, 2), s});
  }
  return p;
}

SeriesValue approx_laguerre(int n, double x, double y, int m, const SeriesControl& ctl) {
  const auto a = laguerre_log_coefficients(n, x, y, m);
  const SeriesValue hc = hermite_bessel(0.0, a, ctl);
  const double scale = std::pow(y, n);
  return {scale * hc.value, hc.terms_used, std::abs(scale) * hc.tail_bound};
}

SeriesValue approx_laguerre_j2(int n, double x, double y, const SeriesControl& ctl) {
  require_index_and_order(n, 2);
  require_nonzero_y(y);
  const double u = n * x / y;
  if (u < 0.0) {
    throw DomainError(fmt::format("two-Bessel form needs u = n x / y >= 0, got {}", u));
  }
  const double arg = 2.0 * std::sqrt(u);
  const SeriesValue j0 = bessel_j(0, arg, ctl);
  const SeriesValue j2 = bessel_j(2, arg, ctl);
  const double scale = std::pow(y, n);
  const double corr = u / (2.0 * n);
  return {scale * (j0.value - corr * j2.value), j0.terms_used + j2.terms_used,
          std::abs(scale) * (j0.tail_bound + corr * j2.tail_bound)};
}

SeriesValue approx_assoc_laguerre(int n, double alpha, double x, double y, int m, const SeriesControl& ctl) {
  PolyFamily{FamilyTag::assoc_laguerre, n, alpha, 1}.validate();
  const auto a = laguerre_log_coefficients(n, x, y, m);
  const double ratio = gamma_ratio(n + alpha + 1.0, n + 1.0);
  const SeriesValue hc = hermite_bessel(alpha, a, ctl);
  const double scale = std::pow(y, n);
  return {ratio * (scale * hc.value), hc.terms_used, std::abs(ratio * scale) * hc.tail_bound};
}

SeriesValue approx_hermite(int n, double x, double y, int m, const SeriesControl& ctl) {
  return even_moment_series(n, x, y, m, 1, ctl, "approx_hermite");
}

double approx_hermite_closed(int n, double x, double y) {
  require_index_and_order(n, 2);
  require_hermite_x(x);
  if (x < 0.0) {
    const double mirrored = approx_hermite_closed(n, -x, y);
    return (n % 2 == 0) ? mirrored : -mirrored;
  }
  const double big_y = static_cast<double>(n) * n * y;
  const double d = n * x * x + 2.0 * big_y;
  if (!(d > 0.0)) {
    throw DomainError(fmt::format("closed Hermite form needs n x^2 + 2 n^2 y > 0, got {}", d));
  }
  return std::sqrt(static_cast<double>(n)) * std::pow(x, n + 1) * std::exp(n * big_y / d) / std::sqrt(d);
}

SeriesValue approx_hybrid(int n, double x, double y, int m, const SeriesControl& ctl) {
  return even_moment_series(n, x, y, m, 2, ctl, "approx_hybrid");
}

std::string_view to_string(Formula f) noexcept {
  switch (f) {
    case Formula::order_m:
      return "order_m";
    case Formula::laguerre_j2:
      return "j2";
    case Formula::hermite_closed:
      return "closed";
  }
  return "unknown";
}

double relative_error(double approx, double exact) noexcept {
  const double diff = std::abs(approx - exact);
  if (exact == 0.0) {
    return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return diff / std::abs(exact);
}

std::pair<double, bool> reference_value(const PolyFamily& family, const EvalPoint& point) {
  family.validate();
  const int n = family.n;
  if (point.is_exact()) {
    switch (family.tag) {
      case FamilyTag::laguerre2:
        return {to_double(exact_laguerre(n, *point.exact_x, *point.exact_y)), true};
      case FamilyTag::hermite2:
        return {to_double(exact_hermite(n, *point.exact_x, *point.exact_y)), true};
      case FamilyTag::hybrid_hl:
        return {to_double(exact_hybrid(n, *point.exact_x, *point.exact_y)), true};
      default:
        break;
    }
  }
  switch (family.tag) {
    case FamilyTag::laguerre2:
      return {laguerre2(n, point.x, point.y), false};
    case FamilyTag::hermite2:
      return {hermite2(n, point.x, point.y), false};
    case FamilyTag::hybrid_hl:
      return {hybrid_hl(n, point.x, point.y), false};
    case FamilyTag::assoc_laguerre:
      return {assoc_laguerre(n, family.alpha, point.x, point.y), false};
    case FamilyTag::hermite_m:
      break;
  }
  throw DomainError("hermitem has no two-variable reference value");
}

ApproxReport make_report(const PolyFamily& family, const EvalPoint& point, int m, const SeriesControl& ctl,
                         Formula formula) {
  family.validate();
  ApproxReport rep;
  rep.family = family;
  rep.n = family.n;
  rep.x = point.x;
  rep.y = point.y;
  rep.order_m = m;
  rep.formula = formula;

  SeriesValue approx;
  switch (formula) {
    case Formula::order_m:
      switch (family.tag) {
        case FamilyTag::laguerre2:
          approx = approx_laguerre(family.n, point.x, point.y, m, ctl);
          break;
        case FamilyTag::assoc_laguerre:
          approx = approx_assoc_laguerre(family.n, family.alpha, point.x, point.y, m, ctl);
          break;
        case FamilyTag::hermite2:
          approx = approx_hermite(family.n, point.x, point.y, m, ctl);
          break;
        case FamilyTag::hybrid_hl:
          approx = approx_hybrid(family.n, point.x, point.y, m, ctl);
          break;
        case FamilyTag::hermite_m:
          throw DomainError("hermitem has no large-index formula");
      }
      break;
    case Formula::laguerre_j2:
      if (family.tag != FamilyTag::laguerre2) {
        throw DomainError("the two-Bessel form applies to laguerre2 only");
      }
      approx = approx_laguerre_j2(family.n, point.x, point.y, ctl);
      rep.order_m = 2;
      break;
    case Formula::hermite_closed:
      if (family.tag != FamilyTag::hermite2) {
        throw DomainError("the closed Gaussian form applies to hermite2 only");
      }
      approx = {approx_hermite_closed(family.n, point.x, point.y), 0, 0.0};
      rep.order_m = 2;
      break;
  }

  const auto [exact, rational] = reference_value(family, point);
  rep.exact = exact;
  rep.exact_from_rational = rational;
  rep.approx = approx.value;
  rep.terms_used = approx.terms_used;
  rep.relative_error = relative_error(rep.approx, rep.exact);
  return rep;
}

}  // namespace umbral
