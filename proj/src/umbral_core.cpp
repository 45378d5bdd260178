#include "umbral/umbral_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

#include "umbral/errors.hpp"
#include "umbral/gamma.hpp"

namespace umbral {

// ---------------------------------------------------------------------------
// Exponent

namespace {

using Wide = __int128;

bool fits_int64(Wide v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

}  // namespace

Exponent Exponent::fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) {
    throw std::invalid_argument("Exponent::fraction: zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = num == 0 ? den : gcd64(num, den);
  Exponent e;
  e.num_ = num / g;
  e.den_ = den / g;
  e.value_ = static_cast<double>(e.num_) / static_cast<double>(e.den_);
  return e;
}

Exponent Exponent::real(double value) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("Exponent::real: non-finite exponent");
  }
  // Dyadic doubles with small denominators are exact rationals.
  for (std::int64_t den = 1; den <= 1024; den *= 2) {
    const double scaled = value * static_cast<double>(den);
    if (scaled == std::floor(scaled) && std::abs(scaled) < 9.0e15) {
      return fraction(static_cast<std::int64_t>(scaled), den);
    }
  }
  Exponent e;
  e.num_ = 0;
  e.den_ = 0;
  e.value_ = value;
  return e;
}

Exponent operator+(const Exponent& a, const Exponent& b) {
  if (a.is_rational() && b.is_rational()) {
    const Wide num = Wide{a.num_} * b.den_ + Wide{b.num_} * a.den_;
    const Wide den = Wide{a.den_} * b.den_;
    if (fits_int64(num) && fits_int64(den)) {
      return Exponent::fraction(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
    }
  }
  return Exponent::real(a.value_ + b.value_);
}

Exponent operator*(std::int64_t k, const Exponent& e) {
  if (e.is_rational()) {
    const Wide num = Wide{k} * e.num_;
    if (fits_int64(num)) {
      return Exponent::fraction(static_cast<std::int64_t>(num), e.den_);
    }
  }
  return Exponent::real(static_cast<double>(k) * e.value_);
}

bool Exponent::same_as(const Exponent& other) const noexcept {
  if (is_rational() && other.is_rational()) {
    return num_ == other.num_ && den_ == other.den_;
  }
  return std::abs(value_ - other.value_) <= kMergeTolerance;
}

// ---------------------------------------------------------------------------
// Monomials and polynomials

void UmbralMonomial::validate() const {
  if (c_exponent.value() < 0.0) {
    throw std::invalid_argument(fmt::format("negative c exponent {}", c_exponent.value()));
  }
  if (h_exponent < 0) {
    throw std::invalid_argument(fmt::format("negative h exponent {}", h_exponent));
  }
}

UmbralMonomial operator*(const UmbralMonomial& a, const UmbralMonomial& b) {
  return {a.coefficient * b.coefficient, a.c_exponent + b.c_exponent, a.h_exponent + b.h_exponent};
}

UmbralPolynomial::UmbralPolynomial(double constant) {
  terms_.push_back({constant, 0, 0});
  canonicalize();
}

UmbralPolynomial::UmbralPolynomial(const UmbralMonomial& m) {
  m.validate();
  terms_.push_back(m);
  canonicalize();
}

UmbralPolynomial::UmbralPolynomial(std::vector<UmbralMonomial> terms) : terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    t.validate();
  }
  canonicalize();
}

UmbralPolynomial UmbralPolynomial::c(double coef, Exponent a) { return UmbralPolynomial(UmbralMonomial{coef, a, 0}); }

UmbralPolynomial UmbralPolynomial::h(double coef, int b) { return UmbralPolynomial(UmbralMonomial{coef, 0, b}); }

void UmbralPolynomial::canonicalize() {
  std::stable_sort(terms_.begin(), terms_.end(), [](const UmbralMonomial& a, const UmbralMonomial& b) {
    if (a.c_exponent.same_as(b.c_exponent)) {
      return a.h_exponent < b.h_exponent;
    }
    return a.c_exponent.value() < b.c_exponent.value();
  });
  std::vector<UmbralMonomial> merged;
  merged.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!merged.empty() && merged.back().same_powers(t)) {
      merged.back().coefficient += t.coefficient;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const UmbralMonomial& m) { return m.coefficient == 0.0; });
  terms_ = std::move(merged);
}

UmbralPolynomial& UmbralPolynomial::operator+=(const UmbralPolynomial& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  canonicalize();
  return *this;
}

UmbralPolynomial& UmbralPolynomial::operator-=(const UmbralPolynomial& other) {
  for (auto t : other.terms_) {
    t.coefficient = -t.coefficient;
    terms_.push_back(t);
  }
  canonicalize();
  return *this;
}

UmbralPolynomial& UmbralPolynomial::operator*=(const UmbralPolynomial& other) {
  std::vector<UmbralMonomial> product;
  product.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) {
      product.push_back(a * b);
    }
  }
  terms_ = std::move(product);
  canonicalize();
  return *this;
}

UmbralPolynomial& UmbralPolynomial::operator*=(double scalar) {
  for (auto& t : terms_) {
    t.coefficient *= scalar;
  }
  canonicalize();
  return *this;
}

UmbralPolynomial UmbralPolynomial::pow(int k) const {
  if (k < 0) {
    throw std::invalid_argument("UmbralPolynomial::pow: negative power");
  }
  UmbralPolynomial result(1.0);
  UmbralPolynomial base = *this;
  while (k > 0) {
    if (k & 1) {
      result *= base;
    }
    k >>= 1;
    if (k > 0) {
      base *= base;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Vacuum moments

double c_moment(double mu) { return inv_gamma(mu + 1.0); }

double h_moment(int r, double y) {
  if (r < 0) {
    throw std::invalid_argument("h_moment: negative power");
  }
  if (r % 2 != 0) {
    return 0.0;
  }
  const int k = r / 2;
  double value = 1.0;
  for (int j = 1; j <= k; ++j) {
    value *= y * static_cast<double>(k + j);
  }
  return value;
}

namespace {

// Extended-range variants used inside eval_exp, where moments of high grade
// overflow double while the matching coefficients underflow.
long double c_moment_wide(double mu) {
  const double z = mu + 1.0;
  if (is_gamma_pole(z)) {
    throw GammaPole(fmt::format("c moment at gamma pole mu = {}", mu));
  }
  if (z < 170.0) {
    return 1.0L / std::tgamma(static_cast<long double>(z));
  }
  return std::exp(-std::lgamma(static_cast<long double>(z)));
}

long double h_moment_wide(int r, double y) {
  if (r % 2 != 0) {
    return 0.0L;
  }
  const int k = r / 2;
  long double value = 1.0L;
  for (int j = 1; j <= k; ++j) {
    value *= static_cast<long double>(y) * static_cast<long double>(k + j);
  }
  return value;
}

void check_rule(const MomentRule& rule, const Exponent& c, int h) {
  if (rule.kind() == MomentRule::Kind::laguerre && h != 0) {
    throw std::invalid_argument("pure c vacuum cannot evaluate h powers");
  }
  if (rule.kind() == MomentRule::Kind::hermite && !c.same_as(Exponent{0})) {
    throw std::invalid_argument("pure h vacuum cannot evaluate c powers");
  }
}

long double moment_wide(const MomentRule& rule, const Exponent& c, int h) {
  check_rule(rule, c, h);
  if (h % 2 != 0) {
    return 0.0L;
  }
  return c_moment_wide(c.value()) * h_moment_wide(h, rule.h_parameter());
}

}  // namespace

double MomentRule::moment(const UmbralMonomial& m) const {
  check_rule(*this, m.c_exponent, m.h_exponent);
  switch (kind_) {
    case Kind::laguerre:
      return c_moment(m.c_exponent.value());
    case Kind::hermite:
      return h_moment(m.h_exponent, y_);
    case Kind::tensor:
      break;
  }
  return c_moment(m.c_exponent.value()) * h_moment(m.h_exponent, y_);
}

double eval_poly(const UmbralPolynomial& p, const MomentRule& rule) {
  double sum = 0.0;
  for (const auto& t : p.terms()) {
    sum += t.coefficient * rule.moment(t);
  }
  return sum;
}

// ---------------------------------------------------------------------------
// exp(p) against the vacuum

namespace {

struct Grade {
  std::int64_t num;
  std::int64_t den;
};

Grade grade_of(const UmbralMonomial& m) {
  if (!m.c_exponent.is_rational()) {
    throw std::invalid_argument("eval_exp: exponent polynomial needs rational c exponents");
  }
  const Exponent g = m.c_exponent + Exponent{m.h_exponent};
  if (g.numerator() <= 0) {
    throw std::invalid_argument("eval_exp: exponent polynomial has a constant term");
  }
  return {g.numerator(), g.denominator()};
}

}  // namespace

SeriesValue eval_exp(const UmbralPolynomial& p, const MomentRule& rule, const SeriesControl& ctl,
                     const UmbralMonomial& prefactor) {
  ctl.validate();
  prefactor.validate();

  auto level_value = [&](const UmbralPolynomial& level) {
    long double v = 0.0L;
    for (const auto& t : level.terms()) {
      const auto m = prefactor * t;
      v += static_cast<long double>(m.coefficient) * moment_wide(rule, m.c_exponent, m.h_exponent);
    }
    return v;
  };

  if (p.empty()) {
    const double v = static_cast<double>(level_value(UmbralPolynomial(1.0)));
    return {v, 1, 0.0};
  }

  // Express every grade as an integer multiple k_i of a common unit.
  std::vector<Grade> grades;
  bool has_h = false;
  for (const auto& t : p.terms()) {
    grades.push_back(grade_of(t));
    has_h = has_h || t.h_exponent > 0;
  }
  std::int64_t num_gcd = 0;
  std::int64_t den_lcm = 1;
  for (const auto& g : grades) {
    num_gcd = std::gcd(num_gcd, g.num);
    den_lcm = std::lcm(den_lcm, g.den);
  }
  std::vector<int> steps;
  int max_step = 1;
  for (const auto& g : grades) {
    const std::int64_t k = (g.num / num_gcd) * (den_lcm / g.den);
    steps.push_back(static_cast<int>(k));
    max_step = std::max(max_step, static_cast<int>(k));
  }
  // Cancellation can zero out up to max_step consecutive grades.
  const int min_run = (has_h ? 2 : 1) * max_step + 1;

  // N E_N = sum_i k_i p_i E_{N - k_i}, the grade-weighted derivative of exp.
  std::vector<UmbralPolynomial> levels{UmbralPolynomial(1.0)};
  auto next_level = [&]() {
    const int n = static_cast<int>(levels.size());
    UmbralPolynomial acc;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      if (steps[i] <= n) {
        UmbralPolynomial piece = levels[static_cast<std::size_t>(n - steps[i])];
        piece *= UmbralPolynomial(p.terms()[i]);
        piece *= static_cast<double>(steps[i]) / static_cast<double>(n);
        acc += piece;
      }
    }
    levels.push_back(std::move(acc));
    return level_value(levels.back());
  };

  SeriesSummer summer(ctl, min_run);
  summer.add(level_value(levels.front()));
  while (!summer.done()) {
    if (!summer.has_budget()) {
      throw NoConvergence(fmt::format("eval_exp: no convergence within {} grades", ctl.max_terms));
    }
    summer.add(next_level());
  }
  const double tail = static_cast<double>(std::fabs(next_level()));
  return {static_cast<double>(summer.sum()), summer.terms(), tail};
}

}  // namespace umbral
