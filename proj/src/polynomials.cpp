#include "umbral/polynomials.hpp"

#include <array>
#include <cmath>

#include <fmt/format.h>

#include "umbral/errors.hpp"
#include "umbral/gamma.hpp"

namespace umbral {

namespace {

constexpr std::array<std::pair<FamilyTag, std::string_view>, 5> kFamilyNames{{
    {FamilyTag::hermite2, "hermite2"},
    {FamilyTag::hermite_m, "hermitem"},
    {FamilyTag::laguerre2, "laguerre2"},
    {FamilyTag::assoc_laguerre, "assoclaguerre"},
    {FamilyTag::hybrid_hl, "hybrid"},
}};

bool is_negative_integer(double a) { return a < 0.0 && a == std::floor(a); }

}  // namespace

std::string_view to_string(FamilyTag tag) noexcept {
  for (const auto& [t, name] : kFamilyNames) {
    if (t == tag) {
      return name;
    }
  }
  return "unknown";
}

std::optional<FamilyTag> parse_family(std::string_view name) noexcept {
  for (const auto& [t, n] : kFamilyNames) {
    if (n == name) {
      return t;
    }
  }
  return std::nullopt;
}

void PolyFamily::validate() const {
  if (n < 0) {
    throw DomainError(fmt::format("degree n = {} must be >= 0", n));
  }
  if (tag == FamilyTag::hermite_m && m < 1) {
    throw DomainError(fmt::format("variable count m = {} must be >= 1", m));
  }
  if (tag == FamilyTag::assoc_laguerre && is_negative_integer(alpha)) {
    throw GammaPole(fmt::format("alpha = {} puts Gamma(s+alpha+1) on a pole", alpha));
  }
}

double assoc_laguerre(int n, double alpha, double x, double y) {
  PolyFamily{FamilyTag::assoc_laguerre, n, alpha, 1}.validate();
  return detail::laguerre_recurrence(n, alpha, x, y);
}

UmbralPolynomial laguerre_umbral(int n, double x, double y) {
  detail::require_degree(n);
  return (UmbralPolynomial(y) - UmbralPolynomial::c(x)).pow(n);
}

UmbralPolynomial assoc_laguerre_umbral(int n, double alpha, double x, double y) {
  PolyFamily{FamilyTag::assoc_laguerre, n, alpha, 1}.validate();
  if (alpha < 0.0) {
    throw DomainError("umbral form needs alpha >= 0 (c exponents are non-negative)");
  }
  const double scale = gamma_ratio(n + alpha + 1.0, n + 1.0);
  return scale * (UmbralPolynomial::c(1.0, Exponent::real(alpha)) * laguerre_umbral(n, x, y));
}

UmbralPolynomial hermite_umbral(int n, double x) {
  detail::require_degree(n);
  return (UmbralPolynomial(x) + UmbralPolynomial::h()).pow(n);
}

UmbralPolynomial hybrid_umbral(int n, double x) {
  detail::require_degree(n);
  const UmbralPolynomial root_c_h(UmbralMonomial{1.0, Exponent::fraction(1, 2), 1});
  return (UmbralPolynomial(x) + root_c_h).pow(n);
}

}  // namespace umbral

namespace umbral {

HermiteCoefficients::HermiteCoefficients(std::span<const double> xs) : xs_(xs.begin(), xs.end()) {
  for (std::size_t s = 0; s < xs_.size(); ++s) {
    if (xs_[s] != 0.0L) {
      zero_run_bound_ = static_cast<int>(s) + 2;
      break;
    }
  }
}

long double HermiteCoefficients::next() {
  const std::size_t r = history_.size();
  long double c = 0.0L;
  if (r == 0) {
    c = 1.0L;
  } else {
    for (std::size_t s = 1; s <= xs_.size() && s <= r; ++s) {
      c += static_cast<long double>(s) * xs_[s - 1] * history_[r - s];
    }
    c /= static_cast<long double>(r);
  }
  history_.push_back(c);
  return c;
}

}  // namespace umbral
