#include "umbral/gamma.hpp"

#include <cmath>
#include <math.h>  // lgamma_r

#include <fmt/format.h>

#include "umbral/errors.hpp"

namespace umbral {

namespace {

constexpr double kTgammaMax = 171.0;

double signed_lgamma(double z, int& sign) { return ::lgamma_r(z, &sign); }

}  // namespace

bool is_gamma_pole(double z) noexcept { return z <= 0.0 && z == std::floor(z); }

double inv_gamma(double z) {
  if (is_gamma_pole(z)) {
    throw GammaPole(fmt::format("Gamma has a pole at {}", z));
  }
  if (z < kTgammaMax) {
    return 1.0 / std::tgamma(z);
  }
  return std::exp(-std::lgamma(z));
}

double gamma_ratio(double a, double b) {
  if (is_gamma_pole(a) || is_gamma_pole(b)) {
    throw GammaPole(fmt::format("Gamma ratio {}/{} touches a pole", a, b));
  }
  if (a == b) {
    return 1.0;
  }
  if (std::abs(a) < kTgammaMax && std::abs(b) < kTgammaMax && a > -kTgammaMax + 1 && b > -kTgammaMax + 1) {
    const double ga = std::tgamma(a);
    const double gb = std::tgamma(b);
    if (std::isfinite(ga) && std::isfinite(gb) && gb != 0.0) {
      return ga / gb;
    }
  }
  int sa = 1;
  int sb = 1;
  const double la = signed_lgamma(a, sa);
  const double lb = signed_lgamma(b, sb);
  return static_cast<double>(sa * sb) * std::exp(la - lb);
}

}  // namespace umbral
