#pragma once

namespace umbral {

/// True when `z` is 0 or a negative integer.
[[nodiscard]] bool is_gamma_pole(double z) noexcept;

/// 1/Gamma(z). Throws GammaPole at the poles of Gamma.
[[nodiscard]] double inv_gamma(double z);

/// Gamma(a)/Gamma(b), stable for large arguments. Throws GammaPole if either
/// argument is a pole.
[[nodiscard]] double gamma_ratio(double a, double b);

}  // namespace umbral
