#pragma once

// Series evaluation of the Bessel-type limits of the large-index expansions.
// Every series is summed left to right with incremental term ratios and
// stops per SeriesControl; tail_bound is the first omitted term.

#include <span>

#include "umbral/series.hpp"

namespace umbral {

/// J_n(x) = sum_r (-1)^r (x/2)^(n+2r) / (r! (n+r)!).
/// Requires n >= 0 and |x| <= 30, otherwise DomainError.
[[nodiscard]] SeriesValue bessel_j(int n, double x, const SeriesControl& ctl = {});

/// I_n(x) = sum_r (x/2)^(n+2r) / (r! (n+r)!). Same preconditions as bessel_j.
[[nodiscard]] SeriesValue bessel_i(int n, double x, const SeriesControl& ctl = {});

/// Tricomi function C_alpha(x) = sum_r (-x)^r / (r! Gamma(alpha+r+1)).
/// Entire in x. Throws GammaPole when alpha is a negative integer.
[[nodiscard]] SeriesValue tricomi(double alpha, double x, const SeriesControl& ctl = {});

/// Hermite-based Bessel function
///   _H C_nu(x_1..x_m) = sum_r H_r^{(m)}(x_1..x_m) / (r! Gamma(nu+r+1)).
/// With one argument this is C_nu(-x_1); with two and integer nu it is the
/// classical _H C_n(x, y).
[[nodiscard]] SeriesValue hermite_bessel(double nu, std::span<const double> xs, const SeriesControl& ctl = {});

/// Closed form of sum_n t^n H_{2n}(x, y) / n! = exp(t x^2 / (1-4yt)) / sqrt(1-4yt).
/// DomainError when 1 - 4yt <= 0.
[[nodiscard]] double even_hermite_gf(double x, double y, double t);

}  // namespace umbral
