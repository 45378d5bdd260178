#pragma once

// Ground truth for the tests and for ApproxReport: exact rational evaluation
// of the polynomial families through their defining factorial sums, and
// 50-digit sums of the Bessel-type series with a certified tail.

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace umbral {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;
using HighFloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>, boost::multiprecision::et_off>;

/// Parses "p/q" or an integer literal into an exact rational. Decimal
/// literals ("0.1") and anything else yield nullopt.
[[nodiscard]] std::optional<Rational> parse_fraction(std::string_view text);

[[nodiscard]] double to_double(const Rational& r);
[[nodiscard]] std::string to_string(const Rational& r);

/// L_n(x, y) = sum_s C(n,s) (-1)^s y^(n-s) x^s / s!, exactly.
[[nodiscard]] Rational exact_laguerre(int n, const Rational& x, const Rational& y);
/// H_n(x, y) = n! sum_r x^(n-2r) y^r / ((n-2r)! r!), exactly.
[[nodiscard]] Rational exact_hermite(int n, const Rational& x, const Rational& y);
/// HL_n(x, y) = n! sum_r x^(n-2r) y^r / ((n-2r)! (r!)^2), exactly.
[[nodiscard]] Rational exact_hybrid(int n, const Rational& x, const Rational& y);

enum class SeriesId { bessel_j, bessel_i, tricomi, hermite_bessel };

struct HighPrecValue {
  HighFloat value;
  HighFloat tail_bound;  // certified bound on |true value - value|
  int terms = 0;
};

/// Extended-precision reference value of one of the library series.
///   bessel_j / bessel_i : order = n (integer), args = {x}
///   tricomi             : order = alpha,       args = {x}
///   hermite_bessel      : order = nu,          args = {x_1..x_m}
/// Sums until the tail bound is <= target_rel * |value|. The bound comes
/// from two consecutive blocks of terms (one term per block for the ratio
/// series, one zero-run length for hermite_bessel) and the geometric decay
/// between them. Throws NoConvergence after 5000 terms.
[[nodiscard]] HighPrecValue highprec_series(SeriesId id, double order, std::span<const double> args,
                                            double target_rel);

}  // namespace umbral
