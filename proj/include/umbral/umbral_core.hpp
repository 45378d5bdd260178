#pragma once

// Umbral operators and their vacuum functionals.
//
// Two umbral symbols are modelled:
//   c   with  c^mu phi0      = 1/Gamma(mu+1)
//   h_y with  h_y^r phi0_h   = y^(r/2) r!/Gamma(r/2+1) |cos(r pi/2)|
// An expression is a finite sum of monomials coef * c^a * h^b. Products
// add exponents, and the vacuum only acts on the final monomials.

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "umbral/series.hpp"

namespace umbral {

/// Exponent of the c symbol. Rational exponents (integers, halves,
/// alpha + integer with rational alpha) are kept exact; anything else is a
/// plain double and compares with an absolute tolerance of 1e-12.
class Exponent {
 public:
  static constexpr double kMergeTolerance = 1e-12;

  constexpr Exponent() = default;
  constexpr Exponent(std::int64_t whole) : num_(whole), den_(1), value_(static_cast<double>(whole)) {}

  /// num/den in lowest terms. Throws std::invalid_argument if den == 0.
  static Exponent fraction(std::int64_t num, std::int64_t den);
  /// Arbitrary real exponent. Integral values become exact.
  static Exponent real(double value);

  [[nodiscard]] double value() const noexcept { return value_; }
  [[nodiscard]] bool is_rational() const noexcept { return den_ != 0; }
  [[nodiscard]] std::int64_t numerator() const noexcept { return num_; }
  /// 0 when the exponent is not rational.
  [[nodiscard]] std::int64_t denominator() const noexcept { return den_; }

  friend Exponent operator+(const Exponent& a, const Exponent& b);
  friend Exponent operator*(std::int64_t k, const Exponent& e);

  /// Exact comparison for two rationals, tolerance comparison otherwise.
  [[nodiscard]] bool same_as(const Exponent& other) const noexcept;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;  // 0 marks a non-rational exponent
  double value_ = 0.0;
};

struct UmbralMonomial {
  double coefficient = 1.0;
  Exponent c_exponent{};
  int h_exponent = 0;

  /// Throws std::invalid_argument unless c_exponent >= 0 and h_exponent >= 0.
  void validate() const;
  [[nodiscard]] bool same_powers(const UmbralMonomial& other) const noexcept {
    return h_exponent == other.h_exponent && c_exponent.same_as(other.c_exponent);
  }
};

UmbralMonomial operator*(const UmbralMonomial& a, const UmbralMonomial& b);

/// Finite sum of monomials, always kept in canonical form: sorted by
/// (c_exponent, h_exponent), equal powers merged, zero coefficients dropped.
class UmbralPolynomial {
 public:
  UmbralPolynomial() = default;
  UmbralPolynomial(double constant);
  UmbralPolynomial(const UmbralMonomial& m);
  explicit UmbralPolynomial(std::vector<UmbralMonomial> terms);

  /// coef * c^a
  static UmbralPolynomial c(double coef = 1.0, Exponent a = 1);
  /// coef * h^b
  static UmbralPolynomial h(double coef = 1.0, int b = 1);

  [[nodiscard]] const std::vector<UmbralMonomial>& terms() const noexcept { return terms_; }
  [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

  UmbralPolynomial& operator+=(const UmbralPolynomial& other);
  UmbralPolynomial& operator-=(const UmbralPolynomial& other);
  UmbralPolynomial& operator*=(const UmbralPolynomial& other);
  UmbralPolynomial& operator*=(double scalar);

  friend UmbralPolynomial operator+(UmbralPolynomial a, const UmbralPolynomial& b) { return a += b; }
  friend UmbralPolynomial operator-(UmbralPolynomial a, const UmbralPolynomial& b) { return a -= b; }
  friend UmbralPolynomial operator*(UmbralPolynomial a, const UmbralPolynomial& b) { return a *= b; }
  friend UmbralPolynomial operator*(double s, UmbralPolynomial p) { return p *= s; }
  friend UmbralPolynomial operator*(UmbralPolynomial p, double s) { return p *= s; }

  [[nodiscard]] UmbralPolynomial pow(int k) const;

 private:
  void canonicalize();
  std::vector<UmbralMonomial> terms_;
};

/// Which vacuum an umbral expression is evaluated against.
class MomentRule {
 public:
  enum class Kind { laguerre, hermite, tensor };

  /// Pure c vacuum (phi0). Monomials carrying h powers are rejected.
  static MomentRule laguerre() { return MomentRule(Kind::laguerre, 0.0); }
  /// Pure h_y vacuum. Monomials carrying c powers are rejected.
  static MomentRule hermite(double y) { return MomentRule(Kind::hermite, y); }
  /// c and h_y acting separately on their own vacua.
  static MomentRule tensor(double y) { return MomentRule(Kind::tensor, y); }

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] double h_parameter() const noexcept { return y_; }

  /// Vacuum value of c^a h^b (coefficient ignored).
  [[nodiscard]] double moment(const UmbralMonomial& m) const;

 private:
  MomentRule(Kind kind, double y) : kind_(kind), y_(y) {}
  Kind kind_;
  double y_;
};

/// c^mu phi0 = 1/Gamma(mu+1). Throws GammaPole for mu = -1, -2, ...
[[nodiscard]] double c_moment(double mu);

/// h_y^r phi0 : 0 for odd r, y^k (2k)!/k! for r = 2k.
[[nodiscard]] double h_moment(int r, double y);

/// Linear extension of the vacuum to a polynomial.
[[nodiscard]] double eval_poly(const UmbralPolynomial& p, const MomentRule& rule);

/// Evaluates prefactor * exp(p) against the vacuum.
///
/// exp(p) is expanded grade by grade, where the grade of c^a h^b is a + b,
/// so that for a polynomial in a single symbol the grade-N component is
/// H_N^{(m)}(coefficients)/N! * symbol^N. p must have no constant term and
/// only rational c exponents; the prefactor exponent may be any real.
/// Throws NoConvergence when ctl.max_terms grades are used up.
[[nodiscard]] SeriesValue eval_exp(const UmbralPolynomial& p, const MomentRule& rule,
                                   const SeriesControl& ctl = {},
                                   const UmbralMonomial& prefactor = {});

}  // namespace umbral
