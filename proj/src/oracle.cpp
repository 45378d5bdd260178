#include "umbral/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>
#include <fmt/format.h>

#include "umbral/errors.hpp"
#include "umbral/gamma.hpp"
#include "umbral/polynomials.hpp"

namespace umbral {

namespace {

std::optional<BigInt> parse_integer(std::string_view text) {
  if (text.empty()) {
    return std::nullopt;
  }
  std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (start == text.size()) {
    return std::nullopt;
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      return std::nullopt;
    }
  }
  BigInt v(std::string(text.substr(start)));
  return text.front() == '-' ? BigInt(-v) : v;
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) {
    f *= k;
  }
  return f;
}

Rational rpow(const Rational& base, int e) { return detail::ipow(base, e); }

}  // namespace

std::optional<Rational> parse_fraction(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto v = parse_integer(text);
    if (!v) {
      return std::nullopt;
    }
    return Rational(*v);
  }
  auto num = parse_integer(text.substr(0, slash));
  auto den = parse_integer(text.substr(slash + 1));
  if (!num || !den || *den == 0) {
    return std::nullopt;
  }
  return Rational(*num, *den);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_string(const Rational& r) { return r.str(); }

Rational exact_laguerre(int n, const Rational& x, const Rational& y) {
  detail::require_degree(n);
  const BigInt nf = factorial(n);
  Rational sum = 0;
  for (int s = 0; s <= n; ++s) {
    const BigInt sf = factorial(s);
    Rational term(BigInt(nf / (sf * factorial(n - s))), sf);
    term *= rpow(y, n - s) * rpow(x, s);
    if (s % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

Rational exact_hermite(int n, const Rational& x, const Rational& y) {
  detail::require_degree(n);
  const BigInt nf = factorial(n);
  Rational sum = 0;
  for (int r = 0; 2 * r <= n; ++r) {
    sum += Rational(nf, factorial(n - 2 * r) * factorial(r)) * rpow(x, n - 2 * r) * rpow(y, r);
  }
  return sum;
}

Rational exact_hybrid(int n, const Rational& x, const Rational& y) {
  detail::require_degree(n);
  const BigInt nf = factorial(n);
  Rational sum = 0;
  for (int r = 0; 2 * r <= n; ++r) {
    const BigInt rf = factorial(r);
    sum += Rational(nf, factorial(n - 2 * r) * rf * rf) * rpow(x, n - 2 * r) * rpow(y, r);
  }
  return sum;
}

namespace {

constexpr int kHighPrecMaxTerms = 5000;

HighFloat inv_gamma_high(const HighFloat& z) {
  if (z <= 0 && z == floor(z)) {
    throw GammaPole(fmt::format("Gamma pole at {}", z.convert_to<double>()));
  }
  return HighFloat(1) / boost::math::tgamma(z);
}

// Produces t_0, t_1, ... of the requested series.
std::function<HighFloat()> make_term_source(SeriesId id, double order, std::span<const double> args) {
  const std::vector<HighFloat> xs(args.begin(), args.end());
  switch (id) {
    case SeriesId::bessel_j:
    case SeriesId::bessel_i: {
      if (xs.size() != 1) {
        throw std::invalid_argument("bessel series take one argument");
      }
      if (order < 0 || order != std::floor(order)) {
        throw DomainError("bessel order must be a non-negative integer");
      }
      const int n = static_cast<int>(order);
      const HighFloat half = xs[0] / 2;
      HighFloat first = 1;
      for (int k = 1; k <= n; ++k) {
        first *= half / k;
      }
      const HighFloat q = (id == SeriesId::bessel_j ? -1 : 1) * half * half;
      return [term = first, q, n, r = 0]() mutable {
        HighFloat out = term;
        term *= q / (HighFloat(r + 1) * (n + r + 1));
        ++r;
        return out;
      };
    }
    case SeriesId::tricomi: {
      if (xs.size() != 1) {
        throw std::invalid_argument("tricomi takes one argument");
      }
      const HighFloat alpha = order;
      return [term = inv_gamma_high(alpha + 1), x = xs[0], alpha, r = 0]() mutable {
        HighFloat out = term;
        term *= -x / (HighFloat(r + 1) * (alpha + r + 1));
        ++r;
        return out;
      };
    }
    case SeriesId::hermite_bessel: {
      if (xs.empty()) {
        throw std::invalid_argument("hermite_bessel needs at least one argument");
      }
      const HighFloat nu = order;
      return [xs, nu, weight = inv_gamma_high(nu + 1), coeffs = std::vector<HighFloat>{}]() mutable {
        const std::size_t r = coeffs.size();
        HighFloat c = 0;
        if (r == 0) {
          c = 1;
        } else {
          for (std::size_t s = 1; s <= xs.size() && s <= r; ++s) {
            c += HighFloat(static_cast<int>(s)) * xs[s - 1] * coeffs[r - s];
          }
          c /= static_cast<int>(r);
        }
        coeffs.push_back(c);
        HighFloat out = c * weight;
        weight /= nu + static_cast<int>(r) + 1;
        return out;
      };
    }
  }
  throw std::invalid_argument("unknown series id");
}

int block_length(SeriesId id, std::span<const double> args) {
  if (id != SeriesId::hermite_bessel) {
    return 1;
  }
  const auto first_nonzero = std::find_if(args.begin(), args.end(), [](double v) { return v != 0.0; });
  const auto smin = static_cast<int>(std::distance(args.begin(), first_nonzero)) + 1;
  return std::max(1, 2 * smin);
}

}  // namespace

HighPrecValue highprec_series(SeriesId id, double order, std::span<const double> args, double target_rel) {
  if (!(target_rel > 0.0)) {
    throw std::invalid_argument("target_rel must be > 0");
  }
  auto source = make_term_source(id, order, args);
  const int block = block_length(id, args);
  std::vector<HighFloat> terms;
  auto ensure = [&](std::size_t count) {
    while (terms.size() < count) {
      terms.push_back(source());
    }
  };
  auto block_sum = [&](std::size_t from) {
    HighFloat s = 0;
    for (std::size_t j = from; j < from + static_cast<std::size_t>(block); ++j) {
      s += abs(terms[j]);
    }
    return s;
  };

  HighFloat sum = 0;
  const HighFloat target = target_rel;
  for (std::size_t r = 0; r < static_cast<std::size_t>(kHighPrecMaxTerms); ++r) {
    ensure(r + 1 + 2 * static_cast<std::size_t>(block));
    sum += terms[r];
    const HighFloat b1 = block_sum(r + 1);
    const HighFloat b2 = block_sum(r + 1 + static_cast<std::size_t>(block));
    HighFloat bound;
    if (b1 == 0 && b2 == 0) {
      bound = 0;
    } else if (b1 == 0 || b2 >= b1) {
      continue;
    } else {
      bound = b1 / (1 - b2 / b1);
    }
    if (bound <= target * abs(sum)) {
      return {sum, bound, static_cast<int>(r) + 1};
    }
  }
  throw NoConvergence(fmt::format("highprec_series: no convergence within {} terms", kHighPrecMaxTerms));
}

}  // namespace umbral
