#include "umbral/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace umbral {

void SeriesControl::validate() const {
  if (!(rel_tol > 0.0)) {
    throw std::invalid_argument("SeriesControl: rel_tol must be > 0");
  }
  if (consecutive_small < 1) {
    throw std::invalid_argument("SeriesControl: consecutive_small must be >= 1");
  }
  if (max_terms < 1) {
    throw std::invalid_argument("SeriesControl: max_terms must be >= 1");
  }
}

SeriesSummer::SeriesSummer(const SeriesControl& ctl, int min_run)
    : ctl_(ctl), run_needed_(std::max(ctl.consecutive_small, min_run)) {
  ctl_.validate();
}

bool SeriesSummer::add(long double term) {
  sum_ += term;
  ++terms_;
  if (std::fabs(term) <= static_cast<long double>(ctl_.rel_tol) * std::fabs(sum_)) {
    ++run_;
  } else {
    run_ = 0;
  }
  done_ = run_ >= run_needed_;
  return done_;
}

}  // namespace umbral
