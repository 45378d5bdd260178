#pragma once

namespace umbral {

/// Truncation policy shared by every infinite series in the library.
///
/// A series stops once `consecutive_small` successive terms each satisfy
/// |term| <= rel_tol * |partial sum|. Reaching `max_terms` first is an error.
struct SeriesControl {
  double rel_tol = 1e-15;
  int consecutive_small = 3;
  int max_terms = 200;

  /// Throws std::invalid_argument unless rel_tol > 0, consecutive_small >= 1
  /// and max_terms >= 1.
  void validate() const;
};

/// Result of a truncated series.
struct SeriesValue {
  double value = 0.0;
  int terms_used = 0;
  /// Magnitude of the first omitted term.
  double tail_bound = 0.0;
};

/// Running sum that applies the SeriesControl stop rule.
///
/// `min_run` lets callers demand a longer run of small terms than
/// ctl.consecutive_small when the series has structural zero terms.
class SeriesSummer {
 public:
  explicit SeriesSummer(const SeriesControl& ctl, int min_run = 1);

  /// Adds one term. Returns true once the stop criterion is met.
  bool add(long double term);

  /// True when another term may still be added without exceeding max_terms.
  [[nodiscard]] bool has_budget() const { return terms_ < ctl_.max_terms; }

  [[nodiscard]] long double sum() const { return sum_; }
  [[nodiscard]] int terms() const { return terms_; }
  [[nodiscard]] bool done() const { return done_; }

 private:
  SeriesControl ctl_;
  int run_needed_;
  long double sum_ = 0.0L;
  int terms_ = 0;
  int run_ = 0;
  bool done_ = false;
};

}  // namespace umbral
