#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "fcx/coxeter.hpp"

namespace fcx {

using Rational = boost::rational<std::int64_t>;

// Start and period claimed by the periodicity theorems.
struct StatedPeriod {
  int start = 0;
  int period = 0;
};

struct PeriodReport {
  int start = 0;
  int period = 0;
  int verified_up_to = 0; // last index of the counts that were examined
  std::vector<std::uint64_t> pattern;
  std::optional<StatedPeriod> stated;
  bool divides_stated = false;
  // counts[stated.start - 1] breaks the stated period, so the stated start
  // cannot be lowered.
  bool stated_start_sharp = false;

  Rational mean() const;
};

// Smallest period, then smallest start, such that counts is periodic from
// start and the periodic window holds at least max(2 * period, min_window)
// entries. Throws InsufficientData when no candidate qualifies.
PeriodReport detect_period(const std::vector<std::uint64_t>& counts, int min_window = 0);

std::optional<StatedPeriod> stated_periodicity(const TypeSpec& spec);

// Runs the oracle far enough to cover two stated periods past the stated
// start (or to qmax if larger), then checks the stated periodicity. Throws
// TheoremViolation on any disagreement and RankOutOfRange for types without
// a stated periodicity.
PeriodReport verify_theorem(const TypeSpec& spec, int qmax = 0);
// The same checks on counts that were already computed; they must reach
// stated start + 2 * stated period.
PeriodReport check_stated_periodicity(const TypeSpec& spec,
                                      const std::vector<std::uint64_t>& counts);

} // namespace fcx
