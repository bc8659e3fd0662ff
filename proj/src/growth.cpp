#include "fcx/growth.hpp"

#include <algorithm>
#include <string>

#include "fcx/errors.hpp"
#include "fcx/oracle.hpp"

namespace fcx {

Rational PeriodReport::mean() const {
  std::int64_t sum = 0;
  for (auto c : pattern)
    sum += static_cast<std::int64_t>(c);
  return Rational(sum, period);
}

namespace {

bool periodic_from(const std::vector<std::uint64_t>& c, std::size_t start, std::size_t p) {
  for (std::size_t i = start; i + p < c.size(); ++i)
    if (c[i] != c[i + p])
      return false;
  return true;
}

} // namespace

PeriodReport detect_period(const std::vector<std::uint64_t>& counts, int min_window) {
  const std::size_t n = counts.size();
  for (std::size_t p = 1; 2 * p <= n; ++p) {
    const std::size_t need = std::max<std::size_t>(2 * p, static_cast<std::size_t>(std::max(min_window, 0)));
    if (need > n)
      break;
    // Periodicity from s implies periodicity from every later start, so the
    // latest admissible start decides whether p works at all.
    if (!periodic_from(counts, n - need, p))
      continue;
    std::size_t s = n - need;
    while (s > 0 && counts[s - 1] == counts[s - 1 + p])
      --s;
    PeriodReport r;
    r.start = static_cast<int>(s);
    r.period = static_cast<int>(p);
    r.verified_up_to = static_cast<int>(n) - 1;
    r.pattern.assign(counts.begin() + static_cast<std::ptrdiff_t>(s),
                     counts.begin() + static_cast<std::ptrdiff_t>(s + p));
    return r;
  }
  throw InsufficientData("not enough terms to observe two full periods");
}

std::optional<StatedPeriod> stated_periodicity(const TypeSpec& spec) {
  switch (spec.family) {
  case Family::Atilde: {
    const int n = spec.param;
    const int lo = (n - 1) / 2, hi = n / 2;
    return StatedPeriod{lo * hi + 1, n};
  }
  case Family::Ctilde: {
    const int n = spec.param;
    return StatedPeriod{n == 2 ? 4 : n * (n + 1) / 2 + 3, n + 1};
  }
  case Family::Btilde: {
    const int n = spec.classical_n();
    return StatedPeriod{(n + 1) * (n + 2) / 2 + 3, (n + 1) * (2 * n + 1)};
  }
  case Family::Dtilde: {
    const int n = spec.classical_n();
    return StatedPeriod{(n + 1) * (n + 2) / 2 + 3, n + 1};
  }
  case Family::G2tilde:
    return StatedPeriod{8, 5};
  case Family::E6tilde:
    return StatedPeriod{18, 4};
  case Family::E7tilde:
    return StatedPeriod{29, 9};
  default:
    return std::nullopt;
  }
}

PeriodReport verify_theorem(const TypeSpec& spec, int qmax) {
  const auto stated = stated_periodicity(spec);
  if (!stated)
    throw RankOutOfRange(spec.to_string() + " has no stated periodicity");
  const int horizon = std::max(qmax, stated->start + 2 * stated->period);
  return check_stated_periodicity(spec, enumerate_fc(build_graph(spec), horizon).counts);
}

PeriodReport check_stated_periodicity(const TypeSpec& spec,
                                      const std::vector<std::uint64_t>& c) {
  const auto stated = stated_periodicity(spec);
  if (!stated)
    throw RankOutOfRange(spec.to_string() + " has no stated periodicity");
  if (c.size() < static_cast<std::size_t>(stated->start + 2 * stated->period + 1))
    throw InsufficientData(spec.to_string() + ": counts stop before two stated periods");
  const auto start = static_cast<std::size_t>(stated->start);
  const auto period = static_cast<std::size_t>(stated->period);
  if (!periodic_from(c, start, period))
    throw TheoremViolation(spec.to_string() + ": counts are not periodic with period " +
                           std::to_string(period) + " from length " + std::to_string(start));

  PeriodReport r = detect_period(c, 2 * stated->period);
  r.stated = stated;
  r.divides_stated = stated->period % r.period == 0;
  r.stated_start_sharp = start == 0 || c[start - 1] != c[start - 1 + period];
  if (!r.divides_stated)
    throw TheoremViolation(spec.to_string() + ": detected period " + std::to_string(r.period) +
                           " does not divide " + std::to_string(period));
  if (r.start > stated->start)
    throw TheoremViolation(spec.to_string() + ": detected start exceeds the stated start");
  return r;
}

} // namespace fcx
