#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fcx/coxeter.hpp"
#include "fcx/growth.hpp"
#include "fcx/qseries.hpp"

namespace fcx {

// Tail of an eventually periodic growth sequence.
struct PeriodicTail {
  int start = 0;
  std::vector<std::int64_t> pattern;
};

struct GenFunResult {
  TypeSpec spec;
  int qmax = 0;
  QPoly poly; // coefficients 0..qmax
  std::optional<PeriodicTail> period;
  std::optional<Rational> mean;

  // Coefficient of q^len, read from the periodic tail beyond qmax.
  std::int64_t coefficient(int len) const;
};

QPoly gf_A(int n, int qmax);
QPoly gf_B(int n, int qmax);
QPoly gf_D(int rank, int qmax);
QPoly gf_I2(int m, int qmax);
// Embedded polynomial of a finite FC set; the QPoly is sized to its degree.
QPoly gf_exceptional(Family f);

GenFunResult gf_Atilde(int n, int qmax);
GenFunResult gf_Ctilde(int n, int qmax);
GenFunResult gf_Btilde(int rank, int qmax);
GenFunResult gf_Dtilde(int rank, int qmax);
// Oracle prefix extended by the stated periodicity, which is confirmed
// first (TheoremViolation otherwise).
GenFunResult gf_affine_exceptional(Family f, int qmax);

// Closed-form mean of the growth sequence over a period, for the classical
// affine types. Throws RankOutOfRange for anything else.
Rational mean_value(const TypeSpec& spec);
// P(1)/N where the series equals P(q)/(1 - q^N), N the stated period.
Rational mean_from_series(const GenFunResult& r);

// Default truncation: stated start plus two stated periods, else 20.
int default_qmax(const TypeSpec& spec);
GenFunResult generating_function(const TypeSpec& spec, int qmax);

// Always "p/q", so integers print as "22/1".
std::string rational_string(const Rational& r);
nlohmann::json to_json(const GenFunResult& r);
std::string to_csv(const GenFunResult& r);

} // namespace fcx
