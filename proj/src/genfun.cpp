#include "fcx/genfun.hpp"

#include <algorithm>
#include <sstream>

#include "fcx/errors.hpp"
#include "fcx/oracle.hpp"

namespace fcx {

namespace {

QPoly mono(int qmax, int deg, std::int64_t c = 1) { return QPoly::monomial(qmax, deg, c); }

// c q^a / (1 - q^b)
QPoly geometric(int qmax, std::int64_t c, int a, int b) {
  return geom_div(mono(qmax, a, c), mono(qmax, b));
}

void require(bool ok, const TypeSpec& spec) {
  if (!ok)
    throw RankOutOfRange(spec.to_string() + " is outside the valid range");
}

// Extends a periodic tail over the computed prefix and checks that the
// formula agrees with it on the overlap.
GenFunResult finish_affine(const TypeSpec& spec, int qmax, const QPoly& full) {
  const auto stated = stated_periodicity(spec);
  GenFunResult r;
  r.spec = spec;
  r.qmax = qmax;
  r.poly = full.truncated(qmax);
  PeriodicTail tail;
  tail.start = stated->start;
  for (int i = 0; i < stated->period; ++i)
    tail.pattern.push_back(full[stated->start + i]);
  for (int l = stated->start; l <= full.qmax(); ++l)
    if (full[l] != tail.pattern[static_cast<std::size_t>(l - stated->start) % tail.pattern.size()])
      throw TheoremViolation(spec.to_string() + ": generating function is not periodic from " +
                             std::to_string(stated->start));
  r.period = std::move(tail);
  return r;
}

int working_qmax(const TypeSpec& spec, int qmax) {
  const auto stated = stated_periodicity(spec);
  return std::max(qmax, stated->start + 2 * stated->period);
}

} // namespace

std::int64_t GenFunResult::coefficient(int len) const {
  if (len < 0)
    return 0;
  if (len <= qmax)
    return poly[len];
  if (period)
    return period->pattern[static_cast<std::size_t>(len - period->start) % period->pattern.size()];
  return 0;
}

QPoly gf_A(int n, int qmax) {
  require(n >= 2, TypeSpec{Family::A, n});
  return solve_M_star(n, qmax)[n];
}

QPoly gf_B(int n, int qmax) {
  require(n >= 2, TypeSpec{Family::B, n});
  const auto ms = solve_M_star(n, qmax);
  const auto m = solve_M(ms);
  const auto [q, q_star] = solve_Q_Qstar(ms, m);
  const XSeries xq2 = XSeries::monomial(n, qmax, 1, mono(qmax, 2));
  const XSeries head = XSeries::monomial(n, qmax, 2, mono(qmax, 3));
  return (q_star + geom_div(head * ms * subst_qx(m), xq2))[n];
}

QPoly gf_D(int rank, int qmax) {
  require(rank >= 3, TypeSpec{Family::D, rank});
  const int n = rank - 1;
  const auto ms = solve_M_star(n, qmax);
  const auto m = solve_M(ms);
  const auto [q, q_star] = solve_Q_Qstar(ms, m);
  const XSeries xq2 = XSeries::monomial(n, qmax, 1, mono(qmax, 2));
  return (q_star.scaled(2) - ms + geom_div(xq2 * ms * subst_qx(m), xq2))[n];
}

QPoly gf_I2(int m, int qmax) {
  require(m >= 3, TypeSpec{Family::I2, m});
  QPoly p = mono(qmax, 0);
  for (int d = 1; d < m; ++d)
    p.add_term(d, 2);
  return p;
}

QPoly gf_exceptional(Family f) {
  std::vector<std::int64_t> c;
  switch (f) {
  case Family::H3:
    c = {1, 3, 5, 6, 7, 7, 5, 4, 3, 2, 1};
    break;
  case Family::H4:
    c = {1, 4, 9, 14, 18, 21, 23, 21, 20, 18, 16, 12, 8, 4, 3, 2, 1};
    break;
  case Family::F4:
    c = {1, 4, 9, 14, 18, 18, 16, 12, 8, 4, 2};
    break;
  case Family::E6:
    c = {1, 6, 20, 45, 75, 95, 99, 91, 76, 53, 40, 27, 14, 8, 6, 4, 2};
    break;
  case Family::E7:
    c = {1,   7,   27,  71,  140, 216, 273, 298, 297, 275, 236, 198, 159, 125,
         91,  73,  57,  39,  22,  17,  14,  11,  8,   5,   4,   3,   2,   1};
    break;
  case Family::E8:
    c = {1,   8,   35,  105, 238, 427, 631, 796, 897, 936, 924, 867, 794, 701, 609,
         527, 457, 387, 319, 259, 205, 171, 143, 113, 83,  69,  56,  43,  30,  15};
    break;
  case Family::F4tilde:
    c = {1, 5, 14, 27, 41, 52, 57, 57, 52, 44, 35, 27, 18, 13, 9, 6, 3, 2, 1};
    break;
  case Family::E8tilde:
    c = {1,    9,    44,   148,  378,  770,  1297, 1862, 2354, 2710, 2923, 3002,
         2970, 2866, 2693, 2494, 2298, 2118, 1916, 1728, 1529, 1355, 1199, 1065,
         916,  786,  669,  562,  462,  368,  256,  138,  97,   68,   47,   32,
         23,   16,   9,    6,    5,    4,    3,    2,    1};
    break;
  default:
    throw RankOutOfRange(std::string(family_name(f)) + " has no embedded polynomial");
  }
  const int deg = static_cast<int>(c.size()) - 1;
  return QPoly(deg, std::move(c));
}

GenFunResult gf_Atilde(int n, int qmax) {
  const TypeSpec spec{Family::Atilde, n};
  require(n >= 3, spec);
  const int w = working_qmax(spec, qmax);
  const auto ms = solve_M_star(n, w);
  const auto m = solve_M(ms);
  const auto [o, o_star] = solve_touch_O(ms, m);
  const QPoly qn = mono(w, n);
  const QPoly full = geom_div(qn * (o[n] - mono(w, 0, 2)), qn) + o_star[n];
  auto r = finish_affine(spec, qmax, full);
  r.mean = mean_value(spec);
  return r;
}

GenFunResult gf_Ctilde(int n, int qmax) {
  const TypeSpec spec{Family::Ctilde, n};
  require(n >= 2, spec);
  const int w = working_qmax(spec, qmax);
  const auto s = solve_all(n, w);
  const QPoly alt = geom_div(mono(w, n + 1) * s.g_touch[n], mono(w, n + 1)) + s.g_touch_star[n];
  const QPoly zz = geometric(w, 2 * n, 2 * n + 2, 1) + mono(w, 2 * n + 1, 2 * n - 2);
  const QPoly full = alt + zz + s.lp[n].scaled(2) + s.lrp[n];
  auto r = finish_affine(spec, qmax, full);
  r.mean = mean_value(spec);
  return r;
}

GenFunResult gf_Btilde(int rank, int qmax) {
  const TypeSpec spec{Family::Btilde, rank};
  require(rank >= 3, spec);
  const int n = rank - 1;
  const int w = working_qmax(spec, qmax);
  const auto s = solve_all(n, w);
  const QPoly alt =
      geom_div(mono(w, n + 1, 2) * s.g_touch[n], mono(w, n + 1)) + s.t[n];
  const QPoly zz = geometric(w, 2 * n + 3, 2 * n + 4, 1) +
                   geometric(w, 1, 2 * (2 * n + 1), 2 * n + 1) +
                   mono(w, 2 * n + 3, 2 * n + 2) + mono(w, 2 * n + 2, 2 * n - 2);
  const QPoly full = alt + zz + mono(w, 1) * (s.lp[n] + s.lrp[n]) + s.rp_delta[n];
  auto r = finish_affine(spec, qmax, full);
  r.mean = mean_value(spec);
  return r;
}

GenFunResult gf_Dtilde(int rank, int qmax) {
  const TypeSpec spec{Family::Dtilde, rank};
  require(rank >= 4, spec);
  const int n = rank - 2;
  const int w = working_qmax(spec, qmax);
  const auto s = solve_all(n, w);
  const QPoly alt =
      geom_div(mono(w, n + 1, 4) * s.g_touch[n], mono(w, n + 1)) + s.u[n];
  const QPoly zz = geometric(w, 2 * n + 6, 2 * n + 5, 1) +
                   geometric(w, 2, 3 * (n + 1), n + 1) +
                   mono(w, 2 * n + 4, 2 * n + 4) + mono(w, 2 * n + 3, 2 * n - 2);
  const QPoly full = alt + zz + mono(w, 2) * s.lrp[n] + mono(w, 1, 2) * s.rp_delta[n];
  auto r = finish_affine(spec, qmax, full);
  r.mean = mean_value(spec);
  return r;
}

GenFunResult gf_affine_exceptional(Family f, int qmax) {
  if (f != Family::G2tilde && f != Family::E6tilde && f != Family::E7tilde)
    throw RankOutOfRange(std::string(family_name(f)) + " is not an infinite exceptional type");
  const TypeSpec full_spec = TypeSpec::parse(family_name(f));
  const int w = working_qmax(full_spec, qmax);
  const auto rec = enumerate_fc(build_graph(full_spec), w);
  const auto report = check_stated_periodicity(full_spec, rec.counts);
  std::vector<std::int64_t> c(rec.counts.begin(), rec.counts.end());
  auto r = finish_affine(full_spec, qmax, QPoly(w, std::move(c)));
  r.mean = report.mean();
  return r;
}

Rational mean_value(const TypeSpec& spec) {
  auto pow4 = [](int k) {
    std::int64_t v = 1;
    for (int i = 0; i < k; ++i)
      v *= 4;
    return v;
  };
  switch (spec.family) {
  case Family::Atilde: {
    const int n = spec.param;
    std::int64_t binom = 1;
    for (int i = 1; i <= n; ++i)
      binom = binom * (n + i) / i;
    return Rational(binom - 2, n);
  }
  case Family::Ctilde: {
    const int n = spec.param;
    return Rational(2 * n) + Rational(pow4(n), n + 1);
  }
  case Family::Btilde: {
    const int n = spec.classical_n();
    return Rational(2 * n + 3) + Rational(1, 2 * n + 1) + Rational(2 * pow4(n), n + 1);
  }
  case Family::Dtilde: {
    const int n = spec.classical_n();
    return Rational(2 * n + 6) + Rational(2 + pow4(n + 1), n + 1);
  }
  default:
    throw RankOutOfRange(spec.to_string() + " has no closed-form mean value");
  }
}

Rational mean_from_series(const GenFunResult& r) {
  if (!r.period)
    throw InsufficientData(r.spec.to_string() + " has no periodic tail");
  const int n = static_cast<int>(r.period->pattern.size());
  // Multiplying by (1 - q^N) kills everything from start + N on, so P is
  // read off the first start + N coefficients.
  const int top = r.period->start + n;
  std::int64_t p_at_one = 0;
  for (int d = 0; d < top; ++d)
    p_at_one += r.coefficient(d) - (d >= n ? r.coefficient(d - n) : 0);
  for (int d = top; d < top + n; ++d)
    if (r.coefficient(d) - r.coefficient(d - n) != 0)
      throw TheoremViolation("series is not P(q)/(1 - q^N) for the stated N");
  return Rational(p_at_one, n);
}

int default_qmax(const TypeSpec& spec) {
  if (const auto s = stated_periodicity(spec))
    return s->start + 2 * s->period;
  return 20;
}

GenFunResult generating_function(const TypeSpec& spec, int qmax) {
  auto finite = [&](QPoly p) {
    GenFunResult r;
    r.spec = spec;
    r.qmax = qmax;
    r.poly = p.truncated(qmax);
    return r;
  };
  switch (spec.family) {
  case Family::A:
    return finite(gf_A(spec.param, qmax));
  case Family::B:
    return finite(gf_B(spec.param, qmax));
  case Family::D:
    return finite(gf_D(spec.param, qmax));
  case Family::I2:
    return finite(gf_I2(spec.param, qmax));
  case Family::H3:
  case Family::H4:
  case Family::F4:
  case Family::E6:
  case Family::E7:
  case Family::E8:
  case Family::F4tilde:
  case Family::E8tilde:
    return finite(gf_exceptional(spec.family));
  case Family::Atilde:
    return gf_Atilde(spec.param, qmax);
  case Family::Ctilde:
    return gf_Ctilde(spec.param, qmax);
  case Family::Btilde:
    return gf_Btilde(spec.param, qmax);
  case Family::Dtilde:
    return gf_Dtilde(spec.param, qmax);
  case Family::G2tilde:
  case Family::E6tilde:
  case Family::E7tilde:
    return gf_affine_exceptional(spec.family, qmax);
  }
  throw std::logic_error("unhandled family");
}

std::string rational_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

nlohmann::json to_json(const GenFunResult& r) {
  nlohmann::json j;
  j["spec"] = r.spec.to_string();
  j["qmax"] = r.qmax;
  j["coeffs"] = to_json(r.poly);
  if (r.period)
    j["period"] = {{"start", r.period->start},
                   {"len", r.period->pattern.size()},
                   {"pattern", r.period->pattern}};
  else
    j["period"] = nullptr;
  j["mean"] = r.mean ? nlohmann::json(rational_string(*r.mean)) : nlohmann::json(nullptr);
  return j;
}

std::string to_csv(const GenFunResult& r) {
  std::ostringstream out;
  out << "length,count\n";
  int last = r.qmax;
  // Finite types stop at their degree; affine series are listed to qmax.
  if (!r.period)
    last = std::min(last, r.poly.degree());
  for (int d = 0; d <= last; ++d)
    out << d << ',' << r.poly[d] << '\n';
  return out.str();
}

} // namespace fcx
