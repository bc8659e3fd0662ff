#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

namespace fcx {

// Polynomial in q with exact 64-bit coefficients, truncated above degree
// qmax. Every operation checks for overflow and throws ArithmeticOverflow.
class QPoly {
public:
  QPoly() = default;
  explicit QPoly(int qmax);
  QPoly(int qmax, std::vector<std::int64_t> coeffs);
  static QPoly monomial(int qmax, int degree, std::int64_t c = 1);
  static QPoly constant(int qmax, std::int64_t c) { return monomial(qmax, 0, c); }

  int qmax() const { return static_cast<int>(c_.size()) - 1; }
  std::int64_t operator[](int d) const { return d >= 0 && d <= qmax() ? c_[static_cast<std::size_t>(d)] : 0; }
  void add_term(int degree, std::int64_t c);
  const std::vector<std::int64_t>& coeffs() const { return c_; }

  bool is_zero() const;
  int degree() const; // -1 for the zero polynomial
  std::int64_t at_one() const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly scaled(std::int64_t k) const;
  QPoly shifted(int k) const; // multiplied by q^k
  QPoly truncated(int qmax) const;

  friend bool operator==(const QPoly&, const QPoly&) = default;

private:
  std::vector<std::int64_t> c_{0};
};

// a / (1 - u) as a power series in q. u must have no constant term.
QPoly geom_div(const QPoly& a, const QPoly& u);

std::string to_string(const QPoly& p);
nlohmann::json to_json(const QPoly& p);

// Power series in x with QPoly coefficients, truncated above x^xmax.
class XSeries {
public:
  XSeries() = default;
  XSeries(int xmax, int qmax);
  static XSeries constant(int xmax, int qmax, const QPoly& c);
  static XSeries one(int xmax, int qmax) { return constant(xmax, qmax, QPoly::constant(qmax, 1)); }
  // c(q) x^k
  static XSeries monomial(int xmax, int qmax, int k, const QPoly& c);

  int xmax() const { return static_cast<int>(t_.size()) - 1; }
  int qmax() const { return qmax_; }
  const QPoly& operator[](int n) const { return t_.at(static_cast<std::size_t>(n)); }
  QPoly& operator[](int n) { return t_.at(static_cast<std::size_t>(n)); }

  XSeries& operator+=(const XSeries& o);
  XSeries& operator-=(const XSeries& o);
  friend XSeries operator+(XSeries a, const XSeries& b) { return a += b; }
  friend XSeries operator-(XSeries a, const XSeries& b) { return a -= b; }
  friend XSeries operator*(const XSeries& a, const XSeries& b);
  XSeries scaled(const QPoly& c) const;
  XSeries scaled(std::int64_t k) const;
  XSeries shifted_x(int k) const; // multiplied by x^k

  friend bool operator==(const XSeries&, const XSeries&) = default;

  // Throws TruncationMismatch unless both truncations agree.
  void check_compatible(const XSeries& o) const;

private:

  std::vector<QPoly> t_{QPoly()};
  int qmax_ = 0;
};

XSeries xs_add(const XSeries& a, const XSeries& b);
XSeries xs_mul(const XSeries& a, const XSeries& b);
XSeries xs_scale(const XSeries& a, const QPoly& c);
// x -> qx: the x^n term picks up q^n.
XSeries subst_qx(const XSeries& a);
// a / (1 - u); u must have no x^0 q^0 term.
XSeries geom_div(const XSeries& a, const XSeries& u);
XSeries x_derivative(const XSeries& a);

// Solves S = rhs(S) one x-order at a time. rhs must not use [x^n]S when
// producing [x^n]; this is verified for every n and throws std::logic_error
// otherwise, as does a final residual check.
XSeries solve_fixed_point(int xmax, int qmax,
                          const std::function<XSeries(const XSeries&)>& rhs);

// Walk series solved from their functional equations. All are exact up to
// x^xmax and q^qmax.
struct WalkSeries {
  int xmax = 0;
  int qmax = 0;
  XSeries m_star, m;          // Motzkin-type walks, with and without (*)
  XSeries q, q_star;          // walks ending on the axis
  XSeries o_touch, o_touch_star; // cyclic walks touching the axis, by ht'
  XSeries g_touch, g_touch_star; // all walks touching the axis
  XSeries lp, lrp;            // left-peak and left-right-peak components
  XSeries t, rp_delta, u;     // extra components for the fork types
};

XSeries solve_M_star(int xmax, int qmax);
XSeries solve_M(const XSeries& m_star);
std::pair<XSeries, XSeries> solve_Q_Qstar(const XSeries& m_star, const XSeries& m);
std::pair<XSeries, XSeries> solve_touch_O(const XSeries& m_star, const XSeries& m);
std::pair<XSeries, XSeries> solve_touch_G(const XSeries& m_star, const XSeries& m,
                                          const XSeries& q);
// Need m_star, m, q, q_star filled in.
std::pair<XSeries, XSeries> solve_LP_LRP(const WalkSeries& w);
// Additionally needs g_touch_star.
std::tuple<XSeries, XSeries, XSeries> solve_T_RPdelta_U(const WalkSeries& w);
WalkSeries solve_all(int xmax, int qmax);

} // namespace fcx
