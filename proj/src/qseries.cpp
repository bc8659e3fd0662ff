#include "fcx/qseries.hpp"

#include <stdexcept>

#include "fcx/errors.hpp"

namespace fcx {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw ArithmeticOverflow("coefficient overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw ArithmeticOverflow("coefficient overflow in multiplication");
  return r;
}

void require_same(const QPoly& a, const QPoly& b) {
  if (a.qmax() != b.qmax())
    throw TruncationMismatch("q-truncations differ: " + std::to_string(a.qmax()) +
                             " vs " + std::to_string(b.qmax()));
}

} // namespace

QPoly::QPoly(int qmax) {
  if (qmax < 0)
    throw std::invalid_argument("qmax must be nonnegative");
  c_.assign(static_cast<std::size_t>(qmax) + 1, 0);
}

QPoly::QPoly(int qmax, std::vector<std::int64_t> coeffs) : QPoly(qmax) {
  for (std::size_t d = 0; d < coeffs.size() && d < c_.size(); ++d)
    c_[d] = coeffs[d];
}

QPoly QPoly::monomial(int qmax, int degree, std::int64_t c) {
  QPoly p(qmax);
  p.add_term(degree, c);
  return p;
}

void QPoly::add_term(int degree, std::int64_t c) {
  if (degree < 0)
    throw std::invalid_argument("negative q-degree");
  if (degree <= qmax())
    c_[static_cast<std::size_t>(degree)] = checked_add(c_[static_cast<std::size_t>(degree)], c);
}

bool QPoly::is_zero() const {
  for (auto v : c_)
    if (v != 0)
      return false;
  return true;
}

int QPoly::degree() const {
  for (int d = qmax(); d >= 0; --d)
    if (c_[static_cast<std::size_t>(d)] != 0)
      return d;
  return -1;
}

std::int64_t QPoly::at_one() const {
  std::int64_t s = 0;
  for (auto v : c_)
    s = checked_add(s, v);
  return s;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  require_same(*this, o);
  for (std::size_t d = 0; d < c_.size(); ++d)
    c_[d] = checked_add(c_[d], o.c_[d]);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  require_same(*this, o);
  for (std::size_t d = 0; d < c_.size(); ++d)
    c_[d] = checked_add(c_[d], checked_mul(-1, o.c_[d]));
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  require_same(a, b);
  QPoly r(a.qmax());
  const std::size_t n = a.c_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i] == 0)
      continue;
    for (std::size_t j = 0; i + j < n; ++j)
      if (b.c_[j] != 0)
        r.c_[i + j] = checked_add(r.c_[i + j], checked_mul(a.c_[i], b.c_[j]));
  }
  return r;
}

QPoly QPoly::scaled(std::int64_t k) const {
  QPoly r = *this;
  for (auto& v : r.c_)
    v = checked_mul(v, k);
  return r;
}

QPoly QPoly::shifted(int k) const {
  if (k < 0)
    throw std::invalid_argument("negative q-shift");
  QPoly r(qmax());
  for (int d = 0; d + k <= qmax(); ++d)
    r.c_[static_cast<std::size_t>(d + k)] = c_[static_cast<std::size_t>(d)];
  return r;
}

QPoly QPoly::truncated(int qmax) const {
  QPoly r(qmax);
  for (int d = 0; d <= qmax && d <= this->qmax(); ++d)
    r.c_[static_cast<std::size_t>(d)] = c_[static_cast<std::size_t>(d)];
  return r;
}

QPoly geom_div(const QPoly& a, const QPoly& u) {
  require_same(a, u);
  if (u[0] != 0)
    throw NonNilpotentDivisor("divisor 1 - u has u with a constant term");
  QPoly r(a.qmax());
  std::vector<std::int64_t> c(static_cast<std::size_t>(a.qmax()) + 1, 0);
  for (int d = 0; d <= a.qmax(); ++d) {
    std::int64_t v = a[d];
    for (int k = 1; k <= d; ++k)
      if (u[k] != 0)
        v = checked_add(v, checked_mul(u[k], c[static_cast<std::size_t>(d - k)]));
    c[static_cast<std::size_t>(d)] = v;
  }
  return QPoly(a.qmax(), std::move(c));
}

std::string to_string(const QPoly& p) {
  std::string out;
  for (int d = 0; d <= p.qmax(); ++d) {
    const auto c = p[d];
    if (c == 0)
      continue;
    if (!out.empty())
      out += c < 0 ? " - " : " + ";
    else if (c < 0)
      out += "-";
    const auto mag = c < 0 ? -c : c;
    if (d == 0 || mag != 1)
      out += std::to_string(mag);
    if (d >= 1)
      out += "q";
    if (d >= 2)
      out += "^" + std::to_string(d);
  }
  return out.empty() ? "0" : out;
}

nlohmann::json to_json(const QPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto c : p.coeffs())
    arr.push_back(std::to_string(c));
  return arr;
}

XSeries::XSeries(int xmax, int qmax) : qmax_(qmax) {
  if (xmax < 0)
    throw std::invalid_argument("xmax must be nonnegative");
  t_.assign(static_cast<std::size_t>(xmax) + 1, QPoly(qmax));
}

XSeries XSeries::constant(int xmax, int qmax, const QPoly& c) {
  return monomial(xmax, qmax, 0, c);
}

XSeries XSeries::monomial(int xmax, int qmax, int k, const QPoly& c) {
  XSeries s(xmax, qmax);
  if (k <= xmax)
    s[k] = c.truncated(qmax);
  return s;
}

void XSeries::check_compatible(const XSeries& o) const {
  if (xmax() != o.xmax() || qmax_ != o.qmax_)
    throw TruncationMismatch("series truncations differ");
}

XSeries& XSeries::operator+=(const XSeries& o) {
  check_compatible(o);
  for (std::size_t n = 0; n < t_.size(); ++n)
    t_[n] += o.t_[n];
  return *this;
}

XSeries& XSeries::operator-=(const XSeries& o) {
  check_compatible(o);
  for (std::size_t n = 0; n < t_.size(); ++n)
    t_[n] -= o.t_[n];
  return *this;
}

XSeries operator*(const XSeries& a, const XSeries& b) {
  a.check_compatible(b);
  XSeries r(a.xmax(), a.qmax());
  for (int i = 0; i <= a.xmax(); ++i) {
    if (a[i].is_zero())
      continue;
    for (int j = 0; i + j <= a.xmax(); ++j)
      if (!b[j].is_zero())
        r[i + j] += a[i] * b[j];
  }
  return r;
}

XSeries XSeries::scaled(const QPoly& c) const {
  XSeries r = *this;
  for (auto& t : r.t_)
    t = t * c;
  return r;
}

XSeries XSeries::scaled(std::int64_t k) const {
  XSeries r = *this;
  for (auto& t : r.t_)
    t = t.scaled(k);
  return r;
}

XSeries XSeries::shifted_x(int k) const {
  if (k < 0)
    throw std::invalid_argument("negative x-shift");
  XSeries r(xmax(), qmax_);
  for (int n = 0; n + k <= xmax(); ++n)
    r[n + k] = t_[static_cast<std::size_t>(n)];
  return r;
}

XSeries xs_add(const XSeries& a, const XSeries& b) { return a + b; }
XSeries xs_mul(const XSeries& a, const XSeries& b) { return a * b; }
XSeries xs_scale(const XSeries& a, const QPoly& c) { return a.scaled(c); }

XSeries subst_qx(const XSeries& a) {
  XSeries r = a;
  for (int n = 0; n <= a.xmax(); ++n)
    r[n] = a[n].shifted(n);
  return r;
}

XSeries geom_div(const XSeries& a, const XSeries& u) {
  a.check_compatible(u);
  if (u[0][0] != 0)
    throw NonNilpotentDivisor("divisor 1 - u has u with a constant term");
  const int qmax = a.qmax();
  // r = a + u r, solved order by order in x; the x^0 part of u is inverted
  // as a q-series.
  XSeries r(a.xmax(), qmax);
  for (int n = 0; n <= a.xmax(); ++n) {
    QPoly acc = a[n];
    for (int k = 1; k <= n; ++k)
      if (!u[k].is_zero())
        acc += u[k] * r[n - k];
    r[n] = geom_div(acc, u[0]);
  }
  return r;
}

XSeries x_derivative(const XSeries& a) {
  XSeries r(a.xmax(), a.qmax());
  for (int n = 1; n <= a.xmax(); ++n)
    r[n - 1] = a[n].scaled(n);
  return r;
}

XSeries solve_fixed_point(int xmax, int qmax,
                          const std::function<XSeries(const XSeries&)>& rhs) {
  XSeries s(xmax, qmax);
  QPoly probe(qmax);
  for (int d = 0; d <= qmax; ++d)
    probe.add_term(d, 1);
  for (int n = 0; n <= xmax; ++n) {
    s[n] = rhs(s)[n];
    XSeries perturbed = s;
    perturbed[n] += probe;
    if (rhs(perturbed)[n] != s[n])
      throw std::logic_error("functional equation is not triangular in x at order " +
                             std::to_string(n));
  }
  if (rhs(s) != s)
    throw std::logic_error("functional equation solution has a nonzero residual");
  return s;
}

namespace {

XSeries xq(int xmax, int qmax, int xpow, int qpow, std::int64_t c = 1) {
  return XSeries::monomial(xmax, qmax, xpow, QPoly::monomial(qmax, qpow, c));
}

} // namespace

XSeries solve_M_star(int xmax, int qmax) {
  const XSeries one = XSeries::one(xmax, qmax);
  const XSeries x = xq(xmax, qmax, 1, 0);
  const XSeries qx = xq(xmax, qmax, 1, 1);
  return solve_fixed_point(xmax, qmax, [&](const XSeries& s) {
    return one + x * s + qx * (s - one) * subst_qx(s);
  });
}

XSeries solve_M(const XSeries& m_star) {
  const XSeries x = xq(m_star.xmax(), m_star.qmax(), 1, 0);
  const XSeries x_ms = x * m_star;
  return solve_fixed_point(m_star.xmax(), m_star.qmax(),
                           [&](const XSeries& s) { return m_star + x_ms * s; });
}

std::pair<XSeries, XSeries> solve_Q_Qstar(const XSeries& m_star, const XSeries& m) {
  const int xmax = m.xmax(), qmax = m.qmax();
  const XSeries one = XSeries::one(xmax, qmax);
  const XSeries xq1 = xq(xmax, qmax, 1, 1);
  XSeries q = solve_fixed_point(xmax, qmax, [&](const XSeries& s) {
    return m * (one + xq1 * subst_qx(s));
  });
  XSeries q_star = m_star * (one + xq1 * subst_qx(q));
  return {std::move(q), std::move(q_star)};
}

std::pair<XSeries, XSeries> solve_touch_O(const XSeries& m_star, const XSeries& m) {
  const int xmax = m.xmax(), qmax = m.qmax();
  const XSeries one = XSeries::one(xmax, qmax);
  const XSeries marked = subst_qx(x_derivative(m.shifted_x(1)));
  const XSeries factor = one + xq(xmax, qmax, 2, 1) * marked;
  return {m * factor, m_star * factor};
}

std::pair<XSeries, XSeries> solve_touch_G(const XSeries& m_star, const XSeries& m,
                                          const XSeries& q) {
  const int xmax = m.xmax(), qmax = m.qmax();
  const XSeries one = XSeries::one(xmax, qmax);
  const XSeries side = one + xq(xmax, qmax, 1, 1) * subst_qx(q);
  const XSeries sq = side * side;
  return {m * sq, m_star * sq};
}

std::pair<XSeries, XSeries> solve_LP_LRP(const WalkSeries& w) {
  const int xmax = w.xmax, qmax = w.qmax;
  const XSeries one = XSeries::one(xmax, qmax);
  const XSeries xq2 = xq(xmax, qmax, 1, 2);
  const XSeries m_qx = subst_qx(w.m);
  const XSeries q_qx = subst_qx(w.q);

  XSeries lp_inner = xq(xmax, qmax, 1, 1) * m_qx * w.q_star +
                     (q_qx - one).scaled(QPoly::monomial(qmax, 1));
  XSeries lp = geom_div(xq2 * lp_inner, xq2);

  XSeries lrp_inner = xq(xmax, qmax, 2, 2) * m_qx * m_qx * w.m_star +
                      (m_qx - one).scaled(QPoly::monomial(qmax, 1));
  XSeries lrp = geom_div(geom_div(xq(xmax, qmax, 2, 4) * lrp_inner, xq2), xq2);
  return {std::move(lp), std::move(lrp)};
}

std::tuple<XSeries, XSeries, XSeries> solve_T_RPdelta_U(const WalkSeries& w) {
  const int xmax = w.xmax, qmax = w.qmax;
  const XSeries one = XSeries::one(xmax, qmax);
  const XSeries xq2 = xq(xmax, qmax, 1, 2);
  const XSeries m_qx = subst_qx(w.m);
  const XSeries q_qx = subst_qx(w.q);
  auto c = [&](int qpow, std::int64_t k = 1) { return QPoly::monomial(qmax, qpow, k); };

  XSeries t = w.q_star + (w.g_touch_star - w.q_star).scaled(2) +
              xq2 * m_qx * w.q_star + q_qx.scaled(c(2));

  XSeries bracket = xq(xmax, qmax, 1, 1) * m_qx * w.m_star +
                    xq(xmax, qmax, 1, 1, 2) * m_qx * (w.q_star - w.m_star) +
                    (q_qx - one).scaled(c(1, 2)) + (m_qx - one).scaled(c(2)) +
                    xq(xmax, qmax, 2, 3) * m_qx * m_qx * w.m_star;
  QPoly corr = c(3) + c(2, 4) + c(1, 2);
  XSeries rp_delta = geom_div(xq2 * bracket, xq2) +
                     geom_div(XSeries::constant(xmax, qmax, corr), xq2);

  const XSeries xq_m_qx = xq(xmax, qmax, 1, 1) * m_qx;
  XSeries u = w.m_star + xq(xmax, qmax, 2, 2, 4) * w.m_star * q_qx * q_qx +
              (m_qx.scaled(c(1)) + w.m_star * xq_m_qx * xq_m_qx).scaled(c(2)) +
              xq(xmax, qmax, 1, 1, 4) * w.m_star * q_qx +
              xq(xmax, qmax, 1, 2, 2) * w.m_star * m_qx + q_qx.scaled(c(2, 4)) +
              xq(xmax, qmax, 2, 3, 4) * w.m_star * m_qx * q_qx;
  return {std::move(t), std::move(rp_delta), std::move(u)};
}

WalkSeries solve_all(int xmax, int qmax) {
  WalkSeries w;
  w.xmax = xmax;
  w.qmax = qmax;
  w.m_star = solve_M_star(xmax, qmax);
  w.m = solve_M(w.m_star);
  std::tie(w.q, w.q_star) = solve_Q_Qstar(w.m_star, w.m);
  std::tie(w.o_touch, w.o_touch_star) = solve_touch_O(w.m_star, w.m);
  std::tie(w.g_touch, w.g_touch_star) = solve_touch_G(w.m_star, w.m, w.q);
  std::tie(w.lp, w.lrp) = solve_LP_LRP(w);
  std::tie(w.t, w.rp_delta, w.u) = solve_T_RPdelta_U(w);
  return w;
}

} // namespace fcx
