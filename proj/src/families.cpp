#include "fcx/families.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "fcx/errors.hpp"

namespace fcx {

namespace {

// Where the pieces of an affine B, C or D graph sit. s(i) for i = 1..n-1 is
// the path; forks have two vertices, the C ends one.
struct Layout {
  Family family = Family::Ctilde;
  int n = 0;
  std::vector<Gen> t;
  std::vector<Gen> u;
  int offset = 0;

  Gen s(int i) const { return static_cast<Gen>(i + offset); }
  bool is_t(Gen g) const { return std::find(t.begin(), t.end(), g) != t.end(); }
  bool is_u(Gen g) const { return std::find(u.begin(), u.end(), g) != u.end(); }
};

Layout layout_of(const CoxeterGraph& g) {
  const auto& type = g.type();
  if (!type)
    throw std::invalid_argument("graph has no type tag");
  Layout l;
  l.family = type->family;
  switch (type->family) {
  case Family::Ctilde:
    l.n = type->param;
    l.t = {0};
    l.u = {static_cast<Gen>(l.n)};
    l.offset = 0;
    break;
  case Family::Btilde:
    l.n = type->param - 1;
    l.t = {0, 1};
    l.u = {static_cast<Gen>(l.n + 1)};
    l.offset = 1;
    break;
  case Family::Dtilde:
    l.n = type->param - 2;
    l.t = {0, 1};
    l.u = {static_cast<Gen>(l.n + 1), static_cast<Gen>(l.n + 2)};
    l.offset = 1;
    break;
  default:
    throw std::invalid_argument(type->to_string() + " is not of affine type B, C or D");
  }
  return l;
}

Layout require_ctilde(const CoxeterGraph& g) {
  Layout l = layout_of(g);
  if (l.family != Family::Ctilde)
    throw std::invalid_argument("expected an affine C graph");
  return l;
}

// Elements whose labels lie in [lo, hi], bottom to top.
std::vector<std::size_t> in_range(const Heap& h, int lo, int hi) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < h.size(); ++e)
    if (h.label(e) >= lo && h.label(e) <= hi)
      out.push_back(e);
  return out;
}

bool is_chain(const Heap& h, const std::vector<std::size_t>& elems) {
  for (std::size_t i = 0; i + 1 < elems.size(); ++i)
    if (!h.less(elems[i], elems[i + 1]))
      return false;
  return true;
}

Word labels_of(const Heap& h, const std::vector<std::size_t>& elems) {
  Word w;
  for (auto e : elems)
    w.push_back(h.label(e));
  return w;
}

// Every chain over an edge {i, i+1} inside [lo, hi] alternates once the
// excluded elements are removed. Labels are C-graph labels.
bool alternating_in_range(const Heap& h, int lo, int hi,
                          const std::vector<std::size_t>& excluded) {
  for (int i = lo; i < hi; ++i) {
    const Gen pair[2] = {static_cast<Gen>(i), static_cast<Gen>(i + 1)};
    Gen prev = 255;
    bool first = true;
    for (auto e : h.elements_with(pair)) {
      if (std::find(excluded.begin(), excluded.end(), e) != excluded.end())
        continue;
      if (!first && h.label(e) == prev)
        return false;
      prev = h.label(e);
      first = false;
    }
  }
  return true;
}

Word left_peak_word(int j) {
  Word w;
  for (int i = j; i >= 0; --i)
    w.push_back(static_cast<Gen>(i));
  for (int i = 1; i <= j; ++i)
    w.push_back(static_cast<Gen>(i));
  return w;
}

Word right_peak_word(int k, int n) {
  Word w;
  for (int i = k; i <= n; ++i)
    w.push_back(static_cast<Gen>(i));
  for (int i = n - 1; i >= k; --i)
    w.push_back(static_cast<Gen>(i));
  return w;
}

bool between(const Heap& h, std::size_t a, std::size_t x, std::size_t b) {
  return h.less(a, x) && h.less(x, b);
}

// Clauses (1) and (2) of the left-peak family at index j.
bool left_peak_base(const Heap& h, int n, int j) {
  const auto left = in_range(h, 0, j);
  if (!is_chain(h, left) || labels_of(h, left) != left_peak_word(j))
    return false;
  const auto sj = h.elements_with(static_cast<Gen>(j));
  for (auto x : h.elements_with(static_cast<Gen>(j + 1)))
    if (between(h, sj[0], x, sj[1]))
      return false;
  (void)n;
  return true;
}

bool right_peak_base(const Heap& h, int n, int k) {
  const auto right = in_range(h, k, n);
  if (!is_chain(h, right) || labels_of(h, right) != right_peak_word(k, n))
    return false;
  const auto sk = h.elements_with(static_cast<Gen>(k));
  for (auto x : h.elements_with(static_cast<Gen>(k - 1)))
    if (between(h, sk[0], x, sk[1]))
      return false;
  return true;
}

bool is_zigzag(const Heap& h, int n) {
  std::vector<std::size_t> all(h.size());
  for (std::size_t i = 0; i < all.size(); ++i)
    all[i] = i;
  if (!is_chain(h, all))
    return false;
  bool thick = false;
  for (int i = 1; i < n; ++i)
    if (h.count(static_cast<Gen>(i)) >= 3)
      thick = true;
  if (!thick)
    return false;
  const Word period = [&] {
    Word p;
    for (int i = 0; i <= n; ++i)
      p.push_back(static_cast<Gen>(i));
    for (int i = n - 1; i >= 1; --i)
      p.push_back(static_cast<Gen>(i));
    return p;
  }();
  const Word& w = h.witness();
  for (std::size_t off = 0; off < period.size(); ++off) {
    bool ok = true;
    for (std::size_t i = 0; i < w.size() && ok; ++i)
      ok = w[i] == period[(off + i) % period.size()];
    if (ok)
      return true;
  }
  return false;
}

} // namespace

std::string FamilyLabel::to_string() const {
  switch (kind) {
  case FamilyKind::ALT:
    return "ALT";
  case FamilyKind::ZZ:
    return "ZZ";
  case FamilyKind::LP:
    return "LP(" + std::to_string(j) + ")";
  case FamilyKind::RP:
    return "RP(" + std::to_string(k) + ")";
  case FamilyKind::LRP:
    return "LRP(" + std::to_string(j) + "," + std::to_string(k) + ")";
  }
  return "?";
}

nlohmann::json to_json(const FamilyLabel& label) {
  static const char* names[] = {"ALT", "ZZ", "LP", "RP", "LRP"};
  nlohmann::json j;
  j["family"] = names[static_cast<int>(label.kind)];
  if (label.kind == FamilyKind::LP || label.kind == FamilyKind::LRP)
    j["j"] = label.j;
  if (label.kind == FamilyKind::RP || label.kind == FamilyKind::LRP)
    j["k"] = label.k;
  if (label.decoration == Decoration::Btilde)
    j["decoration"] = "Btilde";
  else if (label.decoration == Decoration::Dtilde)
    j["decoration"] = "Dtilde";
  return j;
}

std::vector<FamilyLabel> matching_families(const CoxeterGraph& ctilde, const Heap& h) {
  const int n = require_ctilde(ctilde).n;
  std::vector<FamilyLabel> out;
  if (is_alternating(ctilde, h))
    out.push_back({FamilyKind::ALT});
  if (is_zigzag(h, n))
    out.push_back({FamilyKind::ZZ});

  std::vector<bool> lp_base(static_cast<std::size_t>(n), false);
  std::vector<bool> rp_base(static_cast<std::size_t>(n), false);
  for (int i = 1; i < n; ++i) {
    lp_base[static_cast<std::size_t>(i)] = left_peak_base(h, n, i);
    rp_base[static_cast<std::size_t>(i)] = right_peak_base(h, n, i);
  }
  for (int j = 1; j < n; ++j) {
    if (!lp_base[static_cast<std::size_t>(j)])
      continue;
    for (auto e : h.elements_with(static_cast<Gen>(j)))
      if (alternating_in_range(h, j, n, {e})) {
        out.push_back({FamilyKind::LP, j, 0});
        break;
      }
  }
  for (int k = 1; k < n; ++k) {
    if (!rp_base[static_cast<std::size_t>(k)])
      continue;
    for (auto e : h.elements_with(static_cast<Gen>(k)))
      if (alternating_in_range(h, 0, k, {e})) {
        out.push_back({FamilyKind::RP, 0, k});
        break;
      }
  }
  for (int j = 1; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      if (!lp_base[static_cast<std::size_t>(j)] || !rp_base[static_cast<std::size_t>(k)])
        continue;
      bool found = false;
      for (auto a : h.elements_with(static_cast<Gen>(j)))
        for (auto b : h.elements_with(static_cast<Gen>(k)))
          if (!found && alternating_in_range(h, j, k, {a, b}))
            found = true;
      if (found)
        out.push_back({FamilyKind::LRP, j, k});
    }
  }
  return out;
}

FamilyLabel classify_ctilde(const CoxeterGraph& ctilde, const Heap& h) {
  if (!is_fc(ctilde, h))
    throw NotFC("heap is not fully commutative");
  const auto labels = matching_families(ctilde, h);
  if (labels.size() != 1) {
    std::string all;
    for (const auto& l : labels)
      all += " " + l.to_string();
    throw ClassificationFailure("heap " + ctilde.format_word(h.witness()) + " matches " +
                                std::to_string(labels.size()) + " families:" + all);
  }
  return labels.front();
}

namespace {

// How one t (or u) occurrence is rewritten: both fork vertices, or one.
enum class Split { Both, First, Second };
using Assignment = std::vector<Split>;

const std::vector<Split> kAllSplits = {Split::Both, Split::First, Split::Second};

std::vector<Assignment> product(const std::vector<std::vector<Split>>& choices) {
  std::vector<Assignment> out{{}};
  for (const auto& options : choices) {
    std::vector<Assignment> next;
    for (const auto& prefix : out)
      for (Split s : options) {
        auto a = prefix;
        a.push_back(s);
        next.push_back(std::move(a));
      }
    out = std::move(next);
  }
  return out;
}

// The chain t s1 ... u ... s1 t, whose two t's split independently.
Word outer_t_word(int n) {
  Word w{0};
  for (int i = 1; i <= n; ++i)
    w.push_back(static_cast<Gen>(i));
  for (int i = n - 1; i >= 0; --i)
    w.push_back(static_cast<Gen>(i));
  return w;
}

Word outer_u_word(int n) {
  Word w{static_cast<Gen>(n)};
  for (int i = n - 1; i >= 0; --i)
    w.push_back(static_cast<Gen>(i));
  for (int i = 1; i <= n; ++i)
    w.push_back(static_cast<Gen>(i));
  return w;
}

// Substitution choices for the occurrences of `end` (t = 0 or u = n).
// `peak_side` is the family whose peak contains that end.
std::vector<Assignment> end_assignments(const CoxeterGraph& g, const Heap& h, int n,
                                        const FamilyLabel& label, Gen end) {
  const auto occ = h.elements_with(end);
  const std::size_t m = occ.size();
  const bool is_t = end == 0;
  if (m == 0)
    return {{}};
  const Word special = is_t ? outer_t_word(n) : outer_u_word(n);
  if (is_isomorphic(h, Heap::of_word(g, special)))
    return product(std::vector<std::vector<Split>>(m, kAllSplits));

  const bool in_peak = is_t ? (label.kind == FamilyKind::LP || label.kind == FamilyKind::LRP)
                            : (label.kind == FamilyKind::RP || label.kind == FamilyKind::LRP);
  if (in_peak)
    return product(std::vector<std::vector<Split>>(m, {Split::Both}));

  if (label.kind == FamilyKind::ZZ) {
    std::vector<std::vector<Split>> choices;
    for (std::size_t i = 0; i < m; ++i) {
      const bool boundary = occ[i] == 0 || occ[i] + 1 == h.size();
      choices.push_back(boundary ? kAllSplits : std::vector<Split>{Split::Both});
    }
    return product(choices);
  }

  if (m == 1)
    return {{Split::Both}, {Split::First}, {Split::Second}};
  Assignment a, b;
  for (std::size_t i = 0; i < m; ++i) {
    a.push_back(i % 2 == 0 ? Split::First : Split::Second);
    b.push_back(i % 2 == 0 ? Split::Second : Split::First);
  }
  return {a, b};
}

Heap substitute(const CoxeterGraph& target, const Layout& tl, const Heap& h, int n,
                const Assignment& ta, const Assignment& ua) {
  Word w;
  std::size_t it = 0, iu = 0;
  auto emit = [&](const std::vector<Gen>& fork, Split s) {
    if (fork.size() == 1 || s == Split::First || s == Split::Both)
      w.push_back(fork[0]);
    if (fork.size() == 2 && (s == Split::Second || s == Split::Both))
      w.push_back(fork[1]);
  };
  for (Gen x : h.witness()) {
    if (x == 0)
      emit(tl.t, ta.empty() ? Split::Both : ta[it++]);
    else if (x == n)
      emit(tl.u, ua.empty() ? Split::Both : ua[iu++]);
    else
      w.push_back(tl.s(x));
  }
  return Heap::of_word(target, std::move(w));
}

} // namespace

std::vector<Heap> delta_t(const CoxeterGraph& ctilde, const Heap& h) {
  const int n = require_ctilde(ctilde).n;
  const auto label = classify_ctilde(ctilde, h);
  const auto target = build_graph({Family::Btilde, n + 1});
  const Layout tl = layout_of(target);
  std::vector<Heap> out;
  for (const auto& ta : end_assignments(ctilde, h, n, label, 0))
    out.push_back(substitute(target, tl, h, n, ta, {}));
  return out;
}

std::vector<Heap> delta_tu(const CoxeterGraph& ctilde, const Heap& h) {
  const int n = require_ctilde(ctilde).n;
  const auto label = classify_ctilde(ctilde, h);
  const auto target = build_graph({Family::Dtilde, n + 2});
  const Layout tl = layout_of(target);
  const auto tas = end_assignments(ctilde, h, n, label, 0);
  const auto uas = end_assignments(ctilde, h, n, label, static_cast<Gen>(n));
  std::vector<Heap> out;
  for (const auto& ta : tas)
    for (const auto& ua : uas)
      out.push_back(substitute(target, tl, h, n, ta, ua));
  return out;
}

BdClassification classify_bd(const CoxeterGraph& bd, const Heap& h) {
  const Layout l = layout_of(bd);
  if (l.family == Family::Ctilde)
    throw std::invalid_argument("classify_bd expects an affine B or D graph");
  if (!is_fc(bd, h))
    throw NotFC("heap is not fully commutative");
  const int n = l.n;
  const auto ctilde = build_graph({Family::Ctilde, n});

  // Fork elements between the same two consecutive path elements merge into
  // one end element.
  auto gap_of = [&](std::size_t e, Gen anchor) {
    std::size_t below = 0;
    for (auto a : h.elements_with(anchor))
      if (h.less(a, e))
        ++below;
    return below;
  };
  std::map<std::pair<bool, std::size_t>, std::vector<Gen>> groups;
  Word w;
  for (std::size_t e = 0; e < h.size(); ++e) {
    const Gen x = h.label(e);
    const bool t_side = l.is_t(x);
    const bool u_side = l.u.size() == 2 && l.is_u(x);
    if (!t_side && !u_side) {
      w.push_back(x == l.u.front() && l.u.size() == 1 ? static_cast<Gen>(n)
                                                       : static_cast<Gen>(x - l.offset));
      continue;
    }
    const auto key = std::make_pair(t_side, gap_of(e, t_side ? l.s(1) : l.s(n - 1)));
    auto& group = groups[key];
    if (std::find(group.begin(), group.end(), x) != group.end())
      throw ClassificationFailure("two equal fork elements share a gap");
    if (group.empty())
      w.push_back(t_side ? Gen{0} : static_cast<Gen>(n));
    group.push_back(x);
  }

  BdClassification out;
  out.underlying = Heap::of_word(ctilde, std::move(w));
  if (!is_fc(ctilde, out.underlying))
    throw ClassificationFailure("collapsed heap is not fully commutative");
  out.label = classify_ctilde(ctilde, out.underlying);
  const auto images = l.family == Family::Btilde ? delta_t(ctilde, out.underlying)
                                                 : delta_tu(ctilde, out.underlying);
  const bool found = std::any_of(images.begin(), images.end(),
                                 [&](const Heap& img) { return is_isomorphic(img, h); });
  if (!found)
    throw ClassificationFailure("heap is not a substitution of its collapsed heap");
  out.label.decoration = l.family == Family::Btilde ? Decoration::Btilde : Decoration::Dtilde;
  return out;
}

namespace {

bool contains_factor(const Word& w, const Word& f) {
  return std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end();
}

Word peak_toward_u(const Layout& l, int i) {
  Word w;
  for (int k = i; k < l.n; ++k)
    w.push_back(l.s(k));
  for (Gen x : l.u)
    w.push_back(x);
  for (int k = l.n - 1; k >= i; --k)
    w.push_back(l.s(k));
  return w;
}

Word peak_toward_t(const Layout& l, int i) {
  Word w;
  for (int k = i; k >= 1; --k)
    w.push_back(l.s(k));
  for (Gen x : l.t)
    w.push_back(x);
  for (int k = 1; k <= i; ++k)
    w.push_back(l.s(k));
  return w;
}

bool interval_is(const CoxeterGraph& g, const Heap& h, std::size_t a, std::size_t b,
                 const Word& peak) {
  const auto sub = h.restricted(g, h.interval(a, b));
  return canonical_word(sub) == canonical_word(Heap::of_word(g, peak));
}

[[noreturn]] void violation(const CoxeterGraph& g, const Heap& h, const std::string& what) {
  throw LemmaViolation(what + " in heap " + g.format_word(h.witness()));
}

} // namespace

bool assert_structure_lemmas(const CoxeterGraph& g, const Heap& h) {
  const Layout l = layout_of(g);
  if (!is_fc(g, h))
    throw NotFC("heap is not fully commutative");
  const int n = l.n;

  // For a path edge {a, b} with b the doubled label, checks the forbidden
  // factors and that each bb factor bounds the peak toward the far end.
  auto check_edge = [&](int a, int b, const Word& peak) {
    const Gen A = l.s(a), B = l.s(b);
    const Gen pair[2] = {A, B};
    const auto chain = h.elements_with(pair);
    const Word cw = labels_of(h, chain);
    if (contains_factor(cw, {B, A, B, B}) || contains_factor(cw, {B, B, A, B}) ||
        contains_factor(cw, {B, B, B}))
      violation(g, h, "forbidden factor on s" + std::to_string(a) + ",s" + std::to_string(b));
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      if (cw[i] == B && cw[i + 1] == B && !interval_is(g, h, chain[i], chain[i + 1], peak))
        violation(g, h, "doubled s" + std::to_string(b) + " does not bound a peak");
  };
  for (int i = 2; i <= n - 1; ++i)
    check_edge(i - 1, i, peak_toward_u(l, i));
  for (int i = 1; i <= n - 2; ++i)
    check_edge(i + 1, i, peak_toward_t(l, i));

  // A peak interval plus a third element of the same label forces a zigzag.
  for (int i = 1; i <= n - 1; ++i) {
    const auto occ = h.elements_with(l.s(i));
    if (occ.size() < 3)
      continue;
    bool peak = false;
    for (std::size_t k = 0; k + 1 < occ.size() && !peak; ++k)
      peak = interval_is(g, h, occ[k], occ[k + 1], peak_toward_u(l, i)) ||
             interval_is(g, h, occ[k], occ[k + 1], peak_toward_t(l, i));
    if (!peak)
      continue;
    const FamilyLabel label = l.family == Family::Ctilde ? classify_ctilde(g, h)
                                                         : classify_bd(g, h).label;
    if (label.kind != FamilyKind::ZZ)
      violation(g, h, "peak with a third s" + std::to_string(i) + " outside the zigzags");
  }
  return true;
}

} // namespace fcx
