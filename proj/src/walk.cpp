#include "fcx/walk.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fcx/errors.hpp"

namespace fcx {

std::vector<int> Walk::heights() const {
  std::vector<int> h{start};
  if (start < 0)
    throw InvalidWalk("negative start height");
  for (Step s : steps) {
    int next = h.back();
    if (s == Step::U)
      ++next;
    else if (s == Step::D)
      --next;
    if (next < 0)
      throw InvalidWalk("walk goes below the axis");
    h.push_back(next);
  }
  return h;
}

bool Walk::satisfies_star() const {
  const auto h = heights();
  for (std::size_t i = 0; i < steps.size(); ++i)
    if (steps[i] == Step::R && h[i] == 0)
      return false;
  return true;
}

bool Walk::touches_axis() const {
  const auto h = heights();
  return std::find(h.begin(), h.end(), 0) != h.end();
}

Walk Walk::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  Walk w;
  if (!(in >> tok) || tok.size() < 2 || tok[0] != '@')
    throw ParseError("walk must start with '@<height>'");
  try {
    std::size_t used = 0;
    w.start = std::stoi(tok.substr(1), &used);
    if (used != tok.size() - 1)
      throw ParseError("bad start height '" + tok + "'");
  } catch (const std::logic_error&) {
    throw ParseError("bad start height '" + tok + "'");
  }
  while (in >> tok) {
    for (char c : tok) {
      switch (c) {
      case 'U': case 'D': case 'L': case 'R':
        w.steps.push_back(static_cast<Step>(c));
        break;
      default:
        throw ParseError(std::string("unknown step '") + c + "'");
      }
    }
  }
  w.heights();
  return w;
}

std::string Walk::to_string() const {
  std::string out = "@" + std::to_string(start);
  for (Step s : steps) {
    out += ' ';
    out += static_cast<char>(s);
  }
  return out;
}

std::int64_t ht(const Walk& w) {
  std::int64_t s = 0;
  for (int h : w.heights())
    s += h;
  return s;
}

std::int64_t ht_prime(const Walk& w) {
  const auto h = w.heights();
  std::int64_t s = 0;
  for (std::size_t i = 0; i + 1 < h.size(); ++i)
    s += h[i];
  return s;
}

bool is_uniform_level(const Walk& w) {
  if (w.start <= 0 || w.steps.empty())
    return false;
  const Step first = w.steps.front();
  if (first != Step::L && first != Step::R)
    return false;
  return std::all_of(w.steps.begin(), w.steps.end(), [&](Step s) { return s == first; });
}

bool WalkFamily::contains(const Walk& w) const {
  if (static_cast<int>(w.length()) != n)
    return false;
  const auto h = w.heights();
  switch (constraint) {
  case EndConstraint::Any:
    break;
  case EndConstraint::EndAtZero:
    if (h.back() != 0)
      return false;
    break;
  case EndConstraint::StartAtAndEndAtZero:
    if (h.front() != start || h.back() != 0)
      return false;
    break;
  case EndConstraint::Closed:
    if (h.front() != h.back())
      return false;
    break;
  }
  if (star && !w.satisfies_star())
    return false;
  if (touch && !w.touches_axis())
    return false;
  return true;
}

namespace {

struct WalkSearch {
  const WalkFamily& fam;
  WalkStat stat;
  int max_weight;
  const std::function<void(const Walk&, int)>& visit;
  Walk cur;

  // Smallest height the walk can still be forced to reach at the end, used
  // to prune branches that cannot satisfy the end constraint.
  bool can_finish(int h, int remaining) const {
    switch (fam.constraint) {
    case EndConstraint::Any:
      return true;
    case EndConstraint::EndAtZero:
    case EndConstraint::StartAtAndEndAtZero:
      return h <= remaining;
    case EndConstraint::Closed:
      return std::abs(h - cur.start) <= remaining;
    }
    return true;
  }

  void go(int h, int weight, bool touched) {
    const int remaining = fam.n - static_cast<int>(cur.steps.size());
    if (!can_finish(h, remaining))
      return;
    if (remaining == 0) {
      if (stat == WalkStat::Ht)
        weight += h;
      if (weight > max_weight)
        return;
      if (fam.touch && !touched)
        return;
      visit(cur, weight);
      return;
    }
    const int w2 = weight + h;
    if (w2 > max_weight)
      return;
    for (Step s : {Step::U, Step::D, Step::L, Step::R}) {
      int next = h;
      if (s == Step::U)
        ++next;
      else if (s == Step::D)
        --next;
      if (next < 0)
        continue;
      if (s == Step::R && h == 0 && fam.star)
        continue;
      cur.steps.push_back(s);
      go(next, w2, touched || next == 0);
      cur.steps.pop_back();
    }
  }
};

} // namespace

void for_each_walk(const WalkFamily& fam, WalkStat stat, int max_weight,
                   const std::function<void(const Walk&, int)>& visit) {
  if (fam.n < 0)
    throw std::invalid_argument("walk length must be nonnegative");
  WalkSearch search{fam, stat, max_weight, visit, {}};
  int lo = 0, hi = max_weight;
  if (fam.constraint == EndConstraint::StartAtAndEndAtZero)
    lo = hi = fam.start;
  for (int h0 = lo; h0 <= hi; ++h0) {
    search.cur = Walk{h0, {}};
    search.go(h0, 0, h0 == 0);
  }
}

QPoly enumerate_walks(const WalkFamily& fam, WalkStat stat, int max_weight) {
  QPoly p(max_weight);
  for_each_walk(fam, stat, max_weight, [&](const Walk&, int weight) { p.add_term(weight, 1); });
  return p;
}

std::vector<Step> to_dyck(const Walk& w) {
  std::vector<Step> out;
  for (Step s : w.steps) {
    switch (s) {
    case Step::U: out.insert(out.end(), {Step::U, Step::U}); break;
    case Step::D: out.insert(out.end(), {Step::D, Step::D}); break;
    case Step::L: out.insert(out.end(), {Step::U, Step::D}); break;
    case Step::R: out.insert(out.end(), {Step::D, Step::U}); break;
    }
  }
  return out;
}

bool is_dyck(const std::vector<Step>& steps) {
  int h = 0;
  for (Step s : steps) {
    if (s == Step::U)
      ++h;
    else if (s == Step::D)
      --h;
    else
      return false;
    if (h < 0)
      return false;
  }
  return h == 0;
}

namespace {

// Steps between consecutive vertices of a path or cycle. `pairs[i]` is the
// edge walked by step i.
using EdgeList = std::vector<std::pair<Gen, Gen>>;

EdgeList linear_edges(const CoxeterGraph& g) {
  EdgeList e;
  for (std::size_t i = 0; i + 1 < g.rank(); ++i) {
    if (!g.adjacent(static_cast<Gen>(i), static_cast<Gen>(i + 1)))
      throw InvalidHeap("graph is not the path v0 - v1 - ... - vn");
    e.emplace_back(static_cast<Gen>(i), static_cast<Gen>(i + 1));
  }
  return e;
}

EdgeList cycle_edges(const CoxeterGraph& g) {
  const std::size_t n = g.rank();
  EdgeList e;
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = static_cast<Gen>(i), b = static_cast<Gen>((i + 1) % n);
    if (!g.adjacent(a, b))
      throw InvalidHeap("graph is not the cycle s0 - ... - s_{n-1} - s0");
    e.emplace_back(a, b);
  }
  return e;
}

Walk encode(const Heap& h, const EdgeList& edges) {
  Walk w;
  // Both paths and cycles start at generator 0.
  w.start = static_cast<int>(h.count(0));
  for (auto [a, b] : edges) {
    const int ha = static_cast<int>(h.count(a));
    const int hb = static_cast<int>(h.count(b));
    if (hb == ha + 1) {
      w.steps.push_back(Step::U);
    } else if (hb + 1 == ha) {
      w.steps.push_back(Step::D);
    } else if (ha == hb) {
      if (ha == 0) {
        w.steps.push_back(Step::L);
      } else {
        const Gen pair[2] = {a, b};
        const auto chain = h.elements_with(pair);
        w.steps.push_back(h.label(chain.front()) == b ? Step::L : Step::R);
      }
    } else {
      throw NotAlternating("adjacent label counts differ by more than one");
    }
  }
  return w;
}

// Builds the union of the convex chains each step encodes and returns the
// heap they generate. Throws std::logic_error on a cycle.
Heap decode(const CoxeterGraph& g, const Walk& w, const EdgeList& edges) {
  const auto heights = w.heights();
  const std::size_t rank = g.rank();
  std::vector<int> count(rank, -1);
  count[0] = heights[0];
  for (std::size_t i = 0; i < edges.size(); ++i) {
    count[edges[i].first] = heights[i];
    count[edges[i].second] = heights[i + 1];
  }
  std::vector<std::size_t> base(rank + 1, 0);
  for (std::size_t s = 0; s < rank; ++s)
    base[s + 1] = base[s] + static_cast<std::size_t>(std::max(count[s], 0));
  const std::size_t total = base[rank];
  auto node = [&](Gen s, int j) { return base[s] + static_cast<std::size_t>(j); };

  std::vector<std::vector<std::size_t>> succ(total);
  std::vector<std::size_t> indeg(total, 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [a, b] = edges[i];
    const int ha = heights[i], hb = heights[i + 1];
    if (ha == 0 && hb == 0)
      continue;
    // The chain alternates, so it is fixed by its first label.
    const bool b_first = hb > ha || (ha == hb && w.steps[i] == Step::L);
    std::vector<std::size_t> chain;
    int ia = 0, ib = 0;
    bool take_b = b_first;
    while (ia < ha || ib < hb) {
      chain.push_back(take_b ? node(b, ib++) : node(a, ia++));
      take_b = !take_b;
    }
    if (ia != ha || ib != hb)
      throw std::logic_error("chain does not alternate");
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      succ[chain[k]].push_back(chain[k + 1]);
      ++indeg[chain[k + 1]];
    }
  }

  std::vector<Gen> label(total);
  for (std::size_t s = 0; s < rank; ++s)
    for (std::size_t k = base[s]; k < base[s + 1]; ++k)
      label[k] = static_cast<Gen>(s);
  std::set<std::size_t> ready;
  for (std::size_t k = 0; k < total; ++k)
    if (indeg[k] == 0)
      ready.insert(k);
  Word word;
  while (!ready.empty()) {
    const std::size_t k = *ready.begin();
    ready.erase(ready.begin());
    word.push_back(label[k]);
    for (std::size_t m : succ[k])
      if (--indeg[m] == 0)
        ready.insert(m);
  }
  if (word.size() != total)
    throw std::logic_error("chains of the walk form a cycle");
  return Heap::of_word(g, std::move(word));
}

} // namespace

Walk phi(const CoxeterGraph& linear, const Heap& h) {
  const auto edges = linear_edges(linear);
  if (!is_alternating(linear, h))
    throw NotAlternating("phi needs an alternating heap");
  return encode(h, edges);
}

Heap phi_inv(const CoxeterGraph& linear, const Walk& w) {
  const auto edges = linear_edges(linear);
  if (w.length() != edges.size())
    throw InvalidWalk("walk length must equal the number of edges");
  if (!w.satisfies_star())
    throw StarViolation("level step at height 0 labelled R");
  Heap h = decode(linear, w, edges);
  if (encode(h, edges) != w)
    throw std::logic_error("phi_inv does not invert phi");
  return h;
}

Walk phi_prime(const CoxeterGraph& cycle, const Heap& h) {
  const auto edges = cycle_edges(cycle);
  if (!is_fc(cycle, h))
    throw NotFC("phi' needs a fully commutative heap");
  if (!is_alternating(cycle, h))
    throw std::logic_error("FC heap of affine type A is not alternating");
  return encode(h, edges);
}

Heap phi_prime_inv(const CoxeterGraph& cycle, const Walk& w) {
  const auto edges = cycle_edges(cycle);
  if (w.length() != edges.size())
    throw InvalidWalk("walk length must equal the number of generators");
  const auto heights = w.heights();
  if (heights.front() != heights.back())
    throw InvalidWalk("walk must end at its start height");
  if (!w.satisfies_star())
    throw StarViolation("level step at height 0 labelled R");
  if (is_uniform_level(w))
    throw ForbiddenEWalk("uniform level walk encodes no element");
  Heap h = decode(cycle, w, edges);
  if (!is_fc(cycle, h) || encode(h, edges) != w)
    throw std::logic_error("phi'_inv does not invert phi'");
  return h;
}

} // namespace fcx
