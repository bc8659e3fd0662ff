#pragma once

// Reference computations for the tests. None of them go through the heap
// engine, the oracle or the series solvers.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "fcx/coxeter.hpp"
#include "fcx/walk.hpp"

namespace fcx::testing {

inline std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

inline std::uint64_t catalan(int n) { return binomial(2 * n, n) / static_cast<std::uint64_t>(n + 1); }

// 321-avoiding permutations of {0..n-1} counted by number of inversions.
inline std::vector<std::uint64_t> avoiding_321_by_inversions(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::uint64_t> counts;
  do {
    bool has321 = false;
    for (int i = 0; i < n && !has321; ++i)
      for (int j = i + 1; j < n && !has321; ++j)
        for (int k = j + 1; k < n && !has321; ++k)
          has321 = p[i] > p[j] && p[j] > p[k];
    if (has321)
      continue;
    std::size_t inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p[i] > p[j])
          ++inv;
    if (counts.size() <= inv)
      counts.resize(inv + 1, 0);
    ++counts[inv];
  } while (std::next_permutation(p.begin(), p.end()));
  return counts;
}

// Commutation class of a word, by exhaustive swapping of adjacent commuting
// letters.
inline std::set<Word> commutation_class(const CoxeterGraph& g, const Word& w) {
  std::set<Word> seen{w};
  std::vector<Word> todo{w};
  while (!todo.empty()) {
    Word cur = todo.back();
    todo.pop_back();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (cur[i] == cur[i + 1] || g.bond(cur[i], cur[i + 1]) != 2)
        continue;
      Word next = cur;
      std::swap(next[i], next[i + 1]);
      if (seen.insert(next).second)
        todo.push_back(next);
    }
  }
  return seen;
}

// Word-level criterion: no word commutation-equivalent to w contains ss or
// an alternating factor sts... of length m(s,t).
inline bool fc_by_words(const CoxeterGraph& g, const Word& w) {
  for (const Word& v : commutation_class(g, w)) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] == v[i + 1])
        return false;
      const Bond m = g.bond(v[i], v[i + 1]);
      if (m < 3 || m == kInfinity)
        continue;
      std::size_t len = 2;
      while (i + len < v.size() && v[i + len] == v[i + len - 2])
        ++len;
      if (len >= static_cast<std::size_t>(m))
        return false;
    }
  }
  return true;
}

inline void all_words(std::size_t rank, std::size_t len, const std::function<void(const Word&)>& f) {
  Word w(len, 0);
  while (true) {
    f(w);
    std::size_t i = 0;
    while (i < len && ++w[i] == rank)
      w[i++] = 0;
    if (i == len)
      return;
  }
}

// Every step sequence of length n from every start height up to max_start.
inline std::vector<Walk> all_walks(int n, int max_start) {
  std::vector<Walk> out;
  const Step steps[4] = {Step::U, Step::D, Step::L, Step::R};
  std::vector<int> digits(static_cast<std::size_t>(n), 0);
  for (int start = 0; start <= max_start; ++start) {
    std::fill(digits.begin(), digits.end(), 0);
    while (true) {
      Walk w{start, {}};
      int h = start;
      bool ok = true;
      for (int d : digits) {
        w.steps.push_back(steps[d]);
        h += steps[d] == Step::U ? 1 : steps[d] == Step::D ? -1 : 0;
        ok = ok && h >= 0;
      }
      if (ok)
        out.push_back(w);
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == 4)
        digits[i++] = 0;
      if (i == digits.size())
        break;
    }
  }
  return out;
}

inline std::int64_t weight_of(const Walk& w, WalkStat stat) {
  std::int64_t total = 0;
  int h = w.start;
  const std::size_t last = w.steps.size();
  for (std::size_t i = 0; i <= last; ++i) {
    if (stat == WalkStat::Ht || i != last)
      total += h;
    if (i < last)
      h += w.steps[i] == Step::U ? 1 : w.steps[i] == Step::D ? -1 : 0;
  }
  return total;
}

enum class End { Any, Zero, Closed };

// Walk counts by weight for one x-order, from the exhaustive step lists.
inline QPoly brute_walks(int n, int qmax, End end, bool from_zero, bool star, bool touch, WalkStat stat) {
  QPoly p(qmax);
  for (const Walk& w : all_walks(n, from_zero ? 0 : qmax)) {
    std::vector<int> h{w.start};
    for (Step s : w.steps)
      h.push_back(h.back() + (s == Step::U ? 1 : s == Step::D ? -1 : 0));
    if (end == End::Zero && h.back() != 0)
      continue;
    if (end == End::Closed && h.back() != h.front())
      continue;
    bool ok = true;
    for (std::size_t i = 0; i < w.steps.size(); ++i)
      if (star && w.steps[i] == Step::R && h[i] == 0)
        ok = false;
    if (touch && std::find(h.begin(), h.end(), 0) == h.end())
      ok = false;
    const auto wt = weight_of(w, stat);
    if (ok && wt <= qmax)
      p.add_term(static_cast<int>(wt), 1);
  }
  return p;
}

} // namespace fcx::testing
