#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "fcx/coxeter.hpp"
#include "fcx/heap.hpp"
#include "fcx/qseries.hpp"

namespace fcx {

// U and D change the height by +1 and -1; L and R are level steps.
enum class Step : char { U = 'U', D = 'D', L = 'L', R = 'R' };

struct Walk {
  int start = 0;
  std::vector<Step> steps;

  std::size_t length() const { return steps.size(); }
  // Heights of all length()+1 points. Throws InvalidWalk if one is negative.
  std::vector<int> heights() const;
  int end() const { return heights().back(); }
  bool satisfies_star() const;
  bool touches_axis() const;

  // "@h" followed by space-separated steps, e.g. "@1 D L L U".
  static Walk parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const Walk&, const Walk&) = default;
  friend auto operator<=>(const Walk&, const Walk&) = default;
};

std::int64_t ht(const Walk& w);       // all points
std::int64_t ht_prime(const Walk& w); // all points but the last

// Level at one positive height throughout, every step carrying the same label.
bool is_uniform_level(const Walk& w);

enum class EndConstraint { Any, EndAtZero, StartAtAndEndAtZero, Closed };

// G_n, Q_n, M_n^(i) and O_n, optionally restricted to (*) walks and to
// walks that touch the axis.
struct WalkFamily {
  int n = 0;
  EndConstraint constraint = EndConstraint::Any;
  int start = 0; // used by StartAtAndEndAtZero
  bool star = false;
  bool touch = false;

  static WalkFamily G(int n) { return {n, EndConstraint::Any, 0, false, false}; }
  static WalkFamily Q(int n) { return {n, EndConstraint::EndAtZero, 0, false, false}; }
  static WalkFamily M(int n, int start = 0) { return {n, EndConstraint::StartAtAndEndAtZero, start, false, false}; }
  static WalkFamily O(int n) { return {n, EndConstraint::Closed, 0, false, false}; }
  WalkFamily starred() const { auto f = *this; f.star = true; return f; }
  WalkFamily touching() const { auto f = *this; f.touch = true; return f; }

  bool contains(const Walk& w) const;
};

enum class WalkStat { Ht, HtPrime };

// Visits every walk of the family whose weight is at most max_weight.
// Start heights are capped at max_weight, which only matters for n = 0
// under ht' (where the start point carries no weight).
void for_each_walk(const WalkFamily& fam, WalkStat stat, int max_weight,
                   const std::function<void(const Walk&, int)>& visit);
QPoly enumerate_walks(const WalkFamily& fam, WalkStat stat, int max_weight);

// U -> UU, D -> DD, L -> UD, R -> DU.
std::vector<Step> to_dyck(const Walk& w);
bool is_dyck(const std::vector<Step>& steps);

// Encoding of alternating heaps over a linear graph v0 - ... - vn (generator
// i is v_i). A level step at positive height is L when the chain over
// {v_i, v_i+1} starts with v_i+1 and R when it starts with v_i.
Walk phi(const CoxeterGraph& linear, const Heap& h);
Heap phi_inv(const CoxeterGraph& linear, const Walk& w);

// Cyclic version for the affine A graph s0 - s1 - ... - s_{n-1} - s0:
// a closed walk of length n, weighted by ht'.
Walk phi_prime(const CoxeterGraph& cycle, const Heap& h);
Heap phi_prime_inv(const CoxeterGraph& cycle, const Walk& w);

} // namespace fcx
