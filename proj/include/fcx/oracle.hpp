#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fcx/coxeter.hpp"
#include "fcx/heap.hpp"

namespace fcx {

// Number of FC elements per Coxeter length, found by brute force.
struct GrowthRecord {
  std::string spec; // type string, or "custom" for a hand-built graph
  std::vector<std::uint64_t> counts;
  int max_len = 0;
  // The group has finitely many FC elements and all of them were found.
  bool complete = false;
};

struct FcElement {
  int length = 0;
  Word word; // canonical word
  Heap heap;
};

// Worker count for layer extension: FCX_THREADS if set, else the hardware
// concurrency. Results never depend on it.
unsigned oracle_threads();

GrowthRecord enumerate_fc(const CoxeterGraph& g, int max_len);

// Visits every FC element of length <= max_len ordered by length, then by
// canonical word.
void for_each_fc(const CoxeterGraph& g, int max_len,
                 const std::function<void(const FcElement&)>& visit);
std::vector<FcElement> fc_elements(const CoxeterGraph& g, int max_len);

} // namespace fcx
