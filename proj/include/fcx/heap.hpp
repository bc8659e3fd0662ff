#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fcx/coxeter.hpp"

namespace fcx {

// A heap (Viennot) over a Coxeter graph: a labelled poset in which equal or
// adjacent labels are always comparable and the order is generated by those
// comparisons.
//
// Elements are the positions of a witness word, which is always one of the
// heap's linear extensions; so i < j in the poset implies i < j as indices.
// Both the down-closure and the up-closure are stored as bit rows.
class Heap {
public:
  Heap() = default;

  static Heap of_word(const CoxeterGraph& g, Word w);
  // Builds a heap from an explicit labelled poset given by covering
  // relations. Throws InvalidHeap if the poset is cyclic or is not the heap
  // of any word over g.
  static Heap from_covers(const CoxeterGraph& g, const std::vector<Gen>& labels,
                          const std::vector<std::pair<std::size_t, std::size_t>>& covers);

  std::size_t size() const { return word_.size(); }
  bool empty() const { return word_.empty(); }
  Gen label(std::size_t i) const { return word_[i]; }
  const Word& witness() const { return word_; }

  bool leq(std::size_t i, std::size_t j) const { return bit(down_, j, i); }
  bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }
  bool comparable(std::size_t i, std::size_t j) const { return leq(i, j) || leq(j, i); }
  // Number of u with a <= u <= b.
  std::size_t interval_size(std::size_t a, std::size_t b) const;
  std::vector<std::size_t> interval(std::size_t a, std::size_t b) const;

  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  bool covers(std::size_t lower, std::size_t upper) const;
  bool is_maximal(std::size_t i) const;
  bool is_minimal(std::size_t i) const;

  // Elements carrying one of the given labels, bottom to top by witness
  // position (a chain whenever the labels are pairwise equal-or-adjacent).
  std::vector<std::size_t> elements_with(std::span<const Gen> labels) const;
  std::vector<std::size_t> elements_with(Gen s) const { return elements_with(std::span<const Gen>(&s, 1)); }
  std::size_t count(Gen s) const;

  // Heap of witness·s.
  Heap appended(const CoxeterGraph& g, Gen s) const;
  // Heap induced on a subset of elements, which must be convex for the
  // result to be the induced subposet.
  Heap restricted(const CoxeterGraph& g, std::span<const std::size_t> elems) const;

private:
  bool bit(const std::vector<std::uint64_t>& rows, std::size_t row, std::size_t col) const {
    return (rows[row * stride() + col / 64] >> (col % 64)) & 1U;
  }
  void rebuild_rows(const CoxeterGraph& g);
  std::size_t stride() const { return (word_.size() + 63) / 64; }

  Word word_;
  // down_[j] has bit i set iff i <= j; up_[i] has bit j set iff i <= j.
  std::vector<std::uint64_t> down_;
  std::vector<std::uint64_t> up_;
};

// Cartier-Foata normal form: minimal elements layer by layer, each layer
// sorted by generator index. Equal for isomorphic heaps.
Word canonical_word(const Heap& h);
bool is_isomorphic(const Heap& a, const Heap& b);

struct LinearExtensions {
  std::vector<Word> words;
  bool truncated = false;
};
LinearExtensions linear_extensions(const Heap& h, std::size_t cap);

Heap dual(const CoxeterGraph& g, const Heap& h);

// No convex alternating s,t-chain of length m(s,t) for finite m >= 3, and no
// covering relation between two equally labelled elements.
bool is_fc(const CoxeterGraph& g, const Heap& h);
// Every chain H_{s,t} over an edge {s,t} alternates its labels.
bool is_alternating(const CoxeterGraph& g, const Heap& h);
// Labels of the subposet carrying the given labels, bottom to top.
Word chain_word(const Heap& h, std::span<const Gen> labels);

// {"labels": [...names], "covers": [[i, j], ...]} with i covered by j.
nlohmann::json heap_to_json(const CoxeterGraph& g, const Heap& h);
Heap heap_from_json(const CoxeterGraph& g, const nlohmann::json& j);

} // namespace fcx
