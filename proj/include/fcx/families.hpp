#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fcx/coxeter.hpp"
#include "fcx/heap.hpp"

namespace fcx {

enum class FamilyKind { ALT, ZZ, LP, RP, LRP };
enum class Decoration { None, Btilde, Dtilde };

struct FamilyLabel {
  FamilyKind kind = FamilyKind::ALT;
  int j = 0; // LP, LRP
  int k = 0; // RP, LRP
  Decoration decoration = Decoration::None;

  std::string to_string() const; // "ALT", "LP(2)", "LRP(1,3)"
  friend bool operator==(const FamilyLabel&, const FamilyLabel&) = default;
};

nlohmann::json to_json(const FamilyLabel& label);

// All families whose defining clauses hold for h, a heap over the affine C
// graph (t = 0, s_i = i, u = n). FC heaps have exactly one.
std::vector<FamilyLabel> matching_families(const CoxeterGraph& ctilde, const Heap& h);

// Throws NotFC, or ClassificationFailure unless exactly one family matches.
FamilyLabel classify_ctilde(const CoxeterGraph& ctilde, const Heap& h);

// Fork substitutions. Results are heaps over build_graph(Btilde:n+1) and
// build_graph(Dtilde:n+2) respectively.
std::vector<Heap> delta_t(const CoxeterGraph& ctilde, const Heap& h);
std::vector<Heap> delta_tu(const CoxeterGraph& ctilde, const Heap& h);

struct BdClassification {
  FamilyLabel label;
  Heap underlying; // over build_graph(Ctilde:n)
};

// Collapses the fork elements back to t (and u), classifies the resulting
// affine C heap and checks that h is among its substitutions.
BdClassification classify_bd(const CoxeterGraph& bd, const Heap& h);

// Forbidden factors, peak intervals and the zigzag conclusion on one heap of
// type affine B, C or D. Returns true or throws LemmaViolation.
bool assert_structure_lemmas(const CoxeterGraph& g, const Heap& h);

} // namespace fcx
