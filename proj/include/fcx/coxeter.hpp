#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fcx {

using Gen = std::uint8_t;     // generator index inside its graph
using Word = std::vector<Gen>; // element of the free monoid on the generators

// Coxeter matrix entry m(s,t). 2 means commuting, >= 3 means an edge of the
// diagram, kInfinity means no braid relation at all.
using Bond = int;
inline constexpr Bond kInfinity = std::numeric_limits<int>::max();

enum class Family {
  A, B, D, I2, H3, H4, F4, E6, E7, E8,
  Atilde, Btilde, Ctilde, Dtilde, F4tilde, G2tilde, E6tilde, E7tilde, E8tilde
};

// Family plus rank parameter, written "Family:param".
//
//   A:n       A_{n-1}        (n >= 2)     Atilde:n  Atilde_{n-1}  (n >= 3)
//   B:n       B_n            (n >= 2)     Ctilde:n  Ctilde_n      (n >= 2)
//   D:r       D_r            (r >= 3)     Btilde:r  Btilde_r      (r >= 3)
//   I2:m      I_2(m)         (m >= 3)     Dtilde:r  Dtilde_r      (r >= 4)
//
// Exceptional families have a fixed rank and may omit the parameter.
struct TypeSpec {
  Family family = Family::A;
  int param = 0;

  static TypeSpec parse(std::string_view text);
  std::string to_string() const;

  bool is_affine() const;
  bool is_exceptional() const;
  // Btilde_{n+1}, Ctilde_n, Dtilde_{n+2} and B_n, D_{n+1} all share the
  // structural parameter n; this returns it for those families.
  int classical_n() const;

  friend bool operator==(const TypeSpec&, const TypeSpec&) = default;
};

std::string_view family_name(Family f);

class CoxeterGraph {
public:
  // Bonds are given as a full symmetric matrix in row-major order; diagonal
  // entries are ignored.
  CoxeterGraph(std::vector<std::string> names, std::vector<Bond> matrix,
               std::optional<TypeSpec> type = std::nullopt);

  std::size_t rank() const { return names_.size(); }
  Bond bond(Gen s, Gen t) const { return bonds_[s * rank() + t]; }
  // Equal or joined by an edge: the relation that orders heap elements.
  bool related(Gen s, Gen t) const { return s == t || bond(s, t) >= 3; }
  bool adjacent(Gen s, Gen t) const { return s != t && bond(s, t) >= 3; }
  std::vector<Gen> neighbours(Gen s) const;

  const std::string& name(Gen s) const { return names_[s]; }
  Gen index_of(std::string_view name) const;
  const std::optional<TypeSpec>& type() const { return type_; }

  Word parse_word(std::string_view text) const;
  std::string format_word(const Word& w) const;

private:
  std::vector<std::string> names_;
  std::vector<Bond> bonds_;
  std::optional<TypeSpec> type_;
};

CoxeterGraph build_graph(const TypeSpec& spec);

// Path v0 - v1 - ... - vn with the given edge labels (size n).
CoxeterGraph linear_graph(const std::vector<Bond>& edge_bonds);

} // namespace fcx
