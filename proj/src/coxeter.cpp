#include "fcx/coxeter.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>
#include <utility>

#include "fcx/errors.hpp"

namespace fcx {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  int fixed_rank; // 0 for families with a free parameter
};

constexpr std::array<FamilyInfo, 19> kFamilies{{
    {Family::A, "A", 0},
    {Family::B, "B", 0},
    {Family::D, "D", 0},
    {Family::I2, "I2", 0},
    {Family::H3, "H3", 3},
    {Family::H4, "H4", 4},
    {Family::F4, "F4", 4},
    {Family::E6, "E6", 6},
    {Family::E7, "E7", 7},
    {Family::E8, "E8", 8},
    {Family::Atilde, "Atilde", 0},
    {Family::Btilde, "Btilde", 0},
    {Family::Ctilde, "Ctilde", 0},
    {Family::Dtilde, "Dtilde", 0},
    {Family::F4tilde, "F4tilde", 4},
    {Family::G2tilde, "G2tilde", 2},
    {Family::E6tilde, "E6tilde", 6},
    {Family::E7tilde, "E7tilde", 7},
    {Family::E8tilde, "E8tilde", 8},
}};

const FamilyInfo& info(Family f) {
  for (const auto& fi : kFamilies)
    if (fi.family == f)
      return fi;
  throw std::logic_error("unknown family");
}

int minimum_param(Family f) {
  switch (f) {
  case Family::A:
  case Family::B:
  case Family::Ctilde:
    return 2;
  case Family::D:
  case Family::I2:
  case Family::Atilde:
  case Family::Btilde:
    return 3;
  case Family::Dtilde:
    return 4;
  default:
    return info(f).fixed_rank;
  }
}

void validate(const TypeSpec& spec) {
  const auto& fi = info(spec.family);
  if (fi.fixed_rank != 0) {
    if (spec.param != fi.fixed_rank)
      throw RankOutOfRange(std::string(fi.name) + " has fixed rank " +
                           std::to_string(fi.fixed_rank));
    return;
  }
  // 250 keeps every generator index inside a byte.
  if (spec.param < minimum_param(spec.family) || spec.param > 250)
    throw RankOutOfRange(std::string(fi.name) + ":" +
                         std::to_string(spec.param) + " is outside the valid range (>= " +
                         std::to_string(minimum_param(spec.family)) + ")");
}

// Incrementally assembles a graph from named vertices and labelled edges.
class GraphBuilder {
public:
  Gen add(std::string name) {
    names_.push_back(std::move(name));
    return static_cast<Gen>(names_.size() - 1);
  }
  void edge(Gen a, Gen b, Bond m = 3) { edges_.push_back({a, b, m}); }
  void path(const std::vector<Gen>& vs) {
    for (std::size_t i = 0; i + 1 < vs.size(); ++i)
      edge(vs[i], vs[i + 1]);
  }

  CoxeterGraph finish(std::optional<TypeSpec> type) && {
    const std::size_t n = names_.size();
    std::vector<Bond> m(n * n, 2);
    for (std::size_t i = 0; i < n; ++i)
      m[i * n + i] = 1;
    for (const auto& e : edges_) {
      m[e.a * n + e.b] = e.m;
      m[e.b * n + e.a] = e.m;
    }
    return CoxeterGraph(std::move(names_), std::move(m), type);
  }

private:
  struct Edge {
    Gen a, b;
    Bond m;
  };
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
};

std::vector<Gen> add_run(GraphBuilder& g, const std::string& prefix, int from,
                         int to) {
  std::vector<Gen> out;
  for (int i = from; i <= to; ++i)
    out.push_back(g.add(prefix + std::to_string(i)));
  return out;
}

// Bourbaki numbering: s1 - s3 - s4 - ... - s_rank with s2 hanging off s4.
std::vector<Gen> add_type_e(GraphBuilder& g, int rank) {
  auto s = add_run(g, "s", 1, rank);
  g.edge(s[0], s[2]);
  g.edge(s[1], s[3]);
  for (int i = 2; i + 1 < rank; ++i)
    g.edge(s[i], s[i + 1]);
  return s;
}

} // namespace

std::string_view family_name(Family f) { return info(f).name; }

TypeSpec TypeSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  const auto fam = text.substr(0, colon);
  const FamilyInfo* found = nullptr;
  for (const auto& fi : kFamilies)
    if (fi.name == fam)
      found = &fi;
  if (found == nullptr)
    throw ParseError("unknown Coxeter family '" + std::string(fam) + "'");

  TypeSpec spec{found->family, found->fixed_rank};
  if (colon != std::string_view::npos) {
    const auto num = text.substr(colon + 1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
    if (ec != std::errc() || ptr != num.data() + num.size() || num.empty())
      throw ParseError("bad rank parameter in '" + std::string(text) + "'");
    spec.param = value;
  } else if (found->fixed_rank == 0) {
    throw ParseError("family " + std::string(fam) + " needs a rank parameter");
  }
  validate(spec);
  return spec;
}

std::string TypeSpec::to_string() const {
  const auto& fi = info(family);
  if (fi.fixed_rank != 0)
    return std::string(fi.name);
  return std::string(fi.name) + ":" + std::to_string(param);
}

bool TypeSpec::is_affine() const {
  switch (family) {
  case Family::Atilde:
  case Family::Btilde:
  case Family::Ctilde:
  case Family::Dtilde:
  case Family::F4tilde:
  case Family::G2tilde:
  case Family::E6tilde:
  case Family::E7tilde:
  case Family::E8tilde:
    return true;
  default:
    return false;
  }
}

bool TypeSpec::is_exceptional() const { return info(family).fixed_rank != 0; }

int TypeSpec::classical_n() const {
  switch (family) {
  case Family::B:
  case Family::Ctilde:
  case Family::Atilde:
  case Family::A:
    return param;
  case Family::D:
  case Family::Btilde:
    return param - 1;
  case Family::Dtilde:
    return param - 2;
  default:
    throw std::logic_error("classical_n on " + to_string());
  }
}

CoxeterGraph::CoxeterGraph(std::vector<std::string> names,
                           std::vector<Bond> matrix,
                           std::optional<TypeSpec> type)
    : names_(std::move(names)), bonds_(std::move(matrix)), type_(type) {
  const std::size_t n = names_.size();
  if (n > 250)
    throw InvalidHeap("too many generators");
  if (bonds_.size() != n * n)
    throw ParseError("Coxeter matrix has the wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    bonds_[i * n + i] = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        continue;
      if (bonds_[i * n + j] != bonds_[j * n + i])
        throw ParseError("Coxeter matrix is not symmetric");
      if (bonds_[i * n + j] < 2)
        throw ParseError("off-diagonal Coxeter matrix entries must be >= 2");
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (names_[i] == names_[j])
        throw ParseError("duplicate generator name '" + names_[i] + "'");
}

std::vector<Gen> CoxeterGraph::neighbours(Gen s) const {
  std::vector<Gen> out;
  for (std::size_t t = 0; t < rank(); ++t)
    if (adjacent(s, static_cast<Gen>(t)))
      out.push_back(static_cast<Gen>(t));
  return out;
}

Gen CoxeterGraph::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name)
      return static_cast<Gen>(i);
  throw ParseError("unknown generator '" + std::string(name) + "'");
}

Word CoxeterGraph::parse_word(std::string_view text) const {
  Word w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok)
    w.push_back(index_of(tok));
  return w;
}

std::string CoxeterGraph::format_word(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != 0)
      out += ' ';
    out += names_.at(w[i]);
  }
  return out;
}

CoxeterGraph build_graph(const TypeSpec& spec) {
  validate(spec);
  GraphBuilder g;
  const int p = spec.param;
  switch (spec.family) {
  case Family::A:
    g.path(add_run(g, "s", 1, p - 1));
    break;
  case Family::Atilde: {
    auto s = add_run(g, "s", 0, p - 1);
    g.path(s);
    g.edge(s.back(), s.front());
    break;
  }
  case Family::B: {
    const Gen t = g.add("t");
    auto s = add_run(g, "s", 1, p - 1);
    g.edge(t, s.front(), 4);
    g.path(s);
    break;
  }
  case Family::D: {
    const Gen t1 = g.add("t1");
    const Gen t2 = g.add("t2");
    auto s = add_run(g, "s", 1, p - 2);
    g.edge(t1, s.front());
    g.edge(t2, s.front());
    g.path(s);
    break;
  }
  case Family::I2: {
    const Gen a = g.add("s1");
    const Gen b = g.add("s2");
    g.edge(a, b, p);
    break;
  }
  case Family::H3:
  case Family::H4: {
    auto s = add_run(g, "s", 1, p);
    g.path(s);
    g.edge(s[0], s[1], 5);
    break;
  }
  case Family::F4: {
    auto s = add_run(g, "s", 1, 4);
    g.path(s);
    g.edge(s[1], s[2], 4);
    break;
  }
  case Family::E6:
  case Family::E7:
  case Family::E8:
    add_type_e(g, p);
    break;
  case Family::Ctilde: {
    const Gen t = g.add("t");
    auto s = add_run(g, "s", 1, p - 1);
    const Gen u = g.add("u");
    g.edge(t, s.front(), 4);
    g.path(s);
    g.edge(s.back(), u, 4);
    break;
  }
  case Family::Btilde: {
    const int n = p - 1;
    const Gen t1 = g.add("t1");
    const Gen t2 = g.add("t2");
    auto s = add_run(g, "s", 1, n - 1);
    const Gen u = g.add("u");
    g.edge(t1, s.front());
    g.edge(t2, s.front());
    g.path(s);
    g.edge(s.back(), u, 4);
    break;
  }
  case Family::Dtilde: {
    const int n = p - 2;
    const Gen t1 = g.add("t1");
    const Gen t2 = g.add("t2");
    auto s = add_run(g, "s", 1, n - 1);
    const Gen u1 = g.add("u1");
    const Gen u2 = g.add("u2");
    g.edge(t1, s.front());
    g.edge(t2, s.front());
    g.path(s);
    g.edge(s.back(), u1);
    g.edge(s.back(), u2);
    break;
  }
  case Family::F4tilde: {
    auto s = add_run(g, "s", 0, 4);
    g.path(s);
    g.edge(s[2], s[3], 4);
    break;
  }
  case Family::G2tilde: {
    // s is a simple branch hanging off t; the bond 6 joins t and u.
    const Gen s = g.add("s");
    const Gen t = g.add("t");
    const Gen u = g.add("u");
    g.edge(s, t);
    g.edge(t, u, 6);
    break;
  }
  case Family::E6tilde: {
    // Three arms of length two around the centre t.
    const Gen t = g.add("t");
    for (int j = 1; j <= 3; ++j) {
      const Gen a = g.add("s" + std::to_string(j));
      const Gen b = g.add("s" + std::to_string(j) + "'");
      g.edge(t, a);
      g.edge(a, b);
    }
    break;
  }
  case Family::E7tilde: {
    // Arms of length 1, 3, 3 around the centre t.
    const Gen t = g.add("t");
    const Gen s0 = g.add("s0");
    g.edge(t, s0);
    for (int j = 1; j <= 2; ++j) {
      const std::string base = "s" + std::to_string(j);
      const Gen a = g.add(base);
      const Gen b = g.add(base + "'");
      const Gen c = g.add(base + "''");
      g.path({t, a, b, c});
    }
    break;
  }
  case Family::E8tilde: {
    auto s = add_type_e(g, 8);
    const Gen s0 = g.add("s0");
    g.edge(s.back(), s0);
    break;
  }
  }
  return std::move(g).finish(spec);
}

CoxeterGraph linear_graph(const std::vector<Bond>& edge_bonds) {
  GraphBuilder g;
  auto v = add_run(g, "v", 0, static_cast<int>(edge_bonds.size()));
  for (std::size_t i = 0; i < edge_bonds.size(); ++i)
    g.edge(v[i], v[i + 1], edge_bonds[i]);
  return std::move(g).finish(std::nullopt);
}

} // namespace fcx
