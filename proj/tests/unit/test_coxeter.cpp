#include <doctest.h>

#include "fcx/coxeter.hpp"
#include "fcx/errors.hpp"

using namespace fcx;

TEST_CASE("type strings round trip") {
  for (const char* s : {"A:3", "B:4", "D:5", "I2:7", "H3", "H4", "F4", "E6", "E7", "E8", "Atilde:4",
                        "Btilde:3", "Ctilde:2", "Dtilde:5", "F4tilde", "G2tilde", "E6tilde",
                        "E7tilde", "E8tilde"})
    CHECK(TypeSpec::parse(s).to_string() == s);
  CHECK(TypeSpec::parse("E8:8") == TypeSpec::parse("E8"));
  CHECK_THROWS_AS(TypeSpec::parse("Q:3"), ParseError);
  CHECK_THROWS_AS(TypeSpec::parse("A:"), ParseError);
  CHECK_THROWS_AS(build_graph(TypeSpec::parse("A:1")), RankOutOfRange);
  CHECK_THROWS_AS(build_graph(TypeSpec::parse("D:2")), RankOutOfRange);
  CHECK_THROWS_AS(build_graph(TypeSpec::parse("Dtilde:3")), RankOutOfRange);
  CHECK_THROWS_AS(build_graph(TypeSpec::parse("E6:7")), RankOutOfRange);
}

TEST_CASE("small graphs") {
  const auto a3 = build_graph(TypeSpec::parse("A:3"));
  REQUIRE(a3.rank() == 2);
  CHECK(a3.bond(a3.index_of("s1"), a3.index_of("s2")) == 3);

  const auto i23 = build_graph(TypeSpec::parse("I2:3"));
  REQUIRE(i23.rank() == 2);
  CHECK(i23.bond(0, 1) == 3);

  const auto c2 = build_graph(TypeSpec::parse("Ctilde:2"));
  REQUIRE(c2.rank() == 3);
  const Gen t = c2.index_of("t"), s1 = c2.index_of("s1"), u = c2.index_of("u");
  CHECK(t == 0);
  CHECK(s1 == 1);
  CHECK(u == 2);
  CHECK(c2.bond(t, s1) == 4);
  CHECK(c2.bond(s1, u) == 4);
  CHECK(c2.bond(t, u) == 2);

  const auto a4 = build_graph(TypeSpec::parse("A:4"));
  CHECK(a4.bond(a4.index_of("s1"), a4.index_of("s3")) == 2);

  // The bond 6 sits between the middle node and an end node.
  const auto g2 = build_graph(TypeSpec::parse("G2tilde"));
  CHECK(g2.bond(g2.index_of("t"), g2.index_of("u")) == 6);
  CHECK(g2.bond(g2.index_of("s"), g2.index_of("t")) == 3);
  CHECK(g2.bond(g2.index_of("s"), g2.index_of("u")) == 2);
}

TEST_CASE("generator counts and symmetry") {
  struct Case {
    const char* family;
    int lo;
    int rank_offset; // rank = param + offset
  };
  for (Case c : {Case{"A", 2, -1}, Case{"B", 2, 0}, Case{"D", 3, 0}, Case{"Atilde", 3, 0},
                 Case{"Ctilde", 2, 1}, Case{"Btilde", 3, 1}, Case{"Dtilde", 4, 1}}) {
    for (int p = c.lo; p <= 12; ++p) {
      const auto g = build_graph(TypeSpec::parse(std::string(c.family) + ":" + std::to_string(p)));
      CAPTURE(g.type()->to_string());
      CHECK(static_cast<int>(g.rank()) == p + c.rank_offset);
      for (Gen s = 0; s < g.rank(); ++s)
        for (Gen u = 0; u < g.rank(); ++u)
          CHECK(g.bond(s, u) == g.bond(u, s));
    }
  }
  const std::pair<const char*, std::size_t> fixed[] = {
      {"H3", 3}, {"H4", 4}, {"F4", 4}, {"E6", 6}, {"E7", 7}, {"E8", 8},
      {"F4tilde", 5}, {"G2tilde", 3}, {"E6tilde", 7}, {"E7tilde", 8}, {"E8tilde", 9}};
  for (auto [name, rank] : fixed)
    CHECK(build_graph(TypeSpec::parse(name)).rank() == rank);
}

TEST_CASE("custom graphs accept infinite bonds") {
  CoxeterGraph g({"a", "b"}, {0, kInfinity, kInfinity, 0});
  CHECK(g.bond(0, 1) == kInfinity);
  CHECK(g.adjacent(0, 1));
  CHECK_FALSE(g.type().has_value());
}

TEST_CASE("words") {
  const auto c2 = build_graph(TypeSpec::parse("Ctilde:2"));
  const Word w = c2.parse_word("t s1 u s1");
  CHECK(w == Word{0, 1, 2, 1});
  CHECK(c2.format_word(w) == "t s1 u s1");
  CHECK(c2.parse_word("").empty());
  CHECK_THROWS_AS(c2.parse_word("t s9"), ParseError);
}

TEST_CASE("linear graphs") {
  const auto g = linear_graph({3, 4, 3});
  REQUIRE(g.rank() == 4);
  CHECK(g.name(0) == "v0");
  CHECK(g.bond(1, 2) == 4);
  CHECK(g.bond(0, 2) == 2);
}
