#include <doctest.h>

#include <set>

#include "fcx/errors.hpp"
#include "fcx/oracle.hpp"
#include "fcx/qseries.hpp"
#include "fcx/walk.hpp"
#include "oracles.hpp"

using namespace fcx;
using fcx::testing::brute_walks;
using fcx::testing::End;

namespace {

CoxeterGraph path_graph(int n) { return linear_graph(std::vector<Bond>(static_cast<std::size_t>(n), 3)); }

} // namespace

TEST_CASE("height statistics") {
  CHECK(ht(Walk::parse("@0 U L D")) == 2);
  CHECK(ht_prime(Walk::parse("@0 U L D")) == 2);
  CHECK(ht(Walk{3, {}}) == 3);
  CHECK(ht_prime(Walk::parse("@1 L")) == 1);
  CHECK(ht_prime(Walk::parse("@1 R R R R R")) == 5);
  CHECK_THROWS_AS(Walk::parse("@0 D").heights(), InvalidWalk);
  CHECK_THROWS_AS(Walk::parse("0 U"), ParseError);
  CHECK_THROWS_AS(Walk::parse("@0 X"), ParseError);
  CHECK(Walk::parse("@2 U D L R").to_string() == "@2 U D L R");
  CHECK(is_uniform_level(Walk::parse("@1 R R R")));
  CHECK_FALSE(is_uniform_level(Walk::parse("@0 R R R")));
  CHECK_FALSE(is_uniform_level(Walk::parse("@1 R L R")));
}

TEST_CASE("encoding of a linear heap") {
  const auto g = linear_graph(std::vector<Bond>(8, 3));
  const Heap h = Heap::of_word(g, g.parse_word("v8 v5 v1 v0 v7 v8 v6 v2 v7 v1 v0 v8"));
  REQUIRE(is_alternating(g, h));
  const Walk w = phi(g, h);
  CHECK(w.heights() == std::vector<int>{2, 2, 1, 0, 0, 1, 1, 2, 3});
  CHECK(ht(w) == 12);
  CHECK(is_isomorphic(phi_inv(g, w), h));

  CHECK(phi(path_graph(3), Heap::of_word(path_graph(3), {})) == Walk::parse("@0 L L L"));
  const auto g2 = path_graph(2);
  CHECK(phi(g2, Heap::of_word(g2, {0})) == Walk::parse("@1 D L"));
  CHECK(phi_inv(g2, Walk::parse("@0 L L")).empty());
  // One v1 element; v0 and v2 stay empty.
  CHECK(phi_inv(g2, Walk::parse("@0 U D")).witness() == Word{1});
  CHECK_THROWS_AS(phi_inv(g2, Walk::parse("@0 R L")), StarViolation);
}

TEST_CASE("encoding on the affine A cycle") {
  const auto c4 = build_graph(TypeSpec::parse("Atilde:4"));
  CHECK(phi_prime(c4, Heap::of_word(c4, {})) == Walk::parse("@0 L L L L"));
  CHECK(phi_prime(c4, Heap::of_word(c4, {0})) == Walk::parse("@1 D L L U"));
  CHECK(phi_prime_inv(c4, Walk::parse("@1 D L L U")).witness() == Word{0});
  CHECK(phi_prime_inv(c4, Walk::parse("@0 L L L L")).empty());
  const auto c3 = build_graph(TypeSpec::parse("Atilde:3"));
  CHECK_THROWS_AS(phi_prime_inv(c3, Walk::parse("@1 R R R")), ForbiddenEWalk);
  CHECK_THROWS_AS(phi_prime_inv(c3, Walk::parse("@1 L L L")), ForbiddenEWalk);
}

TEST_CASE("linear encoding round trips") {
  const int max_weight = 12;
  for (int n = 0; n <= 6; ++n) {
    CAPTURE(n);
    const auto g = path_graph(n);
    std::set<Word> heaps;
    std::size_t count = 0;
    for_each_walk(WalkFamily::G(n).starred(), WalkStat::Ht, max_weight, [&](const Walk& w, int wt) {
      const Heap h = phi_inv(g, w);
      ++count;
      if (static_cast<int>(h.size()) != wt || !is_alternating(g, h) || !(phi(g, h) == w))
        CHECK_MESSAGE(false, "round trip fails on " << w.to_string());
      heaps.insert(canonical_word(h));
    });
    CHECK(heaps.size() == count);
    CHECK(static_cast<std::int64_t>(count) ==
          brute_walks(n, max_weight, End::Any, false, true, false, WalkStat::Ht).at_one());

    // From the heap side: every alternating FC heap over the path.
    for (const auto& e : fc_elements(g, max_weight)) {
      if (!is_alternating(g, e.heap))
        continue;
      const Walk w = phi(g, e.heap);
      if (ht(w) != e.length || !is_isomorphic(phi_inv(g, w), e.heap))
        CHECK_MESSAGE(false, "heap round trip fails on " << g.format_word(e.word));
    }
  }
}

TEST_CASE("cyclic encoding round trips") {
  const int max_weight = 12;
  for (int n = 3; n <= 6; ++n) {
    CAPTURE(n);
    const auto g = build_graph(TypeSpec{Family::Atilde, n});
    std::vector<std::uint64_t> by_weight(max_weight + 1, 0);
    for_each_walk(WalkFamily::O(n).starred(), WalkStat::HtPrime, max_weight,
                  [&](const Walk& w, int wt) {
                    if (is_uniform_level(w))
                      return;
                    const Heap h = phi_prime_inv(g, w);
                    ++by_weight[static_cast<std::size_t>(wt)];
                    if (static_cast<int>(h.size()) != wt || !(phi_prime(g, h) == w))
                      CHECK_MESSAGE(false, "round trip fails on " << w.to_string());
                  });
    CHECK(enumerate_fc(g, max_weight).counts == by_weight);
    for (const auto& e : fc_elements(g, max_weight)) {
      const Walk w = phi_prime(g, e.heap);
      if (ht_prime(w) != e.length || !is_isomorphic(phi_prime_inv(g, w), e.heap))
        CHECK_MESSAGE(false, "heap round trip fails on " << g.format_word(e.word));
    }
  }
}

TEST_CASE("motzkin to dyck") {
  CHECK(to_dyck(Walk::parse("@0 U L R D")) ==
        std::vector<Step>{Step::U, Step::U, Step::U, Step::D, Step::D, Step::U, Step::D, Step::D});
  CHECK(is_dyck({Step::U, Step::D}));
  CHECK_FALSE(is_dyck({Step::D, Step::U}));
  CHECK_FALSE(is_dyck({Step::U, Step::U, Step::D}));
  for (int n = 0; n <= 8; ++n) {
    std::set<std::vector<Step>> images;
    std::size_t walks = 0;
    for_each_walk(WalkFamily::M(n).starred(), WalkStat::Ht, 64, [&](const Walk& w, int) {
      const auto d = to_dyck(w);
      CHECK(is_dyck(d));
      CHECK(d.size() == 2 * w.length());
      images.insert(d);
      ++walks;
    });
    // Injective, and onto since there are Catalan(n) Dyck walks of length 2n.
    CHECK(images.size() == walks);
    CHECK(walks == fcx::testing::catalan(n));
  }
}

TEST_CASE("touching walk totals") {
  for (int n = 0; n <= 8; ++n) {
    // Touching walks of length n never climb above n, so weights stay below n(n+1).
    const int cap = n * (n + 1) + 1;
    const auto o = enumerate_walks(WalkFamily::O(n).touching(), WalkStat::HtPrime, cap);
    const auto g = enumerate_walks(WalkFamily::G(n).touching(), WalkStat::Ht, cap);
    CHECK(static_cast<std::uint64_t>(o.at_one()) == fcx::testing::binomial(2 * n, n));
    CHECK(g.at_one() == std::int64_t{1} << (2 * n));
  }
  CHECK(enumerate_walks(WalkFamily::G(3).touching(), WalkStat::Ht, 40).at_one() == 64);
}

TEST_CASE("walk enumeration agrees with exhaustive lists and series") {
  const int qmax = 14;
  const auto ms = solve_M_star(8, 20);
  for (int n = 0; n <= 8; ++n)
    CHECK(enumerate_walks(WalkFamily::M(n).starred(), WalkStat::Ht, 20) == ms[n]);
  CHECK(enumerate_walks(WalkFamily::M(3).starred(), WalkStat::Ht, 4) ==
        QPoly(4, {1, 2, 2, 0, 0}));
  for (int n = 0; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(enumerate_walks(WalkFamily::G(n), WalkStat::Ht, qmax) ==
          brute_walks(n, qmax, End::Any, false, false, false, WalkStat::Ht));
    CHECK(enumerate_walks(WalkFamily::Q(n).starred(), WalkStat::Ht, qmax) ==
          brute_walks(n, qmax, End::Zero, false, true, false, WalkStat::Ht));
    CHECK(enumerate_walks(WalkFamily::O(n).starred().touching(), WalkStat::HtPrime, qmax) ==
          brute_walks(n, qmax, End::Closed, false, true, true, WalkStat::HtPrime));
    CHECK(enumerate_walks(WalkFamily::O(n), WalkStat::Ht, qmax) ==
          brute_walks(n, qmax, End::Closed, false, false, false, WalkStat::Ht));
  }
  // Walks from a fixed start height.
  QPoly from2(qmax);
  for (const Walk& w : fcx::testing::all_walks(3, 2))
    if (w.start == 2 && w.heights().back() == 0 && ht(w) <= qmax)
      from2.add_term(static_cast<int>(ht(w)), 1);
  CHECK(enumerate_walks(WalkFamily::M(3, 2), WalkStat::Ht, qmax) == from2);
}
