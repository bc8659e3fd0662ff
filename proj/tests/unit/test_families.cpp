#include <doctest.h>

#include <map>
#include <set>

#include "fcx/errors.hpp"
#include "fcx/families.hpp"
#include "fcx/oracle.hpp"
#include "fcx/qseries.hpp"

using namespace fcx;

namespace {

CoxeterGraph graph(const std::string& spec) { return build_graph(TypeSpec::parse(spec)); }

Heap heap(const CoxeterGraph& g, const char* word) { return Heap::of_word(g, g.parse_word(word)); }

FamilyLabel label(const CoxeterGraph& g, const char* word) { return classify_ctilde(g, heap(g, word)); }

QPoly mono(int qmax, int d, std::int64_t c = 1) { return QPoly::monomial(qmax, d, c); }

// c q^a / (1 - q^b)
QPoly geometric(int qmax, std::int64_t c, int a, int b) { return geom_div(mono(qmax, a, c), mono(qmax, b)); }

using Counts = std::map<FamilyKind, QPoly>;

Counts family_counts(const CoxeterGraph& g, int qmax, bool fork) {
  Counts out;
  for (auto k : {FamilyKind::ALT, FamilyKind::ZZ, FamilyKind::LP, FamilyKind::RP, FamilyKind::LRP})
    out[k] = QPoly(qmax);
  for (const auto& e : fc_elements(g, qmax)) {
    const auto l = fork ? classify_bd(g, e.heap).label : classify_ctilde(g, e.heap);
    out[l.kind].add_term(e.length, 1);
  }
  return out;
}

} // namespace

TEST_CASE("labels and json") {
  CHECK(FamilyLabel{FamilyKind::LRP, 1, 3}.to_string() == "LRP(1,3)");
  CHECK(FamilyLabel{FamilyKind::LP, 2, 0}.to_string() == "LP(2)");
  CHECK(FamilyLabel{FamilyKind::RP, 0, 1}.to_string() == "RP(1)");
  CHECK(to_json(FamilyLabel{FamilyKind::LRP, 2, 4}).dump() == R"({"family":"LRP","j":2,"k":4})");
  CHECK(to_json(FamilyLabel{FamilyKind::ZZ}).dump() == R"({"family":"ZZ"})");
}

TEST_CASE("hand-checked heaps") {
  const auto c2 = graph("Ctilde:2");
  CHECK(label(c2, "").kind == FamilyKind::ALT);
  CHECK(label(c2, "t s1 u s1 t s1 u").kind == FamilyKind::ZZ);
  CHECK(label(c2, "s1 t s1 u s1").kind == FamilyKind::ZZ);

  const auto c3 = graph("Ctilde:3");
  CHECK(label(c3, "s2 s1 t s1 s2") == FamilyLabel{FamilyKind::LP, 2, 0});
  CHECK(label(c3, "s1 s2 u s2 s1") == FamilyLabel{FamilyKind::RP, 0, 1});
  CHECK(label(c3, "s1 t s1 s2 u s2") == FamilyLabel{FamilyKind::LRP, 1, 2});

  CHECK_THROWS_AS(classify_ctilde(c2, heap(c2, "t s1 t s1")), NotFC);
  CHECK_THROWS_AS(classify_ctilde(graph("Btilde:3"), heap(graph("Btilde:3"), "t1")), std::invalid_argument);
}

TEST_CASE("zigzag shapes with two equal path elements are peaks") {
  // Factors of the zigzag word with no s_i repeated three times fall into
  // the peak families instead.
  const auto c2 = graph("Ctilde:2");
  CHECK(label(c2, "t s1 u s1 t") == FamilyLabel{FamilyKind::RP, 0, 1});
  CHECK(label(c2, "u s1 t s1 u") == FamilyLabel{FamilyKind::LP, 1, 0});
  CHECK(label(c2, "s1 t s1 u") == FamilyLabel{FamilyKind::LP, 1, 0});
  CHECK(label(c2, "s1 u s1 t") == FamilyLabel{FamilyKind::RP, 0, 1});
  const auto c3 = graph("Ctilde:3");
  CHECK(label(c3, "t s1 s2 u s2 s1 t") == FamilyLabel{FamilyKind::RP, 0, 1});
  CHECK(label(c3, "u s2 s1 t s1 s2 u") == FamilyLabel{FamilyKind::LP, 2, 0});
  CHECK(label(c3, "s1 t s1 s2 u s2 s1").kind == FamilyKind::ZZ);
  CHECK(label(c3, "s2 s1 t s1 s2 u s2 s1 t").kind == FamilyKind::ZZ);
}

TEST_CASE("extremal peak heaps") {
  // The chain t s1 ... u ... s1 t and its mirror are the largest heaps whose
  // peak reaches the far end.
  for (int n = 2; n <= 5; ++n) {
    const auto g = graph("Ctilde:" + std::to_string(n));
    Word outer{0}, mirror{static_cast<Gen>(n)};
    for (int i = 1; i <= n; ++i)
      outer.push_back(static_cast<Gen>(i));
    for (int i = n - 1; i >= 0; --i)
      outer.push_back(static_cast<Gen>(i));
    for (int i = n - 1; i >= 0; --i)
      mirror.push_back(static_cast<Gen>(i));
    for (int i = 1; i <= n; ++i)
      mirror.push_back(static_cast<Gen>(i));
    const Heap a = Heap::of_word(g, outer);
    const Heap b = Heap::of_word(g, mirror);
    CHECK(classify_ctilde(g, a) == FamilyLabel{FamilyKind::RP, 0, 1});
    CHECK(classify_ctilde(g, b) == FamilyLabel{FamilyKind::LP, n - 1, 0});
    CHECK(delta_t(g, a).size() == 9);
    CHECK(delta_tu(g, b).size() == 9);
    CHECK(delta_t(g, b).size() == 1);
  }
}

TEST_CASE("fork substitutions") {
  const auto c2 = graph("Ctilde:2");
  CHECK(delta_t(c2, heap(c2, "s1 u")).size() == 1);
  CHECK(is_isomorphic(delta_t(c2, heap(c2, "s1 u"))[0], heap(graph("Btilde:3"), "s1 u")));
  CHECK(delta_t(c2, heap(c2, "t s1")).size() == 3);
  CHECK(delta_t(c2, heap(c2, "t s1 u s1 t s1 u s1 t")).size() == 9);
  CHECK(delta_tu(c2, heap(c2, "s1")).size() == 1);
  CHECK(delta_tu(c2, heap(c2, "t u s1 t u")).size() == 4);
  CHECK(delta_tu(c2, heap(c2, "t s1 u s1 t s1 u")).size() == 9);
  for (const auto& h : delta_t(c2, heap(c2, "t s1")))
    CHECK(h.size() <= 3);
}

TEST_CASE("fork heaps collapse to their affine C heap") {
  const auto b3 = graph("Btilde:3");
  const auto r = classify_bd(b3, heap(b3, "s1 u s1"));
  CHECK(r.label == FamilyLabel{FamilyKind::RP, 0, 1, Decoration::Btilde});
  CHECK(r.underlying.witness() == graph("Ctilde:2").parse_word("s1 u s1"));

  const auto c2 = graph("Ctilde:2");
  for (const auto& e : fc_elements(c2, 10)) {
    if (classify_ctilde(c2, e.heap).kind != FamilyKind::ALT)
      continue;
    for (const auto& img : delta_t(c2, e.heap))
      CHECK(is_isomorphic(classify_bd(b3, img).underlying, e.heap));
  }

  const auto d4 = graph("Dtilde:4");
  const auto images = delta_tu(c2, heap(c2, "t u s1 t u"));
  REQUIRE(images.size() == 4);
  for (const auto& img : images) {
    const auto l = classify_bd(d4, img).label;
    CHECK(l.kind == FamilyKind::ALT);
    CHECK(l.decoration == Decoration::Dtilde);
  }
  CHECK_THROWS_AS(classify_bd(c2, heap(c2, "t")), std::invalid_argument);
}

TEST_CASE("every heap has exactly one family and lemmas hold") {
  for (int n = 2; n <= 4; ++n) {
    const auto g = graph("Ctilde:" + std::to_string(n));
    for (const auto& e : fc_elements(g, 14)) {
      const auto m = matching_families(g, e.heap);
      if (m.size() != 1)
        CHECK_MESSAGE(false, g.format_word(e.word) << " matches " << m.size() << " families");
      CHECK(assert_structure_lemmas(g, e.heap));
    }
  }
  const auto c3 = graph("Ctilde:3");
  for (const auto& e : fc_elements(c3, 16))
    CHECK(assert_structure_lemmas(c3, e.heap));
  const auto b3 = graph("Btilde:3");
  for (const auto& e : fc_elements(b3, 16))
    CHECK(assert_structure_lemmas(b3, e.heap));
  const auto d5 = graph("Dtilde:5");
  for (const auto& e : fc_elements(d5, 12))
    CHECK(assert_structure_lemmas(d5, e.heap));
}

TEST_CASE("substitution images rebuild the fork types") {
  const int max_len = 13;
  for (int n = 2; n <= 3; ++n) {
    const auto c = graph("Ctilde:" + std::to_string(n));
    const auto cs = fc_elements(c, max_len);
    for (int fork = 0; fork < 2; ++fork) {
      const auto g = graph((fork ? "Dtilde:" : "Btilde:") + std::to_string(n + 1 + fork));
      std::multiset<Word> images, expected;
      for (const auto& e : cs)
        for (const auto& h : fork ? delta_tu(c, e.heap) : delta_t(c, e.heap))
          if (static_cast<int>(h.size()) <= max_len)
            images.insert(canonical_word(h));
      for (const auto& e : fc_elements(g, max_len))
        expected.insert(e.word);
      CHECK(images == expected);
    }
  }
}

TEST_CASE("family counts match the series components") {
  const int qmax = 14;
  for (int n = 2; n <= 4; ++n) {
    CAPTURE(n);
    const auto s = solve_all(n, qmax);
    const QPoly g_part = geom_div(mono(qmax, n + 1) * s.g_touch[n], mono(qmax, n + 1));

    const auto c = family_counts(graph("Ctilde:" + std::to_string(n)), qmax, false);
    CHECK(c.at(FamilyKind::ALT) == g_part + s.g_touch_star[n]);
    CHECK(c.at(FamilyKind::ZZ) == geometric(qmax, 2 * n, 2 * n + 2, 1) + mono(qmax, 2 * n + 1, 2 * n - 2));
    CHECK(c.at(FamilyKind::LP) == s.lp[n]);
    CHECK(c.at(FamilyKind::RP) == s.lp[n]);
    CHECK(c.at(FamilyKind::LRP) == s.lrp[n]);

    if (n > 3)
      continue;
    const auto b = family_counts(graph("Btilde:" + std::to_string(n + 1)), qmax, true);
    CHECK(b.at(FamilyKind::ALT) == g_part.scaled(2) + s.t[n]);
    CHECK(b.at(FamilyKind::ZZ) == geometric(qmax, 2 * n + 3, 2 * n + 4, 1) +
                                       geometric(qmax, 1, 2 * (2 * n + 1), 2 * n + 1) +
                                       mono(qmax, 2 * n + 3, 2 * n + 2) + mono(qmax, 2 * n + 2, 2 * n - 2));
    CHECK(b.at(FamilyKind::LP) + b.at(FamilyKind::LRP) == mono(qmax, 1) * (s.lp[n] + s.lrp[n]));
    CHECK(b.at(FamilyKind::RP) == s.rp_delta[n]);

    const auto d = family_counts(graph("Dtilde:" + std::to_string(n + 2)), qmax, true);
    CHECK(d.at(FamilyKind::ALT) == g_part.scaled(4) + s.u[n]);
    CHECK(d.at(FamilyKind::ZZ) == geometric(qmax, 2 * n + 6, 2 * n + 5, 1) +
                                       geometric(qmax, 2, 3 * (n + 1), n + 1) +
                                       mono(qmax, 2 * n + 4, 2 * n + 4) + mono(qmax, 2 * n + 3, 2 * n - 2));
    CHECK(d.at(FamilyKind::LRP) == mono(qmax, 2) * s.lrp[n]);
    CHECK(d.at(FamilyKind::LP) + d.at(FamilyKind::RP) == mono(qmax, 1, 2) * s.rp_delta[n]);
  }
}
