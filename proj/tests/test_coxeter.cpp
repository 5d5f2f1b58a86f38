#include "support/common.hpp"

#include <algorithm>
#include <set>

using namespace mikado;
using namespace mikado::testing;

namespace {

// Symmetric difference of two sorted root lists.
std::vector<Root> sym_diff(std::vector<Root> a, std::vector<Root> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<Root> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("coxeter");

TEST_CASE("system validation accepts the classical rank 2 labels") {
  for (int m : {2, 3, 4, 6}) {
    CoxeterSystem sys = make_system("X", {"s", "t"}, {{1, m}, {m, 1}});
    CHECK(sys.rank == 2);
    CHECK(sys.cartan[0][0] == 2);
    CHECK(sys.cartan[0][1] * sys.cartan[1][0] ==
          (m == 2 ? 0 : m == 3 ? 1 : m == 4 ? 2 : 3));
  }
  CoxeterSystem inf = make_system("X", {"s", "t"}, {{1, 0}, {0, 1}});
  CHECK(inf.cartan[0][1] * inf.cartan[1][0] == 4);
}

TEST_CASE("system validation rejects bad input with a message naming it") {
  CHECK_THROWS_WITH_AS(
      make_system("X", {"s", "t"}, {{1, 5}, {5, 1}}),
      doctest::Contains("label 5"), ConfigError);
  CHECK_THROWS_AS(make_system("X", {"s", "t"}, {{1, 3}, {4, 1}}), ConfigError);
  CHECK_THROWS_AS(make_system("X", {"s", "s"}, {{1, 3}, {3, 1}}), ConfigError);
  CHECK_THROWS_AS(make_system("X", {"s", "e"}, {{1, 3}, {3, 1}}), ConfigError);
  CHECK_THROWS_AS(make_system("X", {"s", "t u"}, {{1, 3}, {3, 1}}),
                  ConfigError);
  CHECK_THROWS_AS(make_system("X", {"s", "t"}, {{2, 3}, {3, 1}}), ConfigError);
  // Cartan product must match the label: -1 * -1 = 1 but m=4 needs 2.
  CHECK_THROWS_AS(make_system("X", {"s", "t"}, {{1, 4}, {4, 1}},
                              {{{2, -1}, {-1, 2}}}),
                  ConfigError);
  // Off-diagonal entries must vanish together.
  CHECK_THROWS_AS(make_system("X", {"s", "t"}, {{1, 2}, {2, 1}},
                              {{{2, -1}, {0, 2}}}),
                  ConfigError);
}

TEST_CASE("simple reflections act on roots per the Cartan matrix") {
  CoxeterSystem d = dihedral_inf();
  Element s = simple_reflection(d, 0), t = simple_reflection(d, 1);
  CHECK(s.apply({1, 0}) == Root{-1, 0});
  CHECK(s.apply({0, 1}) == Root{2, 1});
  CHECK(t.apply({1, 0}) == Root{1, 2});

  CoxeterSystem b = b2();
  Element bs = simple_reflection(b, 0), bt = simple_reflection(b, 1);
  CHECK(bs.apply({0, 1}) == Root{1, 1});
  CHECK(bt.apply({1, 0}) == Root{1, 2});
  // alpha_s + alpha_t is fixed by t in this realization.
  CHECK(bt.apply({1, 1}) == Root{1, 1});
}

TEST_CASE("involution, order, and the braid relations hold as matrices") {
  for (const CoxeterSystem& sys : {a2(), b2(), g2(), a3()}) {
    for (int i = 0; i < sys.rank; ++i) {
      Element s = simple_reflection(sys, i);
      CHECK((s * s).is_identity());
      for (int j = i + 1; j < sys.rank; ++j) {
        Element t = simple_reflection(sys, j);
        Element st = s * t;
        Element p = Element::identity(sys.rank);
        int m = sys.coxeter[i][j];
        for (int k = 0; k < m; ++k) p = p * st;
        CHECK(p.is_identity());
      }
    }
  }
}

TEST_CASE("length and inverse") {
  CoxeterSystem sys = a3();
  for (const Element& w : ball(sys, 4)) {
    Element winv = inverse(sys, w);
    CHECK((w * winv).is_identity());
    CHECK(length(sys, w) == length(sys, winv));
    CHECK(length(sys, w) == (int)reduced_word(sys, w).size());
  }
  Element u = el(sys, "s1 s2"), v = el(sys, "s3 s2");
  CHECK(inverse(sys, u * v) == inverse(sys, v) * inverse(sys, u));
}

TEST_CASE("descents") {
  CoxeterSystem sys = a2();
  Element st = el(sys, "s t");
  CHECK(right_descents(sys, st) == std::vector<int>{1});
  CHECK(has_right_descent(sys, st, 1));
  CHECK_FALSE(has_right_descent(sys, st, 0));
  CHECK(right_descents(sys, el(sys, "s t s")) == std::vector<int>{0, 1});
  CHECK(right_descents(sys, Element::identity(sys.rank)).empty());
}

TEST_CASE("canonical reduced words are lex-minimal") {
  CoxeterSystem sys = a3();
  // s1 and s3 commute; the canonical word picks the smaller index first.
  Element w = from_word(sys, {2, 0});
  CHECK(reduced_word(sys, w) == std::vector<int>{0, 2});
  auto words = all_reduced_words(sys, w);
  CHECK(words == std::vector<std::vector<int>>{{0, 2}, {2, 0}});

  for (const Element& x : ball(sys, 5)) {
    auto all = all_reduced_words(sys, x);
    CHECK(!all.empty());
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(all.front() == reduced_word(sys, x));
    for (const auto& word : all) {
      CHECK((int)word.size() == length(sys, x));
      CHECK(from_word(sys, word) == x);
    }
  }
}

TEST_CASE("left inversion sets") {
  CoxeterSystem d = dihedral_inf();
  CHECK(left_inversion_set(d, Element::identity(2)).empty());
  CHECK(left_inversion_set(d, el(d, "s")) == std::vector<Root>{{1, 0}});
  auto nst = left_inversion_set(d, el(d, "s t"));
  std::sort(nst.begin(), nst.end());
  CHECK(nst == std::vector<Root>{{1, 0}, {2, 1}});

  CoxeterSystem b = b2();
  auto nw0 = left_inversion_set(b, el(b, "s t s t"));
  std::sort(nw0.begin(), nw0.end());
  CHECK(nw0 == std::vector<Root>{{0, 1}, {1, 0}, {1, 1}, {1, 2}});
}

TEST_CASE("inversion sets satisfy the cocycle rule") {
  for (const CoxeterSystem& sys : {a2(), b2(), a3(), universal3()}) {
    auto b = ball(sys, 3);
    for (size_t i = 0; i < b.size(); i += 3) {
      for (size_t j = 0; j < b.size(); j += 2) {
        const Element& x = b[i];
        const Element& y = b[j];
        std::vector<Root> xny;
        for (const Root& beta : left_inversion_set(sys, y))
          xny.push_back(normalize_root(x.apply(beta)));
        auto lhs = left_inversion_set(sys, x * y);
        std::sort(lhs.begin(), lhs.end());
        CHECK(lhs == sym_diff(left_inversion_set(sys, x), xny));
      }
    }
  }
}

TEST_CASE("roots and reflections correspond bijectively") {
  for (const CoxeterSystem& sys : {b2(), a3(), universal3()}) {
    auto roots = positive_roots_on_ball(sys, 5);
    std::set<Element> seen;
    for (const Root& beta : roots) {
      Element t = reflection_of_root(sys, beta);
      CHECK((t * t).is_identity());
      Root neg = beta;
      for (auto& c : neg) c = -c;
      CHECK(t.apply(beta) == neg);
      auto back = root_of_reflection(sys, t);
      CHECK(back.has_value());
      CHECK(*back == beta);
      CHECK(length(sys, t) % 2 == 1);
      CHECK(seen.insert(t).second);
    }
  }
  CoxeterSystem sys = a2();
  CHECK(reflection_length_of_root(sys, {1, 0}) == 1);
  CHECK(reflection_length_of_root(sys, {1, 1}) == 3);
  CHECK_THROWS_AS(reflection_of_root(sys, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(reflection_of_root(sys, {0, 0}), std::invalid_argument);
}

TEST_CASE("bruhat order") {
  CoxeterSystem sys = a2();
  Element e = Element::identity(2), s = el(sys, "s"), t = el(sys, "t"),
          st = el(sys, "s t"), ts = el(sys, "t s"), w0 = el(sys, "s t s");
  for (const Element& w : {e, s, t, st, ts, w0}) {
    CHECK(bruhat_leq(sys, e, w));
    CHECK(bruhat_leq(sys, w, w0));
    CHECK(bruhat_leq(sys, w, w));
  }
  CHECK(bruhat_leq(sys, s, st));
  CHECK(bruhat_leq(sys, t, st));
  CHECK_FALSE(bruhat_leq(sys, st, ts));
  CHECK_FALSE(bruhat_leq(sys, ts, st));
  CHECK_FALSE(bruhat_leq(sys, w0, st));

  // Antisymmetry and compatibility with length on a ball of A3.
  CoxeterSystem s3 = a3();
  auto b = ball(s3, 4);
  for (const Element& u : b)
    for (const Element& v : b) {
      if (bruhat_leq(s3, u, v) && bruhat_leq(s3, v, u)) CHECK(u == v);
      if (bruhat_leq(s3, u, v) && !(u == v))
        CHECK(length(s3, u) < length(s3, v));
    }
}

TEST_CASE("balls have the expected sizes and ordering") {
  CoxeterSystem d = dihedral_inf();
  for (int r = 0; r <= 6; ++r) CHECK(ball(d, r).size() == size_t(2 * r + 1));

  CoxeterSystem u = universal3();
  CHECK(ball(u, 2).size() == 10);
  CHECK(ball(u, 6).size() == 190);

  CHECK(ball(a2(), 3).size() == 6);
  CHECK(ball(a2(), 10).size() == 6);
  CHECK(ball(a3(), 6).size() == 24);
  CHECK(ball(g2(), 6).size() == 12);

  auto b = ball(a3(), 3);
  for (size_t i = 1; i < b.size(); ++i) {
    int li = length(a3(), b[i - 1]), lj = length(a3(), b[i]);
    CHECK(li <= lj);
    if (li == lj)
      CHECK(reduced_word(a3(), b[i - 1]) < reduced_word(a3(), b[i]));
  }
}

TEST_CASE("positive roots on balls") {
  CoxeterSystem b = b2();
  auto roots = positive_roots_on_ball(b, 4);
  std::sort(roots.begin(), roots.end());
  CHECK(roots == std::vector<Root>{{0, 1}, {1, 0}, {1, 1}, {1, 2}});
  // The dihedral root system grows linearly with the radius.
  CoxeterSystem d = dihedral_inf();
  CHECK(positive_roots_on_ball(d, 5).size() == 6);
}

TEST_CASE("word parsing and formatting") {
  CoxeterSystem sys = a3();
  CHECK(format_element(sys, Element::identity(3)) == "e");
  CHECK(format_element(sys, el(sys, "s1 s2 s1")) == "s1 s2 s1");
  CHECK(el(sys, "e").is_identity());
  CHECK_THROWS_AS(parse_element(sys, "s1 s9"), std::invalid_argument);

  CoxeterSystem u = universal3();
  CHECK(el(u, "tsr") == el(u, "t s r"));
  CHECK(format_root({1, 0, 2}) == "(1,0,2)");
}

TEST_CASE("matrix entry overflow is detected") {
  CoxeterSystem u = universal3();
  std::vector<int> word;
  for (int i = 0; i < 80; ++i) {
    word.push_back(0);
    word.push_back(1);
    word.push_back(2);
  }
  CHECK_THROWS_AS(from_word(u, word), std::overflow_error);
}

TEST_SUITE_END();
