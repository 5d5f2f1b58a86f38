#include "support/common.hpp"

#include <random>

using namespace mikado;
using mikado::testing::L;

namespace {

Laurent random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 6);
  std::uniform_int_distribution<int> expd(-8, 8);
  std::uniform_int_distribution<int> coeffd(-9, 9);
  Laurent p;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i)
    p += Laurent::monomial(coeffd(rng), expd(rng));
  return p;
}

}  // namespace

TEST_SUITE_BEGIN("laurent");

TEST_CASE("constants and monomials") {
  CHECK(Laurent().is_zero());
  CHECK(Laurent::constant(0).is_zero());
  CHECK(Laurent::constant(3).coeff(0) == 3);
  CHECK(Laurent::monomial(2, -5).coeff(-5) == 2);
  CHECK(Laurent::monomial(0, 4).is_zero());
  CHECK(Laurent::power(3) == Laurent::monomial(1, 3));
  CHECK(Laurent::power(0) == Laurent::constant(1));
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937 rng(20260816);
  Laurent one = Laurent::constant(1);
  for (int trial = 0; trial < 200; ++trial) {
    Laurent a = random_laurent(rng), b = random_laurent(rng),
            c = random_laurent(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + Laurent() == a);
    CHECK(a * one == a);
    CHECK((a - a).is_zero());
    CHECK(-(-a) == a);
  }
}

TEST_CASE("bar is a ring involution") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    Laurent a = random_laurent(rng), b = random_laurent(rng);
    CHECK(a.bar().bar() == a);
    CHECK((a + b).bar() == a.bar() + b.bar());
    CHECK((a * b).bar() == a.bar() * b.bar());
  }
  CHECK(Laurent::power(3).bar() == Laurent::power(-3));
}

TEST_CASE("evaluation at v=1 is a ring map") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Laurent a = random_laurent(rng), b = random_laurent(rng);
    CHECK((a * b).eval_at_one() == a.eval_at_one() * b.eval_at_one());
    CHECK((a + b).eval_at_one() == a.eval_at_one() + b.eval_at_one());
    CHECK(a.bar().eval_at_one() == a.eval_at_one());
  }
}

TEST_CASE("shifts and monomial division") {
  Laurent p = L("v^-1 + 2v + v^3");
  CHECK(p.shifted(2) == L("v + 2v^3 + v^5"));
  CHECK(p.shifted(0) == p);
  CHECK(p.shifted(3).shifted(-3) == p);
  Laurent q = L("2v^2 + 4v^4");
  CHECK(q.div_by_monomial(2, 2) == L("1 + 2v^2"));
  CHECK_THROWS_AS(q.div_by_monomial(3, 2), std::domain_error);
  CHECK(q.div_by_monomial(2, 3) == L("v^-1 + 2v"));
}

TEST_CASE("positivity, parity, truncation") {
  CHECK(L("v^-2 + 2 + v^2").is_nonnegative());
  CHECK_FALSE(L("v - v^3").is_nonnegative());
  CHECK(Laurent().is_nonnegative());

  auto [even, odd] = L("v^-2 + 2 + v^2").exponent_parities();
  CHECK(even);
  CHECK_FALSE(odd);
  CHECK(L("v^-2 + 2 + v^2").pure_parity(0));
  CHECK_FALSE(L("v^-2 + 2 + v^2").pure_parity(1));
  CHECK(L("v^-1 + v^3").pure_parity(1));
  CHECK(Laurent().pure_parity(0));
  CHECK(Laurent().pure_parity(1));

  Laurent p = L("v^-3 + 5 + 2v + v^4");
  CHECK(p.truncate_from(1) == L("2v + v^4"));
  CHECK(p.truncate_from(0) == L("5 + 2v + v^4"));
  CHECK(p.truncate_from(5).is_zero());
  CHECK(p.truncate_from(-3) == p);
}

TEST_CASE("bounds and coefficient access") {
  Laurent p = L("v^-2 + 2 + v^2");
  CHECK(p.min_exp() == -2);
  CHECK(p.max_exp() == 2);
  CHECK(p.coeff(0) == 2);
  CHECK(p.coeff(1) == 0);
  CHECK(p.size() == 3);
}

TEST_CASE("string rendering") {
  CHECK(Laurent().str() == "0");
  CHECK(Laurent::constant(1).str() == "1");
  CHECK(Laurent::constant(-2).str() == "-2");
  CHECK(Laurent::power(1).str() == "v");
  CHECK(Laurent::power(-1).str() == "v^-1");
  CHECK(Laurent::monomial(-1, 1).str() == "-v");
  CHECK(Laurent::monomial(3, 2).str() == "3*v^2");
  CHECK(L("v^-2 + 2 + v^2").str() == "v^-2 + 2 + v^2");
  CHECK((L("v") - L("v^3")).str() == "v - v^3");
  CHECK((-Laurent::constant(4) + Laurent::power(2)).str() == "-4 + v^2");
}

TEST_CASE("parse round-trip") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    Laurent p = random_laurent(rng);
    CHECK(Laurent::parse(p.str()) == p);
  }
  CHECK(L(" v^-1+ v ") == L("v^-1 + v"));
  CHECK(L("0").is_zero());
  CHECK(L("-v^-2 - 3") == -L("v^-2 + 3"));
}

TEST_SUITE_END();
