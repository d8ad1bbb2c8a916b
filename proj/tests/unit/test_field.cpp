// Arithmetic core: fields, monomials, polynomials, free modules.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "syzlab/groebner.hpp"

using namespace syzlab;

namespace {

Polynomial random_poly(const RingPtr& R, std::mt19937_64& rng, int max_deg, int terms) {
  std::vector<Term> t;
  for (int k = 0; k < terms; ++k) {
    std::vector<int> e(R->nvars());
    int budget = static_cast<int>(rng() % (max_deg + 1));
    for (auto& x : e) {
      x = budget ? static_cast<int>(rng() % (budget + 1)) : 0;
      budget -= x;
    }
    t.push_back({Monomial{std::span<const int>(e)}, static_cast<std::uint32_t>(rng() % R->modulus())});
  }
  return Polynomial::from_terms(R, t);
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  PrimeField f(101);
  CHECK(f.mul(f.inv(7), 7) == 1);
  CHECK(f.balanced(100) == -1);
  CHECK(f.reduce(-1) == 100);
  CHECK_THROWS_AS(PrimeField(100), Error);
  CHECK(is_prime(100003));
  CHECK_FALSE(is_prime(1));
  PrimeFieldElement a(3, 101), b(5, 7);
  CHECK_THROWS_AS(a + b, ModulusMismatch);
  CHECK((a * a.inverse()).value() == 1);
}

TEST_CASE("field axioms hold on random residues") {
  std::mt19937_64 rng(1);
  for (std::uint32_t p : {3u, 101u, 100003u}) {
    PrimeField f(p);
    for (int k = 0; k < 500; ++k) {
      std::uint32_t a = rng() % p, b = rng() % p, c = rng() % p;
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(f.sub(a, b), b) == a);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a) CHECK(f.mul(a, f.inv(a)) == 1);
    }
  }
}

TEST_CASE("monomial operations and orders") {
  Monomial a{2, 1, 0}, b{1, 3, 0};
  CHECK(a.lcm(b) == Monomial{2, 3, 0});
  CHECK((a * b).degree() == 7);
  CHECK(Monomial{1, 0, 0}.divides(a));
  CHECK(Monomial{0, 0, 4}.pure_power_variable() == 2);
  CHECK(Monomial{1, 1, 0}.pure_power_variable() == -1);
  MonomialOrder grevlex, glex(OrderKind::DegLex);
  // x*z^2 vs y^3 in three variables: degrevlex prefers y^3 (smaller z-power).
  CHECK(grevlex.compare(Monomial{0, 3, 0}, Monomial{1, 0, 2}) == std::strong_ordering::greater);
  CHECK(glex.compare(Monomial{0, 3, 0}, Monomial{1, 0, 2}) == std::strong_ordering::less);
  CHECK(grevlex.compare(Monomial{0, 0, 3}, Monomial{1, 0, 0}) == std::strong_ordering::greater);
  Monomial two{1, 0}, three{1, 0, 0};
  CHECK_THROWS_AS(two.divides(three), VariableCountMismatch);
}

TEST_CASE("polynomial ring axioms on random inputs") {
  auto R = make_ring(101, {"x", "y", "z"});
  std::mt19937_64 rng(7);
  for (int k = 0; k < 60; ++k) {
    Polynomial a = random_poly(R, rng, 3, 4), b = random_poly(R, rng, 3, 4), c = random_poly(R, rng, 2, 3);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    CHECK(parse_polynomial(R, a.to_string()) == a);
  }
}

TEST_CASE("polynomial parsing and printing") {
  auto R = make_ring(101, {"x", "y"});
  Polynomial p = parse_polynomial(R, "3*x^2*y - y^3 + 205");
  CHECK(p.to_string() == "3*x^2*y - y^3 + 3");
  CHECK_FALSE(p.is_homogeneous());
  CHECK(parse_polynomial(R, "x*y - y*x").is_zero());
  CHECK(parse_polynomial(R, "x^2 + 2*x*y + y^2") == parse_polynomial(R, "x+y") * parse_polynomial(R, "x+y"));
  CHECK_THROWS_AS(parse_polynomial(R, "x + w"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(R, "x +"), ParseError);
  auto S = make_ring(101, {"x", "y", "z"});
  CHECK_THROWS_AS(p + parse_polynomial(S, "x"), VariableCountMismatch);
}

TEST_CASE("free module elements") {
  auto R = make_ring(101, {"x", "y"});
  auto F = make_free_module(R, {0, 1});
  auto x = parse_polynomial(R, "x"), y = parse_polynomial(R, "y");
  FreeElement e = FreeElement::from_components(F, {x * x, y});
  CHECK(e.degree() == 2);
  CHECK(e.to_string() == "[x^2, y]");
  CHECK((e - e).is_zero());
  CHECK_THROWS_AS(Submodule(F, {FreeElement::from_components(F, {x, x})}), NotHomogeneous);
  auto G = make_free_module(R, {1, 1});
  CHECK_THROWS_AS(e + FreeElement::from_components(G, {x * x, y}), AmbientMismatch);
  ModuleOrder pot{ModuleOrderKind::PositionOverTerm};
  auto P = make_free_module(R, {0, 1}, pot);
  FreeElement moved = FreeElement::rehome(P, e);
  CHECK(moved.component(0) == x * x);
  CHECK(moved.terms().front().position == 0);
  CHECK(e.terms().front().position == 0);
}
