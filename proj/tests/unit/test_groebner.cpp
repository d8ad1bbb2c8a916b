#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "syzlab/linalg.hpp"

using namespace syzlab;

namespace {

struct Fixture {
  RingPtr R = make_ring(101, {"x", "y", "z"});
  Polynomial P(const char* s) const { return parse_polynomial(R, s); }
  Submodule I(std::initializer_list<const char*> gens) const {
    std::vector<Polynomial> g;
    for (auto s : gens) g.push_back(P(s));
    return make_ideal(R, g);
  }
};

bool is_reduced(const GroebnerBasis& gb) {
  const auto& el = gb.elements();
  for (std::size_t i = 0; i < el.size(); ++i) {
    if (el[i].lead().coeff != 1) return false;
    for (std::size_t j = 0; j < el.size(); ++j) {
      if (i == j || el[i].lead().position != el[j].lead().position) continue;
      if (el[j].lead().monomial.divides(el[i].lead().monomial)) return false;
      for (const auto& t : el[i].terms())
        if (t.position == el[j].lead().position && el[j].lead().monomial.divides(t.monomial)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE_FIXTURE(Fixture, "small reduced bases") {
  auto gb = buchberger(I({"x+y", "x-y"}));
  REQUIRE(gb.size() == 2);
  CHECK(equal(Submodule(gb.ambient(), gb.elements()), I({"x", "y"})));
  CHECK(normal_form(FreeElement::from_components(ideal_ambient(R), {P("x^2+z^2")}), gb).component(0) == P("z^2"));
  auto tw = buchberger(I({"x^2", "x*y", "y^2"}));
  CHECK(tw.size() == 3);
  CHECK(syzygy_module(tw).size() == 2);
}

TEST_CASE_FIXTURE(Fixture, "random ideals: reduced, contain generators, match the linear-algebra oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Polynomial> gens;
    int count = 2 + static_cast<int>(rng() % 3);
    for (int k = 0; k < count; ++k) gens.push_back(oracle::random_form(R, 2 + static_cast<int>(rng() % 2), rng, 60));
    Submodule ideal = make_ideal(R, gens);
    if (ideal.is_zero()) continue;
    GroebnerBasis gb = buchberger(ideal);
    CHECK(is_reduced(gb));
    for (const auto& g : ideal.generators()) CHECK(gb.contains(g));
    // Normal forms are idempotent and a random combination lies in the ideal.
    auto F = ideal_ambient(R);
    FreeElement combo(F);
    for (const auto& g : ideal.generators())
      combo = combo + g.times(oracle::random_form(R, 4 - g.degree(), rng));
    CHECK(gb.contains(combo));
    FreeElement probe = FreeElement::from_components(F, {oracle::random_form(R, 4, rng)});
    FreeElement nf = gb.normal_form(probe);
    CHECK(gb.normal_form(nf) == nf);
    CHECK(gb.contains(probe - nf));
    // Standard monomials count the graded pieces of Q/I.
    std::vector<FreeElement> big = gb.elements();
    for (const auto& m : oracle::monomials_of_degree(3, 5)) big.push_back(FreeElement::from_components(F, {Polynomial::term(R, m)}));
    auto sb = StandardBasis::build(buchberger(Submodule(F, big)));
    REQUIRE(sb);
    auto dims = sb->graded_dimensions();
    for (int d = 0; d < 5; ++d) CHECK(dims[d] == oracle::quotient_dimension(R, gens, d));
  }
}

TEST_CASE_FIXTURE(Fixture, "syzygies map to zero and generator syzygies span the kernel") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Polynomial> gens = {oracle::random_form(R, 2, rng), oracle::random_form(R, 2, rng), oracle::random_form(R, 3, rng)};
    auto F = ideal_ambient(R);
    std::vector<FreeElement> g;
    std::vector<int> degs;
    for (const auto& p : gens) {
      g.push_back(FreeElement::from_components(F, {p}));
      degs.push_back(p.degree());
    }
    Submodule syz = generator_syzygies(F, g, degs);
    for (const auto& s : syz.generators()) {
      FreeElement image(F);
      for (std::size_t k = 0; k < g.size(); ++k) image = image + g[k].times(s.component(k));
      CHECK(image.is_zero());
    }
    // Koszul relations lie in the syzygy module.
    auto S = syz.ambient();
    FreeElement koszul = FreeElement::from_components(S, {gens[1], -gens[0], Polynomial(R)});
    CHECK(membership(koszul, syz));
    Lifter lifter(F, g, degs);
    FreeElement target = g[0].times(P("x")) + g[2].times(P("y+z"));
    auto c = lifter.lift(target);
    REQUIRE(c);
    FreeElement back(F);
    for (std::size_t k = 0; k < g.size(); ++k) back = back + g[k].times((*c)[k]);
    CHECK(back == target);
    CHECK_FALSE(lifter.lift(FreeElement::from_components(F, {P("1")})));
  }
}

TEST_CASE_FIXTURE(Fixture, "powers, colons, intersections") {
  auto q = buchberger(ideal_power(I({"x^2", "y"}), 3));
  CHECK(equal(Submodule(q.ambient(), q.elements()), I({"x^6", "x^4*y", "x^2*y^2", "y^3"})));
  CHECK(ideal_power(I({"x", "y"}), 0).size() == 1);
  auto A = I({"x", "y"}), B = I({"y", "z"});
  CHECK(equal(intersection(A, B), I({"y", "x*z"})));
  auto whole = whole_module(ideal_ambient(R));
  CHECK(equal(colon_by_element(I({"x^2", "x*y"}), P("x"), whole), I({"x", "y"})));
  CHECK(equal(colon_by_ideal(I({"x^2", "x*y", "x*z"}), A, whole), I({"x"})));
  CHECK(equal(module_scale(A, B), I({"x*y", "x*z", "y^2", "y*z"})));
}

TEST_CASE("reduction number and Ratliff-Rush closure") {
  auto R = make_ring(101, {"x", "y"});
  auto P = [&](const char* s) { return parse_polynomial(R, s); };
  auto I = make_ideal(R, {P("x^4"), P("x^3*y"), P("x*y^3"), P("y^4")});
  auto J = make_ideal(R, {P("x^4"), P("y^4")});
  auto whole = whole_module(ideal_ambient(R));
  CHECK(reduction_number(I, J, whole) == 2);
  CHECK(equal(ratliff_rush(I, 1, whole), I + make_ideal(R, {P("x^2*y^2")})));
  auto m = make_ideal(R, {P("x"), P("y")});
  CHECK(reduction_number(m, make_ideal(R, {P("x+3*y")}), whole, make_ideal(R, {P("x^3")})) == 2);
  CHECK_THROWS_AS(reduction_number(m, make_ideal(R, {P("x")}), whole), NotAReduction);
}

TEST_CASE("serialization round trip and corruption detection") {
  auto R = make_ring(101, {"x", "y"});
  auto I = make_ideal(R, {parse_polynomial(R, "x^2"), parse_polynomial(R, "x*y")});
  auto gb = buchberger(I);
  std::string s = serialize_basis(gb);
  auto back = deserialize_basis(I, s);
  CHECK(serialize_basis(back) == s);
  CHECK_THROWS_AS(deserialize_basis(I, "syzlab-gb v1\n1\n[x^2]\n"), Error);
  CHECK_THROWS_AS(deserialize_basis(I, "garbage"), Error);
  auto other = make_ideal(R, {parse_polynomial(R, "x^2"), parse_polynomial(R, "y^2")});
  CHECK(canonical_input(I) != canonical_input(other));
  CHECK(canonical_input(I) == canonical_input(make_ideal(R, {parse_polynomial(R, "x*y"), parse_polynomial(R, "3*x^2")})));
}

TEST_CASE("linear algebra helpers") {
  PrimeField f(101);
  CHECK(rank_mod_p({{1, 2}, {2, 4}}, f) == 1);
  CHECK(rank_mod_p({{1, 2, 0}, {0, 1, 1}, {1, 3, 1}}, f) == 2);
  auto R = make_ring(101, {"x", "y"});
  auto gb = buchberger(make_ideal(R, {parse_polynomial(R, "x^2"), parse_polynomial(R, "y^3")}));
  auto sb = StandardBasis::build(gb);
  REQUIRE(sb);
  CHECK(sb->size() == 6);
  CHECK_FALSE(StandardBasis::build(buchberger(make_ideal(R, {parse_polynomial(R, "x^2")}))));
}
