#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "syzlab/resolution.hpp"

using namespace syzlab;

namespace {

struct Rings {
  RingPtr R2 = make_ring(101, {"x", "y"});
  RingPtr R3 = make_ring(101, {"x", "y", "z"});
  Polynomial p2(const char* s) const { return parse_polynomial(R2, s); }
  Polynomial p3(const char* s) const { return parse_polynomial(R3, s); }
  Submodule m2() const { return make_ideal(R2, {p2("x"), p2("y")}); }
};

std::vector<std::size_t> head(const std::vector<std::size_t>& v, std::size_t n) { return {v.begin(), v.begin() + n}; }

/// d_i(d_{i+1}(e)) reduces to zero modulo (f) for every column; entries lie in m.
void check_complex(const ResolutionData& res) {
  const QuotientRing& A = *res.ring;
  for (std::size_t i = 0; i + 1 < res.differentials.size(); ++i) {
    const auto& lower = res.differentials[i];
    for (const auto& col : res.differentials[i + 1]) {
      FreeElement image(res.free_modules[i]);
      for (std::size_t k = 0; k < col.module()->rank(); ++k) image = image + lower[k].times(col.component(k));
      for (std::size_t r = 0; r < image.module()->rank(); ++r) CHECK(A.reduce(image.component(r)).is_zero());
      for (std::size_t r = 0; r < col.module()->rank(); ++r) {
        Polynomial e = A.reduce(col.component(r));
        CHECK((e.is_zero() || e.degree() > 0));
      }
    }
  }
}

}  // namespace

TEST_CASE_FIXTURE(Rings, "Betti numbers of the residue field over complete intersections") {
  auto ci = make_quotient(R2, {p2("x^2"), p2("y^2")});
  auto res = minimal_free_resolution(PresentedModule::residue_field(ci), 8);
  CHECK(head(res.betti(), 9) == std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7, 8, 9});
  check_complex(res);
  CHECK(complexity_estimate(BettiTable{minimal_free_resolution(PresentedModule::residue_field(ci), 12).betti()}) == 2);

  auto hs = make_quotient(R2, {p2("x^2")});
  auto rk = minimal_free_resolution(PresentedModule::residue_field(hs), 12);
  CHECK(head(rk.betti(), 6) == std::vector<std::size_t>{1, 2, 2, 2, 2, 2});
  CHECK(complexity_estimate(BettiTable{rk.betti()}) == 1);
  auto rx = minimal_free_resolution(PresentedModule::cyclic(hs, {p2("x")}), 12);
  for (auto b : rx.betti()) CHECK(b == 1);
  check_complex(rx);
}

TEST_CASE_FIXTURE(Rings, "Poincare series of three quadrics") {
  // k over F[x,y,z]/(x^2,y^2,z^2): (1+t)^3 / (1-t^2)^3 = 1/(1-t)^3.
  auto A = make_quotient(R3, {p3("x^2"), p3("y^2"), p3("z^2")});
  auto res = minimal_free_resolution(PresentedModule::residue_field(A), 5);
  CHECK(head(res.betti(), 6) == std::vector<std::size_t>{1, 3, 6, 10, 15, 21});
  check_complex(res);
}

TEST_CASE_FIXTURE(Rings, "random modules over a hypersurface give complexes") {
  std::mt19937_64 rng(3);
  auto A = make_quotient(R2, {p2("x^2 + x*y")});
  for (int trial = 0; trial < 8; ++trial) {
    auto F = make_free_module(R2, {0, 0});
    std::vector<FreeElement> cols;
    for (int k = 0; k < 2; ++k) {
      std::vector<Polynomial> c;
      for (int r = 0; r < 2; ++r)
        c.push_back(Polynomial::variable(R2, 0).scaled(rng() % 101) + Polynomial::variable(R2, 1).scaled(rng() % 101));
      cols.push_back(FreeElement::from_components(F, c));
    }
    auto res = minimal_free_resolution(PresentedModule(A, {0, 0}, cols), 6);
    check_complex(res);
    // Over a hypersurface the resolution of an MCM tail is 2-periodic in rank.
    auto b = res.betti();
    CHECK(b[5] == b[6]);
  }
}

TEST_CASE_FIXTURE(Rings, "Tor and Ext against the residue field read off Betti numbers") {
  auto ci = make_quotient(R2, {p2("x^2"), p2("y^2")});
  for (auto m : {PresentedModule::residue_field(ci), PresentedModule::cyclic(ci, {p2("x")}),
                 PresentedModule::cyclic(ci, {p2("x*y")})}) {
    auto res = minimal_free_resolution(m, 6);
    auto tor = tor_lengths(res, 5, m2(), 1);
    auto ext = ext_lengths(res, 5, m2(), 1);
    for (int i = 0; i <= 5; ++i) {
      CHECK(tor.total[i] == res.betti()[i]);
      CHECK(ext[i] == res.betti()[i]);
    }
  }
  auto hs = make_quotient(R2, {p2("x^2")});
  auto res = minimal_free_resolution(PresentedModule::cyclic(hs, {p2("x")}), 6);
  auto tor = tor_lengths(res, 5, m2(), 3);
  for (int i = 1; i <= 5; ++i) CHECK(tor.total[i] == 1);
  CHECK(tor.total[0] == 3);
}

TEST_CASE_FIXTURE(Rings, "matrix factorizations and Eisenbud operators") {
  auto hs = make_quotient(R2, {p2("x^2")});
  for (auto m : {PresentedModule::residue_field(hs), PresentedModule::cyclic(hs, {p2("x")})}) {
    auto mf = matrix_factorization(m);
    REQUIRE_FALSE(mf.d.empty());
    std::size_t n = mf.d.size();
    PolyMatrix fid(n, std::vector<Polynomial>(n, Polynomial(R2)));
    for (std::size_t i = 0; i < n; ++i) fid[i][i] = p2("x^2");
    CHECK(multiply(mf.d, mf.e, R2) == fid);
    CHECK(multiply(mf.e, mf.d, R2) == fid);
    auto res = minimal_free_resolution(m, 8);
    CHECK(operators_commute_with_differential(res, eisenbud_operators(res)));
  }
  auto ci = make_quotient(R2, {p2("x^2"), p2("y^2")});
  auto res = minimal_free_resolution(PresentedModule::residue_field(ci), 7);
  auto ops = eisenbud_operators(res);
  CHECK(ops.operators.size() == 2);
  CHECK(operators_commute_with_differential(res, ops));
  CHECK(operators_commute_on_residue_field(res, ops));
  CHECK(matrix_factorization(PresentedModule::free(hs, {0})).d.empty());
}

TEST_CASE_FIXTURE(Rings, "quotient ring validation") {
  CHECK_THROWS_AS(make_quotient(R2, {p2("x^2"), p2("x*y")}), NotRegularSequence);
  CHECK_THROWS_AS(make_quotient(R2, {p2("x^2 + y")}), NotHomogeneous);
  auto A = make_quotient(R2, {p2("x^2")});
  CHECK(A->reduce(p2("x^3 + y")) == p2("y"));
  auto m = PresentedModule::cyclic(A, {p2("x"), p2("x")});
  CHECK(minimal_presentation(m).columns().size() == 1);
  CHECK(syzygy(PresentedModule::residue_field(A), 1).rank() == 2);
}
