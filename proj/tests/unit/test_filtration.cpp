#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "syzlab/filtration.hpp"

using namespace syzlab;

namespace {

struct Setup {
  RingPtr R = make_ring(101, {"x", "y"});
  Polynomial P(const char* s) const { return parse_polynomial(R, s); }
  Submodule m() const { return make_ideal(R, {P("x"), P("y")}); }
  QuotientPtr hs = make_quotient(R, {P("x^2")});
};

/// h(M) - h(M/xM) + (1-z)^r b(z) computed here from the evidence fields.
std::vector<std::int64_t> residual(const SuperficialEvidence& ev, int r) {
  std::vector<std::int64_t> b = ev.b;
  for (int k = 0; k < r; ++k) {
    std::vector<std::int64_t> next(b.size() + 1, 0);
    for (std::size_t i = 0; i < b.size(); ++i) {
      next[i] += b[i];
      next[i + 1] -= b[i];
    }
    b = next;
  }
  std::size_t len = std::max({ev.h_module.size(), ev.h_cut.size(), b.size()});
  std::vector<std::int64_t> out(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    if (i < ev.h_module.size()) out[i] += ev.h_module[i];
    if (i < ev.h_cut.size()) out[i] -= ev.h_cut[i];
    if (i < b.size()) out[i] += b[i];
  }
  return out;
}

void check_evidence(const SuperficialReport& rep) {
  REQUIRE(rep.accepted);
  for (std::size_t level = 0; level < rep.evidence.size(); ++level) {
    // The identity is taken in the dimension of the module being cut.
    int r = rep.dimension - static_cast<int>(level);
    for (const auto& ev : rep.evidence[level]) {
      CHECK(ev.identity_holds);
      for (auto v : residual(ev, r)) CHECK(v == 0);
      CHECK(ev.coefficients_agree);
      for (int i = 0; i < r && i < static_cast<int>(ev.e_cut.size()); ++i) CHECK(ev.e_module[i] == ev.e_cut[i]);
    }
  }
}

}  // namespace

TEST_CASE_FIXTURE(Setup, "superficial elements in dimension one") {
  auto A = PresentedModule::free(hs, {0});
  auto mx = PresentedModule::cyclic(hs, {P("x")});
  auto rep = pick_superficial(m(), {A, mx}, 1, 0);
  check_evidence(rep);
  CHECK(rep.evidence[0][0].reduction_number == 1);
  auto bad = check_superficial(m(), {A}, 1, {P("x")});
  CHECK_FALSE(bad.accepted);
  CHECK_FALSE(bad.rejections.empty());
  CHECK(assoc_graded_depth(mx, m(), rep, 1) == 1);
  // Same seed, same choice.
  auto again = pick_superficial(m(), {A, mx}, 1, 0);
  CHECK(again.sequence == rep.sequence);
  for (std::uint64_t seed = 1; seed < 6; ++seed) check_evidence(pick_superficial(m(), {A, mx}, 1, seed));
}

TEST_CASE_FIXTURE(Setup, "b-vectors") {
  auto A = PresentedModule::free(hs, {0});
  // y is a nonzerodivisor on G_m(A) = k[x,y]/(x^2).
  auto b = b_vector(A, m(), P("y"), 5);
  for (auto v : b) CHECK(v == 0);
  auto q = PresentedModule::free(make_quotient(R, {}), {0});
  auto quartic = make_ideal(R, {P("x^4"), P("x^3*y"), P("x*y^3"), P("y^4")});
  auto rq = pick_superficial(quartic, {q}, 2, 0);
  check_evidence(rq);
  CHECK(rq.evidence[0][0].b[1] == 1);
  CHECK(assoc_graded_depth(q, quartic, rq, 2) == 0);
}

TEST_CASE_FIXTURE(Setup, "Ratliff-Rush deviations") {
  auto q = PresentedModule::free(make_quotient(R, {}), {0});
  auto quartic = make_ideal(R, {P("x^4"), P("x^3*y"), P("x*y^3"), P("y^4")});
  CHECK(rr_deviation_table(q, quartic, 4) == std::vector<std::int64_t>{1, 0, 0, 0});
  CHECK(rr_deviation_table(q, m(), 4) == std::vector<std::int64_t>{0, 0, 0, 0});
  auto rm = pick_superficial(m(), {q}, 2, 0);
  CHECK(assoc_graded_depth(q, m(), rm, 2) == 2);
}

TEST_CASE_FIXTURE(Setup, "depth tables over syzygies and the xi heuristic") {
  auto mx = PresentedModule::cyclic(hs, {P("x")});
  auto res = minimal_free_resolution(mx, 8);
  std::vector<PresentedModule> syz;
  for (int j = 0; j < 8; ++j) syz.push_back(syzygy(res, j));
  auto t = depth_table(syz, m(), 1, 0);
  CHECK(t.depth == std::vector<int>(8, 1));
  auto q = PresentedModule::free(make_quotient(R, {}), {0});
  auto quartic = make_ideal(R, {P("x^4"), P("x^3*y"), P("x*y^3"), P("y^4")});
  auto xi = xi_estimate(q, quartic, 3, 0);
  CHECK(xi.depths == std::vector<int>{0, 2, 2});
  CHECK(xi.stabilized);
  CHECK(xi.value == 2);
  CHECK(colength(ideal_power(m(), 3)) == 6);
  CHECK_THROWS_AS(colength(make_ideal(R, {P("x")})), NotPrimary);
}
