#include <doctest.h>

#include "generators.hpp"
#include "grado/crossed.hpp"
#include "grado/errors.hpp"
#include "support.hpp"

using namespace grado;
using support::vec;
using support::z;

namespace {

bool tpa_passes_all(const TwistedPartialAction& t) { return verify_tpa(t).ok(); }

}  // namespace

TEST_CASE("verify_tpa on bundled actions") {
  CHECK(tpa_passes_all(*support::fixture("pcp2").tpa));
  CHECK(tpa_passes_all(*support::fixture("swap-galois").tpa));
  CHECK(tpa_passes_all(*support::fixture("block-swap").tpa));
  CHECK(verify_tpa(*support::fixture("pcp2").tpa).instances > 0);
}

TEST_CASE("a corrupted twist is reported") {
  TwistedPartialAction t = *support::fixture("pcp2").tpa;
  const Field& f = t.base->field();
  t.omega[{z(1), z(1)}] = Twist{vec(f, {0, 0}), vec(f, {0, 0})};
  auto rep = verify_tpa(t);
  CHECK(!rep.ok());
  CHECK_THROWS_AS(build_crossed_product(t), ConstructionError);
}

TEST_CASE("PCP2 crossed product") {
  const CrossedProduct& cp = *support::fixture("pcp2").crossed;
  const GradedRing& a = *cp.ring;
  CHECK(a.algebra().dim() == 3);
  CHECK(a.component_dim(z(0)) == 2);
  CHECK(a.component_dim(z(1)) == 1);
  // Oracle: B_1 = k (e1 delta_1), so B_1 B_1 is spanned by (e1 delta_1)^2 = e1 delta_0.
  const Field& f = a.field();
  const Vec d1 = cp.embed(z(1), vec(f, {1, 0}));
  const Vec sq = a.algebra().mul(d1, d1);
  CHECK(sq == cp.embed(z(0), vec(f, {1, 0})));
  auto det = detect_epsilon(a);
  REQUIRE(det.ok);
  CHECK(det.system.at(a, z(1)) == sq);
  CHECK(det.system.at(a, z(0)) == a.algebra().one());
  const EpsilonSystem canon = cp.canonical_epsilon();
  for (const auto& g : a.support()) CHECK(canon.at(a, g) == det.system.at(a, g));
}

TEST_CASE("global swap gives a strongly graded ring") {
  const GradedRing& a = *support::fixture("swap-galois").graded;
  CHECK(a.algebra().dim() == 4);
  CHECK(is_strongly_graded(a));
  auto det = detect_epsilon(a);
  REQUIRE(det.ok);
  for (const auto& g : a.support()) CHECK(det.system.at(a, g) == a.algebra().one());
  // The crossed product of k x k by the swap is M_2(k): its centre is one-dimensional.
  CHECK(center(a.algebra()).dim() == 1);
}

TEST_CASE("trivial group returns the base") {
  const Field f = Field::prime(3);
  auto base = std::make_shared<const Algebra>(diagonal_algebra(f, 2));
  auto cp = build_crossed_product(trivial_global_action(base, Group::trivial()));
  CHECK(cp.ring->algebra().dim() == 2);
  CHECK(cp.ring->algebra().structure_constants() == base->structure_constants());
}

TEST_CASE("extraction from a group algebra is global with trivial twist") {
  const GradedRing& a = support::ring("ga-z2-gf3");
  auto det = detect_epsilon(a);
  std::map<GroupElem, EpsilonInvertibleWitness> ws;
  for (const auto& g : a.support()) {
    auto w = test_candidate(a, det.system, g, a.algebra().basis(static_cast<std::size_t>(g.v[0])));
    REQUIRE(w);
    ws.emplace(g, *w);
  }
  auto ex = extract_tpa(a, det.system, ws);
  for (const auto& g : a.support()) CHECK(ex.tpa.idem_at(g) == ex.tpa.base->one());
  const Vec one = ex.tpa.base->one();
  for (const auto& g : a.support()) {
    CHECK(ex.tpa.apply_alpha(g, one) == one);
    for (const auto& h : a.support()) CHECK(ex.tpa.omega_at(g, h).value == one);
  }
  CHECK(verify_tpa(ex.tpa).ok());
}

TEST_CASE("extraction from ENDV is a partial action on the diagonal") {
  const GradedRing& a = support::ring("endv");
  auto det = detect_epsilon(a);
  auto cd = is_epsilon_crossed_product(a, det.system);
  REQUIRE(cd.decision == Decision::yes);
  auto ex = extract_tpa(a, det.system, cd.witnesses);
  CHECK(ex.tpa.base->dim() == 3);
  CHECK(ex.tpa.base->is_commutative());
  std::vector<GroupElem> degs;
  for (long long k = -2; k <= 2; ++k) degs.push_back(z(k));
  CHECK(verify_tpa(ex.tpa, degs).ok());
}

namespace {

/// Columns of iso map products to products and degrees to degrees.
bool is_graded_algebra_iso(const GradedRing& a, const GradedRing& b, const Matrix& iso) {
  if (!invertible(iso)) return false;
  const Algebra& x = a.algebra();
  const Algebra& y = b.algebra();
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (!b.is_homogeneous(iso.col(i), a.degrees()[i])) return false;
    for (std::size_t j = 0; j < x.dim(); ++j)
      if (iso * x.structure(i, j) != y.mul(iso.col(i), iso.col(j))) return false;
  }
  return iso * x.one() == y.one();
}

}  // namespace

TEST_CASE("PCP2 round trip recovers a graded-isomorphic ring") {
  const CrossedProduct& cp = *support::fixture("pcp2").crossed;
  const GradedRing& a = *cp.ring;
  const EpsilonSystem eps = cp.canonical_epsilon();
  std::map<GroupElem, EpsilonInvertibleWitness> ws;
  for (const auto& g : a.support()) {
    auto w = test_candidate(a, eps, g, cp.embed(g, cp.source.idem_at(g)));
    REQUIRE(w);
    ws.emplace(g, *w);
  }
  auto ex = extract_tpa(a, eps, ws);
  CHECK(verify_tpa(ex.tpa).ok());
  CHECK(is_graded_algebra_iso(a, *ex.crossed.ring, ex.iso));
}

TEST_CASE("property: random restricted permutation actions satisfy the axioms and round-trip") {
  std::mt19937_64 rng(314);
  for (int trial = 0; trial < 25; ++trial) {
    const Field f = Field::prime(trial % 2 ? 3 : 2);
    const std::size_t m = 2 + rng() % 2, n = 1 + rng() % 4;
    auto sigma = gen::permutation_of_order_dividing(rng, n, m);
    std::vector<bool> in_u(n);
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) any |= (in_u[i] = rng() % 3 != 0);
    if (!any) continue;
    auto t = gen::restricted_permutation_action(f, n, m, sigma, in_u);
    REQUIRE(verify_tpa(t).ok());
    auto cp = build_crossed_product(t);
    auto det = detect_epsilon(*cp.ring);
    REQUIRE(det.ok);
    const EpsilonSystem canon = cp.canonical_epsilon();
    for (const auto& g : cp.ring->support()) CHECK(det.system.at(*cp.ring, g) == canon.at(*cp.ring, g));
    auto cd = is_epsilon_crossed_product(*cp.ring, det.system);
    REQUIRE(cd.decision == Decision::yes);
    auto ex = extract_tpa(*cp.ring, det.system, cd.witnesses);
    CHECK(is_graded_algebra_iso(*cp.ring, *ex.crossed.ring, ex.iso));
  }
}
