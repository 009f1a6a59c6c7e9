#include <doctest.h>

#include "generators.hpp"
#include "grado/center.hpp"
#include "grado/errors.hpp"
#include "support.hpp"

using namespace grado;
using support::vec;
using support::z;

namespace {

/// sum u_i r v_i computed in A and read back in R coordinates.
Vec gamma_oracle(const GradedRing& a, const EpsilonDecomposition& d, const Vec& r) {
  const Algebra& alg = a.algebra();
  const GroupElem one = a.group().identity();
  Vec out = zero_vec(a.field(), alg.dim());
  for (const auto& [u, v] : d.pairs) out = add(out, alg.mul(alg.mul(u, a.embed(one, r)), v));
  return a.restrict(one, out);
}

/// (gamma_g(r) a_g = a_g r) for r in Z(R) eps_{g^-1}, all basis vectors a_g.
bool eqga_oracle(const GradedRing& a, const PartialCenterAction& act) {
  const Algebra& alg = a.algebra();
  const GroupElem one = a.group().identity();
  for (const auto& g : a.support()) {
    const Subspace dom = act.domains.at(a.group().inverse(g));
    for (const auto& r : dom.basis()) {
      const Vec gr = act.maps.at(g) * r;
      for (auto i : a.indices(g))
        if (alg.mul(a.embed(one, gr), alg.basis(i)) != alg.mul(alg.basis(i), a.embed(one, r))) return false;
    }
  }
  return true;
}

GradedPtr trivially_graded(AlgebraPtr r) {
  std::vector<GroupElem> deg(r->dim(), z(0));
  return std::make_shared<const GradedRing>(r, Group::trivial(), deg);
}

}  // namespace

TEST_CASE("decompositions of eps_g") {
  const GradedRing& ga = support::ring("ga-z2-gf3");
  auto det = detect_epsilon(ga);
  auto d1 = decompose_epsilon(ga, det.system, z(0));
  REQUIRE(d1.pairs.size() == 1);
  CHECK(d1.pairs[0].first == ga.algebra().one());
  CHECK(d1.pairs[0].second == ga.algebra().one());

  const GradedRing& e = support::ring("endv");
  auto de = detect_epsilon(e);
  auto d2 = decompose_epsilon(e, de.system, z(2));
  CHECK(d2.pairs.size() == 1);
  for (const char* name : {"endv", "pcp2", "block-swap", "swap-galois"}) {
    const GradedRing& a = support::ring(name);
    auto det2 = detect_epsilon(a);
    for (const auto& g : a.support())
      for (std::uint64_t variant : {0, 1, 2}) {
        auto d = decompose_epsilon(a, det2.system, g, variant);
        Vec sum = zero_vec(a.field(), a.algebra().dim());
        for (const auto& [u, v] : d.pairs) {
          CHECK(a.is_homogeneous(u, g));
          CHECK(a.is_homogeneous(v, a.group().inverse(g)));
          sum = add(sum, a.algebra().mul(u, v));
        }
        CHECK(sum == det2.system.at(a, g));
      }
  }
}

TEST_CASE("gamma agrees with the direct sum u r v") {
  for (const char* name : {"endv", "pcp2", "block-swap", "swap-galois", "ga-z4-gf3"}) {
    INFO(name);
    const GradedRing& a = support::ring(name);
    auto det = detect_epsilon(a);
    auto act = gamma_action(a, det.system);
    for (const auto& g : a.support()) {
      auto d = decompose_epsilon(a, det.system, g);
      for (const auto& r : act.domains.at(a.group().inverse(g)).basis()) CHECK(act.maps.at(g) * r == gamma_oracle(a, d, r));
    }
    CHECK(eqga_holds(a, act));
    CHECK(eqga_oracle(a, act));
    CHECK(gamma_decomposition_independent(a, det.system));
  }
}

TEST_CASE("trivial action on a group algebra") {
  const GradedRing& a = support::ring("ga-z4-gf3");
  auto act = gamma_action(a, detect_epsilon(a).system);
  for (const auto& [g, m] : act.maps) CHECK(m == Matrix::identity(a.field(), 1));
  CHECK(invariants(act).dim() == 1);
}

TEST_CASE("PCP2: gamma is the action on D_1 and every element is invariant") {
  const GradedRing& a = support::ring("pcp2");
  const Field& f = a.field();
  auto act = gamma_action(a, detect_epsilon(a).system);
  CHECK(act.domains.at(z(1)) == Subspace(f, 2, {vec(f, {1, 0})}));
  CHECK(act.maps.at(z(1)) * vec(f, {1, 0}) == vec(f, {1, 0}));
  // Oracle: gamma_1 is the identity on k e1, so x gamma(eps) = x eps holds for every x.
  CHECK(invariants(act).dim() == 2);
}

TEST_CASE("swap: Galois coordinates and the Azumaya checks") {
  const GradedRing& a = support::ring("swap-galois");
  auto act = gamma_action(a, detect_epsilon(a).system);
  CHECK(invariants(act).dim() == 1);
  auto c = galois_check(*a.base(), act);
  REQUIRE(c);
  CHECK(verify_galois(*a.base(), act, *c));
  auto rep = azumaya_check(a, invariants(act));
  CHECK(rep.center_ok);
  CHECK(rep.separable);
  CHECK(rep.maximal_commutative);
  CHECK(rep.separability_idempotent.has_value());
}

TEST_CASE("trivial group: x = y = 1 and Azumaya with e = 1 (x) 1") {
  const Field f = Field::prime(3);
  auto r = std::make_shared<const Algebra>(diagonal_algebra(f, 1));
  auto a = trivially_graded(r);
  auto act = gamma_action(*a, detect_epsilon(*a).system);
  auto c = galois_check(*r, act);
  REQUIRE(c);
  REQUIRE(c->xs.size() == 1);
  CHECK(c->xs[0] == vec(f, {1}));
  auto rep = azumaya_check(*a, invariants(act));
  CHECK(rep.ok());
}

TEST_CASE("trivial action of Z2 on GF(2) is not Galois") {
  const GradedRing& a = support::ring("ga-z2-gf3");
  auto act = gamma_action(a, detect_epsilon(a).system);
  CHECK(!galois_check(*a.base(), act));
  const Field f = Field::prime(2);
  std::vector<std::vector<Vec>> mul(2, std::vector<Vec>(2));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) mul[i][j] = unit_vec(f, 2, (i + j) % 2);
  auto alg = std::make_shared<const Algebra>(f, std::vector<std::string>{"g0", "g1"}, mul, unit_vec(f, 2, 0));
  GradedRing g2(alg, Group::cyclic(2), {z(0), z(1)});
  CHECK(!galois_check(*g2.base(), gamma_action(g2, detect_epsilon(g2).system)));
}

TEST_CASE("galois_check needs a commutative base") {
  const Field f = Field::prime(2);
  auto r = std::make_shared<const Algebra>(full_matrix_algebra(f, 2));
  auto a = trivially_graded(r);
  auto act = gamma_action(*a, detect_epsilon(*a).system);
  CHECK_THROWS_AS(galois_check(*r, act), PreconditionError);
}

TEST_CASE("property: Galois implies Azumaya on random commutative partial actions") {
  std::mt19937_64 rng(77);
  std::size_t galois = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const Field f = Field::prime(trial % 2 ? 3 : 2);
    const std::size_t m = 2 + rng() % 2, n = 1 + rng() % 4;
    auto sigma = gen::permutation_of_order_dividing(rng, n, m);
    std::vector<bool> in_u(n);
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) any |= (in_u[i] = rng() % 3 != 0);
    if (!any) continue;
    auto cp = build_crossed_product(gen::restricted_permutation_action(f, n, m, sigma, in_u));
    const GradedRing& a = *cp.ring;
    auto act = gamma_action(a, detect_epsilon(a).system);
    auto c = galois_check(*a.base(), act);
    if (!c) continue;
    ++galois;
    CHECK(verify_galois(*a.base(), act, *c));
    CHECK(azumaya_check(a, invariants(act)).ok());
  }
  CHECK(galois > 0);
}
