#include <doctest.h>

#include "grado/semiperfect.hpp"
#include "support.hpp"

using namespace grado;
using support::vec;
using support::z;

namespace {

/// For R a product of copies of k: the multiplicities dim e_j (A_g e) identify A_g e up to isomorphism.
std::vector<std::size_t> profile(const GradedRing& a, const GroupElem& g, const Vec& e_r) {
  const Algebra& alg = a.algebra();
  const GroupElem one = a.group().identity();
  const Vec e = a.embed(one, e_r);
  Subspace age(alg.field(), alg.dim());
  for (auto i : a.indices(g)) age = age.sum(Subspace(alg.field(), alg.dim(), {alg.mul(alg.basis(i), e)}));
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < a.base()->dim(); ++j) {
    const Vec ej = a.embed(one, unit_vec(a.field(), a.base()->dim(), j));
    Subspace s(alg.field(), alg.dim());
    for (const auto& v : age.basis()) s = s.sum(Subspace(alg.field(), alg.dim(), {alg.mul(ej, v)}));
    out.push_back(s.dim());
  }
  return out;
}

std::vector<GroupElem> gx_oracle(const GradedRing& a, const IdempotentFrame& fr, const std::vector<std::size_t>& x) {
  std::vector<GroupElem> out;
  for (const auto& g : a.group().elements()) {
    bool member = true;
    for (auto i : x) {
      bool found = false;
      for (auto j : x) found = found || profile(a, g, fr.e[i]) == profile(a, a.group().identity(), fr.e[j]);
      member = member && found;
    }
    if (member) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_CASE("frame validation") {
  const Instance& bs = support::fixture("block-swap");
  CHECK(validate_frame(*bs.frame).ok());
  IdempotentFrame bad = *bs.frame;
  bad.e.push_back(bad.e[0]);
  auto r = validate_frame(bad);
  CHECK(!r.ok());
  CHECK(!r.orthogonal);
  // TRI: the four coordinate ideals of GF(2)^4 are pairwise non-isomorphic, so the assignment to e1 fails.
  auto t = validate_frame(*support::fixture("tri").frame);
  CHECK(t.assignments == Decision::no);
  CHECK(t.idempotent);
  CHECK(t.completion_sums_to_one);
}

TEST_CASE("the three-way equivalence on frames") {
  const Instance& ga = support::fixture("ga-z2-gf3");
  auto det = detect_epsilon(*ga.graded);
  auto rep = lemma_ege_check(*ga.graded, det.system, *ga.frame, ga.graded->support());
  CHECK(rep.ok());
  for (const auto& e : rep.entries) {
    CHECK(e.eps_fixes);
    CHECK(e.ag_e);
    CHECK(e.agi_e);
  }
  // Outside the support all three are false.
  const Field f = Field::prime(3);
  auto d = std::make_shared<const Algebra>(diagonal_algebra(f, 2));
  auto a = std::make_shared<const GradedRing>(d, Group::cyclic(3), std::vector<GroupElem>{z(0), z(0)});
  IdempotentFrame fr{a->base(), {vec(f, {1, 0}), vec(f, {0, 1})}, {}, {}};
  auto out = lemma_ege_check(*a, detect_epsilon(*a).system, fr, {z(1), z(2)});
  CHECK(out.ok());
  for (const auto& e : out.entries) {
    CHECK(!e.eps_fixes);
    CHECK(!e.ag_e);
    CHECK(!e.agi_e);
  }
}

TEST_CASE("TRI: the candidate system against a direct oracle") {
  const Instance& inst = support::fixture("tri");
  const GradedRing& a = *inst.graded;
  const Algebra& alg = a.algebra();
  auto rep = lemma_ege_check(a, *inst.epsilon_candidate, *inst.frame, inst.test_set);
  for (const auto& e : rep.entries) {
    const bool is_e = e.idempotent[0] == 'E';
    const std::size_t k = std::stoul(e.idempotent.substr(2));
    const Vec idem = a.embed(z(0), is_e ? inst.frame->e[k] : inst.frame->completion[k]);
    INFO(e.idempotent << " at " << e.g.v[0]);
    const Vec eps = inst.epsilon_candidate->at(a, e.g);
    CHECK(e.eps_fixes == (alg.mul(eps, idem) == idem));
    bool nonzero = false;
    for (auto i : a.indices(e.g)) nonzero = nonzero || !is_zero(alg.mul(alg.basis(i), idem));
    CHECK(e.ag_e == nonzero);
  }
  // e2 = (block 0, component 1): eps_1 fixes it but A_1 e2 = 0 since I has no second component.
  CHECK(!rep.ok());
}

TEST_CASE("G_X against the multiplicity oracle") {
  const Instance& bs = support::fixture("block-swap");
  const GradedRing& a = *bs.graded;
  for (std::vector<std::size_t> x : {std::vector<std::size_t>{0, 1, 2}, {0, 1}, {2}, {0}}) {
    auto rep = compute_GX(a, *bs.frame, x, a.group().elements());
    CHECK(rep.undecided == 0);
    CHECK(rep.members == gx_oracle(a, *bs.frame, x));
    CHECK(rep.subgroup_ok);
  }
  CHECK(compute_GX(a, *bs.frame, {0, 1}, a.group().elements()).members.size() == 2);
  CHECK(compute_GX(a, *bs.frame, {2}, a.group().elements()).members == std::vector<GroupElem>{z(0)});

  const Instance& tri = support::fixture("tri");
  auto t = compute_GX(*tri.graded, *tri.frame, {0}, tri.graded->group().elements());
  CHECK(t.members == gx_oracle(*tri.graded, *tri.frame, {0}));
  // A_1 e1 = k y1 is isomorphic to R e3, not to R e1.
  CHECK(profile(*tri.graded, z(1), tri.frame->e[0]) == std::vector<std::size_t>{0, 0, 1, 0});
}

TEST_CASE("semicase reduction") {
  const Instance& ga = support::fixture("ga-z4-gf3");
  auto det = detect_epsilon(*ga.graded);
  auto r = theorem_semicase_check(ga.graded, det.system, *ga.frame, {0}, ga.test_set);
  CHECK(r.gx.members.size() == 4);
  CHECK(r.gx_matches_eps == Decision::yes);
  CHECK(r.subring_epsilon_strong);
  CHECK(r.end_crossed == Decision::yes);

  const Instance& bs = support::fixture("block-swap");
  auto db = detect_epsilon(*bs.graded);
  auto s = theorem_semicase_check(bs.graded, db.system, *bs.frame, {2}, bs.test_set);
  CHECK(s.gx.members == std::vector<GroupElem>{z(0)});
  CHECK(s.end_crossed == Decision::yes);

  const Instance& tri = support::fixture("tri");
  auto t = theorem_semicase_check(tri.graded, tri.epsilon_candidate, *tri.frame, {0}, tri.test_set);
  CHECK(t.end_crossed == Decision::yes);
}

TEST_CASE("index partial action") {
  const Instance& bs = support::fixture("block-swap");
  auto act = index_partial_action(*bs.graded, *bs.frame, bs.test_set);
  CHECK(act.ok());
  CHECK(act.domains.at(z(0)) == std::set<std::size_t>{0, 1, 2});
  for (std::size_t i = 0; i < 3; ++i) CHECK(act.maps.at(z(0)).at(i) == i);
  CHECK(act.domains.at(z(1)) == std::set<std::size_t>{0, 1});
  CHECK(act.maps.at(z(1)).at(0) == 1);
  CHECK(act.maps.at(z(1)).at(1) == 0);
  CHECK(!act.global(3));

  const Instance& tri = support::fixture("tri");
  auto t = index_partial_action(*tri.graded, *tri.frame, tri.test_set);
  CHECK(t.ok());
  CHECK(t.domains.at(z(0)) == std::set<std::size_t>{0});
  // A_1 (x) R e1 is R e3, outside the frame, so the degree-1 domain is empty.
  CHECK(t.domains.at(z(1)).empty());
}
