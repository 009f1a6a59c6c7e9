// Acceptance run: one pass/fail line per criterion, nonzero exit if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "grado/center.hpp"
#include "grado/gradedmod.hpp"
#include "grado/semiperfect.hpp"
#include "support.hpp"

using namespace grado;
using support::mat;
using support::z;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    pass = pass && ok;
    detail << (ok ? "" : "FAILED ") << what << "; ";
  }
};

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

bool witnesses_verified(const GradedRing& a, const EpsilonSystem& eps, const CrossedDecision& cd) {
  if (cd.decision != Decision::yes || cd.witnesses.size() != a.support().size()) return false;
  for (const auto& [g, w] : cd.witnesses)
    if (!verify_witness(a, eps, w)) return false;
  return true;
}

void check_endv(Outcome& o) {
  const GradedRing& a = support::ring("endv");
  const Field f = a.field();
  const std::map<long long, Matrix> expect = {
      {0, Matrix::identity(f, 3)},
      {1, mat(f, {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}})},
      {2, mat(f, {{1, 0, 0}, {0, 0, 0}, {0, 0, 0}})},
      {-1, mat(f, {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}})},
      {-2, mat(f, {{0, 0, 0}, {0, 0, 0}, {0, 0, 1}})},
  };
  auto det = detect_epsilon(a);
  o.require(det.ok, "detect_epsilon succeeds");
  bool entrywise = det.system.eps.size() == expect.size();
  for (const auto& [k, t] : expect)
    entrywise = entrywise && det.system.eps.count(z(k)) && det.system.eps.at(z(k)) == support::endv_element(t);
  o.require(entrywise, "five operators match entrywise");
  o.require(witnesses_verified(a, det.system, is_epsilon_crossed_product(a, det.system)),
            "crossed product with verified witnesses");
  auto c = classify_end(*support::fixture("endv").modules.at(0).graded);
  o.require(c.consistent() && c.crossed_direct == Decision::yes && c.crossed_module == Decision::yes,
            "classify_end on V agrees (direct " + to_string(c.crossed_direct) + ", module " +
                to_string(c.crossed_module) + ")");
}

void check_tri(Outcome& o) {
  const Instance& inst = support::fixture("tri");
  const GradedRing& a = *inst.graded;
  const Algebra& alg = a.algebra();
  const Field f = a.field();
  Vec diag = zero_vec(f, alg.dim());
  diag[0] = diag[1] = diag[2] = f.one();  // (1_S, 1_I) = e1 + e2 + e3
  const Subspace a1 = a.component(z(1));
  auto id = ideal_identity(alg, product_span(alg, a1, a1), a.component(z(0)));
  std::ostringstream got;
  if (id)
    for (std::size_t i = 0; i < alg.dim(); ++i)
      if (!(*id)[i].is_zero()) got << (got.tellp() ? "+" : "") << alg.basis_names()[i];
  o.require(id && *id == diag, "identity of A1A1 is e1+e2+e3 (got " + got.str() + ", A1A1 dim " +
                                   std::to_string(product_span(alg, a1, a1).dim()) + ")");
  auto s = find_epsilon_invertible(a, *inst.epsilon_candidate, z(1), SearchStrategy::exhaustive_only());
  o.require(s.decision == Decision::no, "exhaustive search certifies no witness in A1 (" +
                                            std::to_string(s.candidates) + " candidates)");
  auto gx = compute_GX(a, *inst.frame, {0}, a.group().elements());
  o.require(gx.undecided == 0 && gx.members.size() == 2,
            "G_E is Z2 (got " + std::to_string(gx.members.size()) + " element(s))");
  auto sc = theorem_semicase_check(inst.graded, inst.epsilon_candidate, *inst.frame, {0}, inst.test_set);
  o.require(sc.end_crossed == Decision::yes, "END(A (x) Re1) is a partial crossed product");
}

void check_pcp2(Outcome& o) {
  const Instance& inst = support::fixture("pcp2");
  o.require(verify_tpa(*inst.tpa).ok(), "verify_tpa");
  CrossedProduct cp = build_crossed_product(*inst.tpa);
  const GradedRing& a = *cp.ring;
  auto det = detect_epsilon(a);
  o.require(det.ok && det.system.eps == cp.canonical_epsilon().eps, "detect_epsilon gives 1_g delta_1");
  auto cd = is_epsilon_crossed_product(a, det.system);
  o.require(witnesses_verified(a, det.system, cd), "witnesses verified");
  if (cd.decision != Decision::yes) return;
  auto ex = extract_tpa(a, det.system, cd.witnesses);
  o.require(verify_tpa(ex.tpa).ok(), "extracted action satisfies the axioms");
  o.require(is_graded_algebra_iso(a, *ex.crossed.ring, ex.iso), "round trip is a graded isomorphism");
}

void check_galois(Outcome& o) {
  const GradedRing& a = support::ring("swap-galois");
  auto act = gamma_action(a, detect_epsilon(a).system);
  auto c = galois_check(*a.base(), act);
  o.require(c && verify_galois(*a.base(), act, *c), "swap: Galois coordinates found");
  auto az = azumaya_check(a, invariants(act));
  o.require(az.center_ok && az.separable && az.maximal_commutative, "swap: Azumaya sub-checks");
  std::mt19937_64 rng(2024);
  std::size_t found = 0, failures = 0, attempts = 0;
  while (found < 20 && attempts < 2000) {
    ++attempts;
    const Field f = Field::prime(attempts % 2 ? 3 : 2);
    const std::size_t m = 2 + rng() % 2, n = 1 + rng() % 4;
    auto sigma = gen::permutation_of_order_dividing(rng, n, m);
    std::vector<bool> in_u(n);
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) any |= (in_u[i] = rng() % 3 != 0);
    if (!any) continue;
    auto cp = build_crossed_product(gen::restricted_permutation_action(f, n, m, sigma, in_u));
    const GradedRing& r = *cp.ring;
    auto det = detect_epsilon(r);
    if (!det.ok) continue;
    auto ract = gamma_action(r, det.system);
    auto rc = galois_check(*r.base(), ract);
    if (!rc || !verify_galois(*r.base(), ract, *rc)) continue;
    ++found;
    failures += !azumaya_check(r, invariants(ract)).ok();
  }
  o.require(found == 20, std::to_string(found) + " random Galois instances");
  o.require(failures == 0, std::to_string(failures) + " Azumaya failures");
}

void check_equivalences(Outcome& o) {
  std::vector<gen::Sample> samples;
  for (const auto& n : fixture_names()) samples.push_back({n, support::ring_ptr(n)});
  for (auto& s : gen::random_gradings(99)) samples.push_back(std::move(s));
  std::size_t legs = 0, undecided = 0;
  std::size_t dis_a = 0, dis_b = 0, dis_c = 0, dis_d = 0;
  for (const auto& s : samples) {
    const GradedRing& a = *s.ring;
    auto det = detect_epsilon(a);
    dis_a += det.ok != epsilon_strong_via_symmetry(a);
    ++legs;
    auto c = classify_end(regular_graded_module(s.ring));
    ++legs;
    if (c.crossed_direct == Decision::undecided || c.crossed_module == Decision::undecided) ++undecided;
    else dis_b += !c.consistent();
    for (std::size_t n : {1, 2}) {
      auto m = matcro_decide(a, n);
      if (!m.applicable) continue;
      ++legs;
      if (!m.decided) ++undecided;
      else dis_c += !m.agree;
    }
    if (det.ok) {
      ++legs;
      dis_d += !check_remark_identities(a, det.system).empty();
    }
  }
  for (const auto& n : fixture_names())
    for (const auto& m : support::fixture(n).modules)
      if (m.graded) {
        auto c = classify_end(*m.graded);
        ++legs;
        if (c.crossed_direct == Decision::undecided || c.crossed_module == Decision::undecided) ++undecided;
        else dis_b += !c.consistent();
      }
  const double rate = legs ? static_cast<double>(undecided) / static_cast<double>(legs) : 0;
  o.require(dis_a == 0, "(a) " + std::to_string(dis_a) + " disagreements");
  o.require(dis_b == 0, "(b) " + std::to_string(dis_b) + " disagreements");
  o.require(dis_c == 0, "(c) " + std::to_string(dis_c) + " disagreements");
  o.require(dis_d == 0, "(d) " + std::to_string(dis_d) + " violations");
  o.require(rate <= 0.10, std::to_string(undecided) + "/" + std::to_string(legs) + " legs undecided over " +
                              std::to_string(samples.size()) + " rings");
}

void check_gamma(Outcome& o) {
  std::size_t checked = 0;
  for (const auto& n : fixture_names()) {
    const GradedRing& a = support::ring(n);
    auto det = detect_epsilon(a);
    if (!det.ok) continue;
    ++checked;
    auto act = gamma_action(a, det.system);
    o.require(eqga_holds(a, act), n + ": gamma_g(r) a = a r");
    o.require(gamma_decomposition_independent(a, det.system), n + ": decomposition-independent");
  }
  o.require(checked > 0, std::to_string(checked) + " epsilon-strong fixtures");
}

void check_index_action(Outcome& o) {
  for (const char* n : {"block-swap", "tri"}) {
    const Instance& inst = support::fixture(n);
    const GradedRing& a = *inst.graded;
    auto act = index_partial_action(a, *inst.frame, inst.test_set);
    o.require(act.ok(), std::string(n) + ": partial-action axioms");
    bool sym = true;
    for (const auto& [g, d] : act.domains) {
      auto it = act.domains.find(a.group().inverse(g));
      sym = sym && it != act.domains.end() && it->second == d;
    }
    o.require(sym, std::string(n) + ": I_{g^-1} = I_g");
    if (std::string(n) == "tri") {
      std::ostringstream doms;
      for (const auto& [g, d] : act.domains) doms << " |I_" << a.group().to_string(g) << "|=" << d.size();
      o.require(act.global(inst.frame->e.size()), "tri: action is global (" + doms.str().substr(1) + ")");
    }
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_s;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"ENDV epsilon system, crossed product, END classification", 5, check_endv},
      {"TRI epsilon_1, exhaustive certificate, G_E, END(A (x) Re1)", 10, check_tri},
      {"PCP2 axioms, build, detection and round trip", 2, check_pcp2},
      {"Galois implies Azumaya", 30, check_galois},
      {"equivalence suites on fixtures and random gradings", 0, check_equivalences},
      {"gamma identity and decomposition independence", 0, check_gamma},
      {"index partial action", 0, check_index_action},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[k].run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (criteria[k].limit_s > 0) {
      std::ostringstream t;
      t << "runtime " << s << " s < " << criteria[k].limit_s << " s";
      o.require(s < criteria[k].limit_s, t.str());
    } else {
      o.detail << "runtime " << s << " s; ";
    }
    std::string d = o.detail.str();
    if (d.size() >= 2) d.resize(d.size() - 2);
    std::printf("criterion %zu %s: %s [%s]\n", k + 1, o.pass ? "PASS" : "FAIL", criteria[k].name, d.c_str());
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
