#include "grado/tasks.hpp"

#include <algorithm>
#include <chrono>

#include "grado/center.hpp"
#include "grado/pic.hpp"

namespace grado {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::undecided: return "undecided";
  }
  return "?";
}

const std::vector<std::string>& known_tasks() {
  static const std::vector<std::string> t = {
      "grading", "tpa",      "build",  "tpa-roundtrip", "epsilon",    "strong", "crossed", "pics",
      "isomul",  "phi",      "gamma",  "invariants",    "galois",     "azumaya", "end-build", "classify",
      "induce",  "astor",    "matcro", "equivalence",   "semiperfect", "index-action"};
  return t;
}

namespace {

Verdict from_decision(Decision d) {
  return d == Decision::yes ? Verdict::pass : d == Decision::no ? Verdict::fail : Verdict::undecided;
}
Decision meet(Decision a, Decision b) {
  if (a == Decision::no || b == Decision::no) return Decision::no;
  if (a == Decision::undecided || b == Decision::undecided) return Decision::undecided;
  return Decision::yes;
}

Verdict from_bool(bool b) { return b ? Verdict::pass : Verdict::fail; }

Vec vec_from_json(const Field& f, const Json& j) {
  Vec v;
  for (const auto& x : j) {
    if (x.is_number_integer()) {
      v.push_back(f.from_int(x.get<long long>()));
    } else {
      mpq_class q(x.get<std::string>());
      q.canonicalize();
      v.push_back(f.from_rational(q));
    }
  }
  return v;
}

Json eps_json(const GradedRing& a, const EpsilonSystem& e) {
  Json j = Json::array();
  for (const auto& [g, v] : e.eps) j.push_back({{"g", group_elem_json(a.group(), g)}, {"value", vec_json(v)}});
  return j;
}

Json witness_json(const GradedRing& a, const std::map<GroupElem, EpsilonInvertibleWitness>& ws) {
  Json j = Json::array();
  for (const auto& [g, w] : ws)
    j.push_back({{"g", group_elem_json(a.group(), g)}, {"s", vec_json(w.s)}, {"inverse", vec_json(w.inverse)}});
  return j;
}

const GradedRing& need_graded(const Instance& inst) {
  if (!inst.graded) throw PreconditionError("the instance carries no grading");
  return *inst.graded;
}

struct Ctx {
  const Instance& inst;
  const SearchStrategy& strategy;
  TaskResult& res;
  const std::vector<std::size_t>& sizes;
};

Json elems_json(const Group& g, const std::vector<GroupElem>& es) {
  Json j = Json::array();
  for (const auto& e : es) j.push_back(group_elem_json(g, e));
  return j;
}

Json basis_json(const Subspace& s) {
  Json j = Json::array();
  for (const auto& v : s.basis()) j.push_back(vec_json(v));
  return j;
}

void task_grading(Ctx c) {
  const GradedRing& a = need_graded(c.inst);
  Json dims = Json::array();
  for (const auto& g : a.support()) dims.push_back({{"g", group_elem_json(a.group(), g)}, {"dim", a.component_dim(g)}});
  c.res.witness = {{"dim", a.algebra().dim()},
                   {"support", elems_json(a.group(), a.support())},
                   {"components", std::move(dims)},
                   {"symmetric", is_symmetrically_graded(a)}};
  c.res.verdict = Verdict::pass;
}

/// Absorption check of a supplied candidate: eps_g a = a = a eps_{g^-1} on A_g.
Json candidate_report(const GradedRing& a, const EpsilonSystem& c) {
  Json j = Json::array();
  const Algebra& alg = a.algebra();
  for (const auto& g : a.support()) {
    const Vec eg = c.at(a, g), egi = c.at(a, a.group().inverse(g));
    std::vector<std::string> left, right;
    for (auto i : a.indices(g)) {
      const Vec b = alg.basis(i);
      if (alg.mul(eg, b) != b) left.push_back(alg.basis_names()[i]);
      if (alg.mul(b, egi) != b) right.push_back(alg.basis_names()[i]);
    }
    j.push_back({{"g", group_elem_json(a.group(), g)},
                 {"idempotent", alg.is_idempotent(eg)},
                 {"not_fixed_on_left", left},
                 {"not_fixed_on_right", right}});
  }
  return j;
}

void task_epsilon(Ctx c) {
  const GradedRing& a = need_graded(c.inst);
  auto det = detect_epsilon(a);
  const bool sym = epsilon_strong_via_symmetry(a);
  c.res.verdict = from_bool(det.ok);
  c.res.witness["routes_agree"] = sym == det.ok;
  if (det.ok) {
    c.res.witness["eps"] = eps_json(a, det.system);
  } else {
    c.res.detail = det.reason;
    if (det.failing) c.res.witness["failing_degree"] = group_elem_json(a.group(), *det.failing);
  }
  if (c.inst.epsilon_candidate) c.res.witness["candidate"] = candidate_report(a, *c.inst.epsilon_candidate);
}

void task_strong(Ctx c) { c.res.verdict = from_bool(is_strongly_graded(need_graded(c.inst))); }

Json search_json(const GradedRing& a, const CrossedDecision& d) {
  Json j = Json::array();
  for (const auto& [g, s] : d.searches)
    j.push_back({{"g", group_elem_json(a.group(), g)},
                 {"decision", to_string(s.decision)},
                 {"route", s.route},
                 {"candidates", s.candidates}});
  return j;
}

void task_crossed(Ctx c) {
  const GradedRing& a = need_graded(c.inst);
  auto det = detect_epsilon(a);
  if (det.ok) {
    auto d = is_epsilon_crossed_product(a, det.system, c.strategy);
    c.res.verdict = from_decision(d.decision);
    c.res.detail = d.reason;
    c.res.witness["witnesses"] = witness_json(a, d.witnesses);
    c.res.witness["searches"] = search_json(a, d);
    return;
  }
  c.res.verdict = Verdict::fail;
  c.res.detail = "not epsilon-strongly graded: " + det.reason;
  if (c.inst.epsilon_candidate) {
    auto d = is_epsilon_crossed_product(a, *c.inst.epsilon_candidate, c.strategy);
    c.res.witness["candidate_decision"] = to_string(d.decision);
    c.res.witness["candidate_searches"] = search_json(a, d);
    c.res.witness["witnesses"] = witness_json(a, d.witnesses);
  }
}

std::vector<std::pair<std::string, GradedModule>> classify_targets(const Instance& inst) {
  std::vector<std::pair<std::string, GradedModule>> out;
  if (inst.graded) out.push_back({"A", regular_graded_module(inst.graded)});
  for (const auto& m : inst.modules) {
    if (m.graded) out.push_back({m.name, *m.graded});
    else if (m.plain && inst.graded) out.push_back({"A(x)" + m.name, induce(inst.graded, *m.plain)});
  }
  return out;
}

void task_classify(Ctx c) {
  Json rows = Json::array();
  bool consistent = true;
  bool undecided = false;
  for (const auto& [name, m] : classify_targets(c.inst)) {
    auto r = classify_end(m, c.strategy);
    consistent = consistent && r.consistent();
    undecided = undecided || r.crossed_direct == Decision::undecided || r.crossed_module == Decision::undecided;
    rows.push_back({{"module", name},
                    {"dim", m.dim()},
                    {"eps_direct", r.eps_direct},
                    {"eps_module", r.eps_module},
                    {"strong_direct", r.strong_direct},
                    {"strong_module", r.strong_module},
                    {"crossed_direct", to_string(r.crossed_direct)},
                    {"crossed_module", to_string(r.crossed_module)},
                    {"disagreements", r.disagreements}});
  }
  c.res.witness["modules"] = std::move(rows);
  c.res.verdict = !consistent ? Verdict::fail : undecided ? Verdict::undecided : Verdict::pass;
}

EpsilonSystem need_eps(const GradedRing& a) {
  auto det = detect_epsilon(a);
  if (!det.ok) throw PreconditionError("not epsilon-strongly graded: " + det.reason);
  return det.system;
}

void task_isomul(Ctx c) {
  const GradedRing& a = need_graded(c.inst);
  auto eps = need_eps(a);
  auto rep = verify_isomul(a, eps, a.support());
  Json rows = Json::array();
  for (const auto& k : rep.checks)
    rows.push_back({{"g", group_elem_json(a.group(), k.g)},
                    {"mu", k.mu_ok},
                    {"mu_tilde", k.mu_tilde_ok},
                    {"context", k.context_ok},
                    {"detail", k.detail}});
  c.res.witness["checks"] = std::move(rows);
  c.res.verdict = from_bool(rep.ok());
}

void task_phi(Ctx c) {
  const GradedRing& a = need_graded(c.inst);
  auto eps = need_eps(a);
  std::vector<std::pair<GroupElem, GroupElem>> pairs;
  for (const auto& g : a.support())
    for (const auto& h : a.support()) pairs.push_back({g, h});
  auto rep = phi_partial_rep_check(a, eps, pairs, c.strategy);
  std::size_t bad = 0;
  for (const auto& k : rep.checks)
    if (!k.detail.empty()) ++bad;
  c.res.witness["pairs"] = rep.checks.size();
  c.res.witness["pairs_with_issues"] = bad;
  c.res.verdict = from_decision(rep.overall);
}

void task_gamma(Ctx c) {
  const GradedRing& a = need_graded(c.inst);
  auto eps = need_eps(a);
  auto act = gamma_action(a, eps);
  const bool eq = eqga_holds(a, act);
  const bool indep = gamma_decomposition_independent(a, eps);
  Json maps = Json::array();
  for (const auto& [g, m] : act.maps) maps.push_back({{"g", group_elem_json(a.group(), g)}, {"matrix", matrix_json(m)}});
  c.res.witness["gamma"] = std::move(maps);
  c.res.witness["eqga"] = eq;
  c.res.witness["decomposition_independent"] = indep;
  c.res.witness["invariants_dim"] = invariants(act).dim();
  c.res.verdict = from_bool(eq && indep);
}

void task_galois(Ctx c) {
  const GradedRing& a = need_graded(c.inst);
  auto act = gamma_action(a, need_eps(a));
  auto coords = galois_check(*a.base(), act);
  c.res.verdict = from_bool(coords && verify_galois(*a.base(), act, *coords));
  if (coords) {
    Json xs = Json::array(), ys = Json::array();
    for (const auto& x : coords->xs) xs.push_back(vec_json(x));
    for (const auto& y : coords->ys) ys.push_back(vec_json(y));
    c.res.witness = {{"xs", xs}, {"ys", ys}};
  }
}

void task_azumaya(Ctx c) {
  const GradedRing& a = need_graded(c.inst);
  auto act = gamma_action(a, need_eps(a));
  auto rep = azumaya_check(a, invariants(act));
  c.res.witness = {{"center_is_invariants", rep.center_ok},
                   {"separable", rep.separable},
                   {"maximal_commutative", rep.maximal_commutative},
                   {"tensor_dim", rep.tensor_dim}};
  if (rep.separability_idempotent) c.res.witness["separability_idempotent"] = vec_json(*rep.separability_idempotent);
  c.res.detail = rep.detail;
  c.res.verdict = from_bool(rep.ok());
}

void task_matcro(Ctx c) {
  const GradedRing& a = need_graded(c.inst);
  Json rows = Json::array();
  Verdict v = Verdict::pass;
  for (std::size_t n : c.sizes) {
    auto r = matcro_decide(a, n, c.strategy);
    rows.push_back({{"n", n},
                    {"applicable", r.applicable},
                    {"crossed", to_string(r.crossed.decision)},
                    {"generator", to_string(r.generator.decision)},
                    {"eps_diagonal", r.eps_is_diagonal},
                    {"agree", r.agree},
                    {"note", r.note}});
    if (!r.applicable) v = Verdict::fail;
    else if (!r.decided) v = v == Verdict::fail ? v : Verdict::undecided;
    else if (!r.agree) v = Verdict::fail;
  }
  c.res.witness["sizes"] = std::move(rows);
  c.res.verdict = v;
}

void task_equivalence(Ctx c) {
  const GradedRing& a = need_graded(c.inst);
  std::size_t disagreements = 0, undecided = 0;
  auto det = detect_epsilon(a);
  const bool a_ok = det.ok == epsilon_strong_via_symmetry(a);
  disagreements += !a_ok;
  auto cls = classify_end(regular_graded_module(c.inst.graded), c.strategy);
  disagreements += cls.disagreements.size();
  if (cls.crossed_direct == Decision::undecided || cls.crossed_module == Decision::undecided) ++undecided;
  Json matcro = Json::array();
  if (det.ok)
    for (std::size_t n : c.sizes) {
      auto r = matcro_decide(a, n, c.strategy);
      if (!r.decided) ++undecided;
      else if (!r.agree) ++disagreements;
      matcro.push_back({{"n", n}, {"decided", r.decided}, {"agree", r.agree}});
    }
  std::size_t remark = 0;
  if (det.ok) remark = check_remark_identities(a, det.system).size();
  disagreements += remark;
  c.res.witness = {{"epsilon_routes_agree", a_ok},
                   {"end_route_disagreements", cls.disagreements},
                   {"matcro", matcro},
                   {"remark_violations", remark},
                   {"undecided_legs", undecided},
                   {"disagreements", disagreements}};
  c.res.verdict = disagreements ? Verdict::fail : Verdict::pass;
}

void task_semiperfect(Ctx c) {
  const Instance& inst = c.inst;
  const GradedRing& a = need_graded(inst);
  if (!inst.frame) throw PreconditionError("the instance carries no idempotent frame");
  const IdempotentFrame& fr = *inst.frame;
  auto frep = validate_frame(fr, c.strategy);
  auto det = detect_epsilon(a);
  std::optional<EpsilonSystem> eps;
  if (det.ok) eps = det.system;
  else if (inst.epsilon_candidate) eps = inst.epsilon_candidate;
  Json out;
  out["frame_ok"] = frep.ok();
  out["frame_issues"] = frep.issues;
  out["epsilon_source"] = det.ok ? "detected" : eps ? "candidate" : "none";
  bool ege_ok = true;
  if (eps) {
    auto ege = lemma_ege_check(a, *eps, fr, inst.test_set);
    ege_ok = ege.ok();
    Json bad = Json::array();
    for (const auto& e : ege.entries)
      if (!e.equivalent())
        bad.push_back({{"g", group_elem_json(a.group(), e.g)},
                       {"idempotent", e.idempotent},
                       {"eps_fixes", e.eps_fixes},
                       {"A_g_e", e.ag_e},
                       {"A_ginv_e", e.agi_e}});
    out["ege_failures"] = std::move(bad);
  }
  std::vector<std::size_t> all(fr.e.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  auto sc = theorem_semicase_check(inst.graded, eps, fr, all, inst.test_set, c.strategy);
  Json ge = Json::array();
  for (const auto& g : sc.gx.members) ge.push_back(group_elem_json(a.group(), g));
  Json es = Json::array();
  for (const auto& g : sc.eps_set) es.push_back(group_elem_json(a.group(), g));
  out["G_E"] = std::move(ge);
  out["G_E_scope"] = sc.gx.scope;
  out["G_E_subgroup"] = sc.gx.subgroup_ok;
  out["eps_fixed_degrees"] = std::move(es);
  out["G_E_matches_eps"] = to_string(sc.gx_matches_eps);
  out["subring_epsilon_strong"] = sc.subring_epsilon_strong;
  out["end_dim"] = sc.end_dim;
  out["end_crossed"] = to_string(sc.end_crossed);
  out["pics_permutes"] = to_string(sc.pics_permutes);
  out["notes"] = sc.notes;
  c.res.witness = std::move(out);
  auto yes_no = [](bool b) { return b ? Decision::yes : Decision::no; };
  Decision d = yes_no(eps.has_value() && frep.ok() && ege_ok && sc.gx.subgroup_ok);
  for (Decision x : {sc.gx_matches_eps, sc.end_crossed, sc.pics_permutes}) d = meet(d, x);
  c.res.verdict = from_decision(d);
}

void task_index_action(Ctx c) {
  const GradedRing& a = need_graded(c.inst);
  if (!c.inst.frame) throw PreconditionError("the instance carries no idempotent frame");
  auto act = index_partial_action(a, *c.inst.frame, c.inst.test_set, c.strategy);
  Json rows = Json::array();
  for (const auto& [g, m] : act.maps) {
    Json mj = Json::object();
    for (const auto& [i, j] : m) mj[std::to_string(i)] = j;
    rows.push_back({{"g", group_elem_json(a.group(), g)},
                    {"domain", std::vector<std::size_t>(act.domains.at(g).begin(), act.domains.at(g).end())},
                    {"alpha", std::move(mj)}});
  }
  c.res.witness = {{"action", rows}, {"global", act.global(c.inst.frame->e.size())}, {"violations", act.violations}};
  c.res.verdict = act.undecided ? Verdict::undecided : from_bool(act.ok());
}

void task_tpa(Ctx c) {
  if (!c.inst.tpa) throw PreconditionError("the instance carries no twisted partial action");
  auto rep = verify_tpa(*c.inst.tpa);
  Json fails = Json::array();
  for (const auto& f : rep.failures) fails.push_back({{"axiom", f.axiom}, {"detail", f.detail}});
  c.res.witness = {{"instances", rep.instances}, {"failures", fails}, {"afgh_follows_from_t2", rep.afgh_follows_from_t2}};
  c.res.verdict = from_bool(rep.ok());
}

void task_tpa_roundtrip(Ctx c) {
  if (!c.inst.crossed) throw PreconditionError("the instance carries no twisted partial action");
  const CrossedProduct& cp = *c.inst.crossed;
  const GradedRing& a = *cp.ring;
  auto det = detect_epsilon(a);
  const EpsilonSystem canon = cp.canonical_epsilon();
  bool eps_match = det.ok;
  if (det.ok)
    for (const auto& g : a.support())
      if (det.system.at(a, g) != canon.at(a, g)) eps_match = false;
  c.res.witness["eps_is_canonical"] = eps_match;
  if (!det.ok) {
    c.res.verdict = Verdict::fail;
    c.res.detail = det.reason;
    return;
  }
  auto cd = is_epsilon_crossed_product(a, det.system, c.strategy);
  if (cd.decision != Decision::yes) {
    c.res.verdict = from_decision(cd.decision);
    c.res.detail = "no epsilon-invertible witnesses: " + cd.reason;
    return;
  }
  auto ex = extract_tpa(a, det.system, cd.witnesses);
  const bool axioms = verify_tpa(ex.tpa).ok();
  bool same_domains = true;
  for (const auto& g : a.support())
    if ((ex.crossed.ring->component_dim(g)) != a.component_dim(g)) same_domains = false;
  c.res.witness["witnesses"] = witness_json(a, cd.witnesses);
  c.res.witness["extracted_axioms"] = axioms;
  c.res.witness["component_dims_match"] = same_domains;
  c.res.witness["iso"] = matrix_json(ex.iso);
  c.res.verdict = from_bool(eps_match && axioms && same_domains);
}

void task_build(Ctx c) {
  if (!c.inst.crossed) throw PreconditionError("the instance carries no twisted partial action");
  const CrossedProduct& cp = *c.inst.crossed;
  const GradedRing& a = *cp.ring;
  auto det = detect_epsilon(a);
  const EpsilonSystem canon = cp.canonical_epsilon();
  bool match = det.ok;
  if (det.ok)
    for (const auto& g : a.support())
      if (det.system.at(a, g) != canon.at(a, g)) match = false;
  Json offs = Json::array();
  for (const auto& [g, o] : cp.offset)
    offs.push_back({{"g", group_elem_json(a.group(), g)}, {"offset", o}, {"dim", cp.domain_basis.at(g).size()}});
  c.res.witness = {{"dim", a.algebra().dim()}, {"domains", std::move(offs)}, {"eps_is_canonical", match}};
  c.res.witness["eps"] = eps_json(a, canon);
  c.res.verdict = from_bool(match);
}

void task_pics(Ctx c) {
  const GradedRing& a = need_graded(c.inst);
  Json rows = Json::array();
  auto det = detect_epsilon(a);
  bool all = true;
  for (const auto& g : a.support()) {
    auto cert = pics_membership(a.component_bimodule(g));
    all = all && cert.member;
    Json r{{"g", group_elem_json(a.group(), g)},
           {"member", cert.member},
           {"left_fgp", cert.left_fgp.projective},
           {"right_fgp", cert.right_fgp.projective}};
    if (cert.e1) r["ann_right"] = vec_json(*cert.e1);
    if (cert.e2) r["ann_left"] = vec_json(*cert.e2);
    if (!cert.reason.empty()) r["reason"] = cert.reason;
    rows.push_back(std::move(r));
  }
  c.res.witness = {{"components", std::move(rows)}, {"epsilon_strong", det.ok}};
  c.res.verdict = from_bool(all);
}

void task_invariants(Ctx c) {
  const GradedRing& a = need_graded(c.inst);
  auto act = gamma_action(a, need_eps(a));
  const Subspace inv = invariants(act);
  c.res.witness = {{"center_dim", act.center.dim()},
                   {"center", basis_json(act.center)},
                   {"invariants_dim", inv.dim()},
                   {"invariants", basis_json(inv)}};
  c.res.verdict = Verdict::pass;
}

void task_end_build(Ctx c) {
  Json rows = Json::array();
  for (const auto& [name, m] : classify_targets(c.inst)) {
    EndRing e = build_end_ring(m);
    Json comps = Json::array();
    for (const auto& g : e.ring->support())
      comps.push_back({{"g", group_elem_json(e.ring->group(), g)}, {"dim", e.ring->component_dim(g)}});
    rows.push_back({{"module", name}, {"dim", e.ring->algebra().dim()}, {"components", std::move(comps)}});
  }
  c.res.witness["modules"] = std::move(rows);
  c.res.verdict = Verdict::pass;
}

std::vector<const NamedModule*> plain_modules(const Instance& inst) {
  std::vector<const NamedModule*> out;
  for (const auto& m : inst.modules)
    if (!m.graded && m.plain) out.push_back(&m);
  if (out.empty()) throw PreconditionError("the instance carries no plain R-module");
  return out;
}

void task_induce(Ctx c) {
  need_graded(c.inst);
  Json rows = Json::array();
  for (const auto* m : plain_modules(c.inst)) {
    GradedModule ind = induce(c.inst.graded, *m->plain);
    Json comps = Json::array();
    for (const auto& g : ind.support())
      comps.push_back({{"g", group_elem_json(ind.ring().group(), g)}, {"dim", ind.indices(g).size()}});
    rows.push_back({{"module", m->name}, {"dim", ind.dim()}, {"components", std::move(comps)}});
  }
  c.res.witness["modules"] = std::move(rows);
  c.res.verdict = Verdict::pass;
}

void task_astor(Ctx c) {
  need_graded(c.inst);
  Json rows = Json::array();
  bool consistent = true;
  bool undecided = false;
  for (const auto* m : plain_modules(c.inst)) {
    auto r = check_astor(c.inst.graded, *m->plain, c.strategy);
    consistent = consistent && r.consistent;
    undecided = undecided || r.hypothesis == Decision::undecided;
    Json degs = Json::array();
    for (const auto& d : r.degrees)
      degs.push_back({{"l", group_elem_json(c.inst.graded->group(), d.l)},
                      {"submodules_ok", d.submodules_ok},
                      {"lower_upper", to_string(d.lower_upper)},
                      {"upper_upper", to_string(d.upper_upper)}});
    Json phi = Json::array();
    for (const auto& p : r.phi)
      phi.push_back({{"l", group_elem_json(c.inst.graded->group(), p.l)},
                     {"in_end", p.in_end},
                     {"epsilon_invertible", p.epsilon_invertible}});
    Json row{{"module", m->name},
             {"hypothesis", to_string(r.hypothesis)},
             {"end_epsilon_strong", r.end_epsilon_strong},
             {"g_invariant", to_string(r.g_invariant)},
             {"consistent", r.consistent},
             {"degrees", std::move(degs)},
             {"phi", std::move(phi)}};
    if (!r.note.empty()) row["note"] = r.note;
    rows.push_back(std::move(row));
  }
  c.res.witness["modules"] = std::move(rows);
  c.res.verdict = !consistent ? Verdict::fail : undecided ? Verdict::undecided : Verdict::pass;
}

}  // namespace

TaskResult run_task(const Instance& inst, const std::string& task, const SearchStrategy& strategy,
                    const std::vector<std::size_t>& matrix_sizes) {
  using Fn = void (*)(Ctx);
  static const std::map<std::string, Fn> table = {
      {"tpa", task_tpa},         {"tpa-roundtrip", task_tpa_roundtrip}, {"epsilon", task_epsilon},
      {"strong", task_strong},   {"crossed", task_crossed},             {"classify", task_classify},
      {"isomul", task_isomul},   {"phi", task_phi},                     {"gamma", task_gamma},
      {"galois", task_galois},   {"azumaya", task_azumaya},             {"matcro", task_matcro},
      {"equivalence", task_equivalence}, {"semiperfect", task_semiperfect}, {"index-action", task_index_action},
      {"grading", task_grading}, {"build", task_build}, {"pics", task_pics}, {"invariants", task_invariants},
      {"end-build", task_end_build}, {"induce", task_induce}, {"astor", task_astor}};
  auto it = table.find(task);
  if (it == table.end()) throw InputError("unknown task '" + task + "'");
  TaskResult res;
  res.task = task;
  const auto start = std::chrono::steady_clock::now();
  try {
    it->second(Ctx{inst, strategy, res, matrix_sizes});
  } catch (const PreconditionError& e) {
    res.verdict = Verdict::fail;
    res.detail = std::string("precondition: ") + e.what();
  } catch (const VerificationError& e) {
    res.verdict = Verdict::fail;
    res.detail = std::string("verification: ") + e.what();
  } catch (const SearchBudgetExceeded& e) {
    res.verdict = Verdict::undecided;
    res.detail = e.what();
  }
  res.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return res;
}

Json run_report(const Instance& inst, const RunOptions& options) {
  std::vector<std::string> req = options.tasks.empty() ? inst.tasks : options.tasks;
  for (const auto& t : req)
    if (std::find(known_tasks().begin(), known_tasks().end(), t) == known_tasks().end())
      throw InputError("unknown task '" + t + "'");
  SearchStrategy s;
  s.seed = options.seed.value_or(inst.seed);
  if (options.budget) {
    s.budget = *options.budget;
    s.trials = std::min(s.trials, s.budget);
  }
  Json report;
  report["document"] = inst.name;
  report["seed"] = s.seed;
  report["budget"] = s.budget;
  report["tasks"] = Json::array();
  for (const auto& t : known_tasks()) {
    if (std::find(req.begin(), req.end(), t) == req.end()) continue;
    TaskResult r = run_task(inst, t, s, options.matrix_sizes);
    Json j{{"task", r.task}, {"verdict", to_string(r.verdict)}};
    if (!r.detail.empty()) j["detail"] = r.detail;
    j["witness"] = std::move(r.witness);
    if (options.timing) j["ms"] = r.ms;
    report["tasks"].push_back(std::move(j));
  }
  return report;
}

int exit_code(const Json& report) {
  for (const auto& t : report["tasks"])
    if (t["verdict"] == "undecided") return 2;
  return 0;
}

bool reverify(const Instance& inst, const Json& t) {
  const std::string task = t.at("task");
  const Json& w = t.at("witness");
  if (!inst.graded) return true;
  const GradedRing& a = *inst.graded;
  const Field& f = a.field();
  auto elem = [&](const Json& g) {
    GroupElem e;
    if (g.is_array()) e.v = g.get<std::vector<long long>>();
    else e.v = {g.get<long long>()};
    return e;
  };
  if (task == "epsilon" && t.at("verdict") == "pass") {
    EpsilonSystem eps;
    for (const auto& e : w.at("eps")) eps.eps[elem(e.at("g"))] = vec_from_json(f, e.at("value"));
    auto det = detect_epsilon(a);
    if (!det.ok) return false;
    for (const auto& g : a.support())
      if (det.system.at(a, g) != eps.at(a, g)) return false;
    return true;
  }
  if ((task == "crossed" || task == "tpa-roundtrip") && w.contains("witnesses")) {
    auto det = detect_epsilon(a);
    EpsilonSystem eps = det.ok ? det.system : inst.epsilon_candidate.value_or(EpsilonSystem{});
    for (const auto& e : w.at("witnesses")) {
      EpsilonInvertibleWitness x{elem(e.at("g")), vec_from_json(f, e.at("s")), vec_from_json(f, e.at("inverse"))};
      if (!verify_witness(a, eps, x)) return false;
    }
    return true;
  }
  return true;
}

}  // namespace grado
