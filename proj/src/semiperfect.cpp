#include "grado/semiperfect.hpp"

#include <algorithm>

namespace grado {

namespace {

Decision meet(Decision a, Decision b) {
  if (a == Decision::no || b == Decision::no) return Decision::no;
  if (a == Decision::undecided || b == Decision::undecided) return Decision::undecided;
  return Decision::yes;
}

/// Some basis vector of A_g has nonzero product with e (e embedded from R coordinates).
bool component_acts(const GradedRing& a, const GroupElem& g, const Vec& e_in_a) {
  for (auto i : a.indices(g))
    if (!is_zero(a.algebra().mul(a.algebra().basis(i), e_in_a))) return true;
  return false;
}

}  // namespace

Module frame_module(const IdempotentFrame& frame, std::size_t i) { return left_ideal_module(frame.ring, frame.e.at(i)); }

FrameReport validate_frame(const IdempotentFrame& frame, const SearchStrategy& strategy) {
  const Algebra& r = *frame.ring;
  FrameReport rep;
  for (std::size_t i = 0; i < frame.e.size(); ++i) {
    if (frame.e[i].size() != r.dim()) throw DimensionMismatch("frame idempotent has the wrong length");
    if (!r.is_idempotent(frame.e[i]) || is_zero(frame.e[i])) {
      rep.idempotent = false;
      rep.issues.push_back("E[" + std::to_string(i) + "] is not a nonzero idempotent");
    }
    for (std::size_t j = 0; j < frame.e.size(); ++j)
      if (i != j && !is_zero(r.mul(frame.e[i], frame.e[j]))) {
        rep.orthogonal = false;
        rep.issues.push_back("E[" + std::to_string(i) + "] E[" + std::to_string(j) + "] != 0");
      }
  }
  for (std::size_t i = 0; i < frame.e.size(); ++i)
    for (std::size_t j = i + 1; j < frame.e.size(); ++j) {
      auto iso = is_isomorphic(frame_module(frame, i), frame_module(frame, j), strategy);
      Decision distinct = iso.decision == Decision::yes  ? Decision::no
                          : iso.decision == Decision::no ? Decision::yes
                                                         : Decision::undecided;
      if (distinct != Decision::yes)
        rep.issues.push_back("R E[" + std::to_string(i) + "] and R E[" + std::to_string(j) +
                             "] isomorphic: " + to_string(iso.decision));
      rep.irredundant = meet(rep.irredundant, distinct);
    }
  if (frame.completion.empty()) return rep;
  if (frame.assignment.size() != frame.completion.size())
    throw DimensionMismatch("one assignment per completion idempotent is required");
  Vec sum = r.zero();
  for (std::size_t k = 0; k < frame.completion.size(); ++k) {
    const Vec& f = frame.completion[k];
    if (f.size() != r.dim()) throw DimensionMismatch("completion idempotent has the wrong length");
    sum = add(sum, f);
    if (!r.is_idempotent(f)) {
      rep.completion_orthogonal = false;
      rep.issues.push_back("C[" + std::to_string(k) + "] is not idempotent");
    }
    for (std::size_t l = 0; l < frame.completion.size(); ++l)
      if (l != k && !is_zero(r.mul(f, frame.completion[l]))) {
        rep.completion_orthogonal = false;
        rep.issues.push_back("C[" + std::to_string(k) + "] C[" + std::to_string(l) + "] != 0");
      }
    if (frame.assignment[k] >= frame.e.size()) throw InputError("completion assignment out of range");
    auto iso = is_isomorphic(left_ideal_module(frame.ring, f), frame_module(frame, frame.assignment[k]), strategy);
    if (iso.decision != Decision::yes)
      rep.issues.push_back("R C[" + std::to_string(k) + "] vs R E[" + std::to_string(frame.assignment[k]) +
                           "]: " + to_string(iso.decision));
    rep.assignments = meet(rep.assignments, iso.decision);
  }
  if (sum != r.one()) {
    rep.completion_sums_to_one = false;
    rep.issues.push_back("completion does not sum to 1");
  }
  return rep;
}

bool EgeReport::ok() const {
  for (const auto& e : entries)
    if (!e.equivalent()) return false;
  return true;
}

EgeReport lemma_ege_check(const GradedRing& a, const EpsilonSystem& eps, const IdempotentFrame& frame,
                          const std::vector<GroupElem>& degrees) {
  const Algebra& alg = a.algebra();
  const GroupElem one = a.group().identity();
  EgeReport rep;
  std::vector<std::pair<std::string, Vec>> items;
  for (std::size_t i = 0; i < frame.e.size(); ++i) items.push_back({"E[" + std::to_string(i) + "]", frame.e[i]});
  for (std::size_t k = 0; k < frame.completion.size(); ++k)
    items.push_back({"C[" + std::to_string(k) + "]", frame.completion[k]});
  for (const auto& g : degrees) {
    const Vec eg = eps.at(a, g);
    for (const auto& [name, e] : items) {
      const Vec ea = a.embed(one, e);
      const Vec prod = alg.mul(eg, ea);
      EgeEntry en;
      en.g = g;
      en.idempotent = name;
      en.eps_fixes = prod == ea;
      en.eps_kills = is_zero(prod);
      en.ag_e = component_acts(a, g, ea);
      en.agi_e = component_acts(a, a.group().inverse(g), ea);
      rep.entries.push_back(std::move(en));
    }
  }
  return rep;
}

Module translate(const GradedRing& a, const IdempotentFrame& frame, const GroupElem& g, std::size_t i) {
  return tensor_over(a.component_bimodule(g), frame_module(frame, i)).module;
}

bool GxReport::contains(const GroupElem& g) const {
  return std::find(members.begin(), members.end(), g) != members.end();
}

GxReport compute_GX(const GradedRing& a, const IdempotentFrame& frame, const std::vector<std::size_t>& x,
                    const std::vector<GroupElem>& test_set, const SearchStrategy& strategy) {
  if (x.empty()) throw PreconditionError("compute_GX needs a nonempty X");
  const Group& grp = a.group();
  GxReport rep;
  rep.x = x;
  rep.scope = grp.is_finite() && test_set.size() == grp.order() ? "whole group" : "restricted to the test set";
  for (const auto& g : test_set) {
    GxMembership m;
    m.g = g;
    m.member = Decision::yes;
    for (auto i : x) {
      Module t = translate(a, frame, g, i);
      Decision found = Decision::no;
      for (auto j : x) {
        auto iso = is_isomorphic(t, frame_module(frame, j), strategy);
        if (iso.decision == Decision::yes) {
          m.moves[i] = j;
          found = Decision::yes;
          break;
        }
        if (iso.decision == Decision::undecided) found = Decision::undecided;
      }
      if (found != Decision::yes)
        m.detail += "E[" + std::to_string(i) + "]: no match (" + to_string(found) + "); ";
      m.member = meet(m.member, found);
    }
    if (m.member == Decision::yes) rep.members.push_back(g);
    if (m.member == Decision::undecided) ++rep.undecided;
    rep.entries.push_back(std::move(m));
  }
  auto in_test = [&](const GroupElem& g) { return std::find(test_set.begin(), test_set.end(), g) != test_set.end(); };
  if (in_test(grp.identity()) && !rep.contains(grp.identity())) rep.subgroup_ok = false;
  for (const auto& g : rep.members) {
    const GroupElem gi = grp.inverse(g);
    if (in_test(gi) && !rep.contains(gi)) rep.subgroup_ok = false;
    for (const auto& h : rep.members) {
      const GroupElem gh = grp.mul(g, h);
      if (in_test(gh) && !rep.contains(gh)) rep.subgroup_ok = false;
    }
  }
  return rep;
}

SemicaseReport theorem_semicase_check(const GradedPtr& a, const std::optional<EpsilonSystem>& eps,
                                      const IdempotentFrame& frame, const std::vector<std::size_t>& x,
                                      const std::vector<GroupElem>& test_set, const SearchStrategy& strategy) {
  const Algebra& alg = a->algebra();
  const GroupElem one = a->group().identity();
  SemicaseReport rep;
  std::vector<std::size_t> all(frame.e.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  if (eps) {
    for (const auto& g : test_set) {
      bool fixes = true;
      for (const auto& e : frame.e) {
        const Vec ea = a->embed(one, e);
        if (alg.mul(eps->at(*a, g), ea) != ea) fixes = false;
      }
      if (fixes) rep.eps_set.push_back(g);
    }
    GxReport ge = compute_GX(*a, frame, all, test_set, strategy);
    if (ge.undecided > 0) {
      rep.gx_matches_eps = Decision::undecided;
    } else {
      std::set<GroupElem> l(ge.members.begin(), ge.members.end()), r(rep.eps_set.begin(), rep.eps_set.end());
      rep.gx_matches_eps = l == r ? Decision::yes : Decision::no;
    }
  } else {
    rep.notes.push_back("no epsilon system: the eps characterisation of G_E is skipped");
  }

  rep.gx = compute_GX(*a, frame, x, test_set, strategy);
  if (rep.gx.undecided > 0) rep.notes.push_back("undecided G_X membership; A_{G_X} built from decided members");
  auto sub = std::make_shared<const GradedRing>(restrict_to_subgroup(*a, rep.gx.members));
  rep.subring_epsilon_strong = detect_epsilon(*sub).ok;
  Module q = frame_module(frame, x.front());
  for (std::size_t k = 1; k < x.size(); ++k) q = direct_sum(q, frame_module(frame, x[k]));
  Module qs = Module::left_module(sub->base(), q.dim(), q.left());
  EndRing end = build_end_ring(induce(sub, qs));
  rep.end_dim = end.ring->algebra().dim();
  rep.end_crossed = is_epsilon_crossed_product(*end.ring, strategy).decision;

  rep.pics_permutes = Decision::yes;
  std::size_t members = 0;
  for (const auto& g : a->support()) {
    Module p = a->component_bimodule(g);
    if (!pics_membership(p).member) continue;
    ++members;
    for (std::size_t i = 0; i < frame.e.size(); ++i) {
      Module t = tensor_over(p, frame_module(frame, i)).module;
      if (t.dim() == 0) continue;
      Decision found = Decision::no;
      for (std::size_t j = 0; j < frame.e.size() && found != Decision::yes; ++j) {
        auto d = is_isomorphic(t, frame_module(frame, j), strategy).decision;
        if (d == Decision::yes || found == Decision::no) found = d;
      }
      rep.pics_permutes = meet(rep.pics_permutes, found);
    }
  }
  if (members == 0) rep.notes.push_back("no component lies in PicS");
  return rep;
}

bool IndexPartialAction::global(std::size_t n) const {
  for (const auto& [g, d] : domains)
    if (d.size() != n) return false;
  return true;
}

IndexPartialAction index_partial_action(const GradedRing& a, const IdempotentFrame& frame,
                                        const std::vector<GroupElem>& test_set, const SearchStrategy& strategy) {
  const Group& grp = a.group();
  const std::size_t n = frame.e.size();
  IndexPartialAction act;
  auto fail = [&](const std::string& s) { act.violations.push_back(s); };
  for (const auto& g : test_set) {
    auto& map = act.maps[g];
    auto& dom = act.domains[g];
    for (std::size_t i = 0; i < n; ++i) {
      Module t = translate(a, frame, grp.inverse(g), i);
      bool undecided = false;
      for (std::size_t j = 0; j < n; ++j) {
        auto d = is_isomorphic(t, frame_module(frame, j), strategy).decision;
        if (d == Decision::yes) {
          if (map.count(i)) fail("alpha_" + grp.to_string(g) + " is not a function at " + std::to_string(i));
          map[i] = j;
          dom.insert(j);
        }
        if (d == Decision::undecided) undecided = true;
      }
      if (undecided) ++act.undecided;
    }
  }
  auto name = [&](const GroupElem& g) { return grp.to_string(g); };
  auto domain_of = [&](const GroupElem& g) {
    std::set<std::size_t> s;
    for (const auto& [i, j] : act.maps.at(g)) s.insert(i);
    return s;
  };
  for (const auto& g : test_set) {
    const auto& m = act.maps.at(g);
    if (act.domains.at(g).size() != m.size()) fail("alpha_" + name(g) + " is not injective");
    if (g == grp.identity()) {
      for (std::size_t i = 0; i < n; ++i)
        if (!m.count(i) || m.at(i) != i) fail("alpha_1 is not the identity");
    }
    const GroupElem gi = grp.inverse(g);
    if (act.maps.count(gi)) {
      if (act.domains.at(gi) != act.domains.at(g)) fail("I_" + name(gi) + " != I_" + name(g));
      if (domain_of(g) != act.domains.at(gi)) fail("alpha_" + name(g) + " is not defined on I_" + name(gi));
      for (const auto& [i, j] : m) {
        const auto& mi = act.maps.at(gi);
        if (!mi.count(j) || mi.at(j) != i) fail("alpha_" + name(gi) + " is not the inverse of alpha_" + name(g));
      }
    }
    for (const auto& h : test_set) {
      const GroupElem gh = grp.mul(g, h);
      if (!act.maps.count(gh)) continue;
      const auto& mh = act.maps.at(h);
      const auto& mgh = act.maps.at(gh);
      for (const auto& [i, j] : mh)
        if (m.count(j) && (!mgh.count(i) || mgh.at(i) != m.at(j)))
          fail("alpha_" + name(gh) + " does not extend alpha_" + name(g) + " alpha_" + name(h));
    }
  }
  return act;
}

}  // namespace grado
