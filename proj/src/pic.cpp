#include "grado/pic.hpp"

namespace grado {

namespace {

Decision iso_decision(const Module& x, const Module& y, const SearchStrategy& s, std::string& detail,
                      const std::string& what) {
  auto r = is_isomorphic(x, y, s);
  if (r.decision != Decision::yes) detail += what + ": " + to_string(r.decision) + " (" + r.reason + "); ";
  return r.decision;
}

Decision combine(Decision a, Decision b) {
  if (a == Decision::no || b == Decision::no) return Decision::no;
  if (a == Decision::undecided || b == Decision::undecided) return Decision::undecided;
  return Decision::yes;
}

Matrix restrict(const Matrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  Matrix out(m.field(), rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) out.at(r, c) = m.at(rows[r], cols[c]);
  return out;
}

/// M_h as an (R,R)-bimodule.
Module component_of(const GradedRing& a, const GradedBimodule& m, const GroupElem& h) {
  const auto idx = m.indices(h);
  std::vector<Matrix> left, right;
  for (auto i : a.indices(a.group().identity())) {
    left.push_back(restrict(m.module.left()[i], idx, idx));
    right.push_back(restrict(m.module.right()[i], idx, idx));
  }
  return Module::bimodule(a.base(), idx.size(), std::move(left), std::move(right));
}

struct MulCheck {
  bool ok = false;
  std::size_t dim = 0;
  Matrix map;
  std::string detail;
};

/// A_x (x)_R M_y -> M_xy, a (x) m |-> a m, compared with the image eps M_xy.
MulCheck check_multiplication(const GradedRing& a, const GradedBimodule& m, const GroupElem& x, const GroupElem& y,
                              const Vec& eps) {
  const Field& f = a.field();
  const GroupElem xy = a.group().mul(x, y);
  const auto& ax = a.indices(x);
  const auto my = m.indices(y), mxy = m.indices(xy);
  Module mod_y = component_of(a, m, y), mod_xy = component_of(a, m, xy);
  TensorProduct t = tensor_over(a.component_bimodule(x), mod_y);
  MulCheck res{false, t.quotient.dim(), Matrix(f, mxy.size(), t.quotient.dim()), ""};

  Matrix amb(f, mxy.size(), ax.size() * my.size());
  for (std::size_t i = 0; i < ax.size(); ++i) {
    Matrix part = restrict(m.module.left()[ax[i]], mxy, my);
    for (std::size_t j = 0; j < my.size(); ++j)
      for (std::size_t r = 0; r < mxy.size(); ++r) amb.at(r, i * my.size() + j) = part.at(r, j);
  }
  for (std::size_t k = 0; k < t.quotient.dim(); ++k) {
    Vec col = amb * t.quotient.lift(k);
    for (std::size_t r = 0; r < mxy.size(); ++r) res.map.at(r, k) = col[r];
  }
  for (std::size_t v = 0; v < amb.cols(); ++v) {
    Vec e = unit_vec(f, amb.cols(), v);
    if (amb * e != res.map * t.quotient.project(e)) {
      res.detail = "multiplication does not factor through the tensor product";
      return res;
    }
  }
  Matrix eps_act = restrict(m.module.act_left(eps), mxy, mxy);
  Subspace target(f, mxy.size(), eps_act.column_list());
  Subspace image(f, mxy.size(), res.map.column_list());
  if (image != target) {
    res.detail = "image differs from eps M";
    return res;
  }
  if (rank(res.map) != t.quotient.dim()) {
    res.detail = "multiplication map is not injective";
    return res;
  }
  for (std::size_t r = 0; r < t.module.left().size(); ++r)
    if (res.map * t.module.left()[r] != mod_xy.left()[r] * res.map ||
        res.map * t.module.right()[r] != mod_xy.right()[r] * res.map) {
      res.detail = "multiplication map is not R-bilinear";
      return res;
    }
  res.ok = true;
  return res;
}

}  // namespace

PhiReport phi_partial_rep_check(const GradedRing& a, const EpsilonSystem& eps,
                                const std::vector<std::pair<GroupElem, GroupElem>>& pairs,
                                const SearchStrategy& strategy) {
  PhiReport rep;
  const Group& grp = a.group();
  auto comp = [&](const GroupElem& g) { return a.component_bimodule(g); };
  auto tensor = [](const Module& x, const Module& y) { return tensor_over(x, y).module; };
  for (const auto& [g, h] : pairs) {
    PhiCheck c;
    c.g = g;
    c.h = h;
    const GroupElem gi = grp.inverse(g), hi = grp.inverse(h), gh = grp.mul(g, h);
    c.left_triple = iso_decision(tensor(tensor(comp(gi), comp(g)), comp(h)), tensor(comp(gi), comp(gh)), strategy,
                                 c.detail, "left triple");
    c.right_triple = iso_decision(tensor(tensor(comp(g), comp(h)), comp(hi)), tensor(comp(gh), comp(hi)), strategy,
                                  c.detail, "right triple");
    Module corner = ideal_bimodule(a.base(), a.restrict(grp.identity(), eps.at(a, g)));
    c.corner = iso_decision(tensor(comp(g), comp(gi)), corner, strategy, c.detail, "corner");
    rep.overall = combine(rep.overall, combine(c.left_triple, combine(c.right_triple, c.corner)));
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

std::vector<std::size_t> GradedBimodule::indices(const GroupElem& g) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < degrees.size(); ++i)
    if (degrees[i] == g) out.push_back(i);
  return out;
}

GradedBimodule regular_graded_bimodule(const GradedRing& a) {
  return {Module::regular_bimodule(a.algebra_ptr()), a.degrees()};
}

bool IsomulReport::ok() const {
  for (const auto& c : checks)
    if (!c.mu_ok || !c.mu_tilde_ok || !c.context_ok) return false;
  return true;
}

IsomulReport verify_isomul(const GradedRing& a, const EpsilonSystem& eps, const GradedBimodule& m,
                           const std::vector<GroupElem>& degrees) {
  if (!m.module.has_left() || !m.module.has_right() || !same_ring(m.module.left_ring(), a.algebra_ptr()) ||
      !same_ring(m.module.right_ring(), a.algebra_ptr()))
    throw InputError("verify_isomul needs an (A,A)-bimodule");
  if (m.degrees.size() != m.module.dim()) throw DimensionMismatch("one degree per module basis vector is required");
  const Algebra& alg = a.algebra();
  const Group& grp = a.group();
  IsomulReport rep;
  for (const auto& g : degrees) {
    const GroupElem gi = grp.inverse(g), one = grp.identity();
    auto mu = check_multiplication(a, m, g, one, eps.at(a, g));
    auto mt = check_multiplication(a, m, gi, g, eps.at(a, gi));
    IsomulCheck c{g, mu.ok, mt.ok, true, mu.dim, mt.dim, mu.map, mt.map, mu.detail};
    if (!mt.detail.empty()) c.detail += (c.detail.empty() ? "" : "; ") + mt.detail;
    for (auto i : a.indices(g))
      for (auto j : a.indices(gi)) {
        Matrix li = m.module.left()[i], lj = m.module.left()[j];
        if (m.module.act_left(alg.structure(i, j)) != li * lj || m.module.act_left(alg.structure(j, i)) != lj * li)
          c.context_ok = false;
      }
    if (!c.context_ok) c.detail += (c.detail.empty() ? "" : "; ") + std::string("mixed associativity fails");
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

IsomulReport verify_isomul(const GradedRing& a, const EpsilonSystem& eps, const std::vector<GroupElem>& degrees) {
  return verify_isomul(a, eps, regular_graded_bimodule(a), degrees);
}

}  // namespace grado
