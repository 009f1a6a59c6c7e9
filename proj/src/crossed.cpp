#include "grado/crossed.hpp"

#include <algorithm>
#include <set>

namespace grado {

Vec TwistedPartialAction::idem_at(const GroupElem& g) const {
  auto it = idem.find(g);
  return it == idem.end() ? base->zero() : it->second;
}

Vec TwistedPartialAction::apply_alpha(const GroupElem& g, const Vec& x) const {
  auto it = alpha.find(g);
  return it == alpha.end() ? base->zero() : it->second * x;
}

Twist TwistedPartialAction::omega_at(const GroupElem& g, const GroupElem& h) const {
  auto it = omega.find({g, h});
  if (it != omega.end()) return it->second;
  Vec e = base->mul(idem_at(g), idem_at(group.mul(g, h)));
  return {e, e};
}

std::vector<GroupElem> TwistedPartialAction::domain_support() const {
  std::vector<GroupElem> out;
  for (const auto& [g, e] : idem)
    if (!is_zero(e)) out.push_back(g);
  return out;
}

TwistedPartialAction trivial_global_action(AlgebraPtr base, Group group) {
  TwistedPartialAction t{base, group, {}, {}, {}};
  for (const auto& g : group.elements()) {
    t.idem[g] = base->one();
    t.alpha.insert_or_assign(g, Matrix::identity(base->field(), base->dim()));
  }
  return t;
}

namespace {

std::string degs(const Group& grp, const std::vector<GroupElem>& ds) {
  std::string s;
  for (std::size_t i = 0; i < ds.size(); ++i) s += (i ? "," : "") + grp.to_string(ds[i]);
  return s;
}

Subspace ideal_of(const Algebra& a, const Vec& e) { return right_ideal_span(a, Subspace::whole(a.field(), a.dim()), e); }

}  // namespace

TpaReport verify_tpa(const TwistedPartialAction& t, const std::vector<GroupElem>& degrees_in) {
  TpaReport rep;
  const Algebra& a = *t.base;
  const Group& grp = t.group;
  const GroupElem one = grp.identity();
  std::vector<GroupElem> degrees = degrees_in;
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  auto fail = [&](std::string axiom, std::vector<GroupElem> ds, std::string detail) {
    rep.failures.push_back({std::move(axiom), std::move(ds), std::move(detail)});
  };
  auto in_set = [&](const GroupElem& g) { return std::binary_search(degrees.begin(), degrees.end(), g); };

  for (const auto& g : t.domain_support())
    if (!in_set(g) || !in_set(grp.inverse(g)))
      fail("precondition", {g}, "degree set misses a degree with 1_g != 0 or its inverse");

  for (const auto& g : degrees) {
    ++rep.instances;
    const GroupElem gi = grp.inverse(g);
    const Vec e = t.idem_at(g), ei = t.idem_at(gi);
    if (!a.is_idempotent(e) || !a.is_central(e)) fail("idempotent", {g}, "1_g is not a central idempotent");
    Subspace dg = ideal_of(a, e), dgi = ideal_of(a, ei);
    std::vector<Vec> images;
    for (const auto& x : dgi.basis()) images.push_back(t.apply_alpha(g, x));
    Subspace img(a.field(), a.dim(), images);
    if (img != dg || dgi.dim() != dg.dim()) fail("alpha", {g}, "alpha_g does not map D_g^-1 onto D_g");
    if (t.apply_alpha(g, ei) != e) fail("alpha", {g}, "alpha_g(1_g^-1) != 1_g");
    bool mult = true;
    for (std::size_t i = 0; i < dgi.dim() && mult; ++i)
      for (std::size_t j = 0; j < dgi.dim() && mult; ++j)
        mult = t.apply_alpha(g, a.mul(dgi.basis()[i], dgi.basis()[j])) == a.mul(images[i], images[j]);
    if (!mult) fail("alpha", {g}, "alpha_g is not multiplicative");
    if (g == one) {
      if (e != a.one()) fail("T1", {g}, "D_1 != A");
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (t.apply_alpha(g, a.basis(k)) != a.basis(k)) {
          fail("T1", {g}, "alpha_1 is not the identity");
          break;
        }
    }
  }

  for (const auto& g : degrees)
    for (const auto& h : degrees) {
      ++rep.instances;
      const GroupElem gh = grp.mul(g, h), gi = grp.inverse(g);
      const Vec e_g = t.idem_at(g), e_gh = t.idem_at(gh), e_gi = t.idem_at(gi), e_h = t.idem_at(h);
      const Vec corner = a.mul(e_g, e_gh);
      const Twist w = t.omega_at(g, h);
      if (a.mul(w.value, corner) != w.value || a.mul(w.inverse, corner) != w.inverse ||
          a.mul(w.value, w.inverse) != corner || a.mul(w.inverse, w.value) != corner)
        fail("omega-unit", {g, h}, "omega_{g,h} is not a unit of D_g D_gh with the given inverse");

      const Vec src = a.mul(e_gi, e_h);
      std::vector<Vec> images;
      const Subspace src_ideal = ideal_of(a, src);
      for (const auto& x : src_ideal.basis()) images.push_back(t.apply_alpha(g, x));
      const bool t2 = Subspace(a.field(), a.dim(), images) == ideal_of(a, corner);
      if (!t2) fail("T2", {g, h}, "alpha_g(D_g^-1 D_h) != D_g D_gh");
      if (t.apply_alpha(g, src) != corner) {
        fail("afgh", {g, h}, "alpha_g(1_g^-1 1_h) != 1_g 1_gh");
        if (t2) rep.afgh_follows_from_t2 = false;
      }

      const Vec dom = a.mul(t.idem_at(grp.inverse(h)), t.idem_at(grp.inverse(gh)));
      const Subspace dom_ideal = ideal_of(a, dom);
      for (const auto& x : dom_ideal.basis()) {
        Vec lhs = t.apply_alpha(g, t.apply_alpha(h, x));
        Vec rhs = a.mul(a.mul(w.value, t.apply_alpha(gh, x)), w.inverse);
        if (lhs != rhs) {
          fail("T3", {g, h}, "alpha_g alpha_h differs from conjugated alpha_gh");
          break;
        }
      }
      if (g == one && t.omega_at(g, h).value != e_h) fail("T4", {g, h}, "omega_{1,h} != 1_h");
      if (h == one && t.omega_at(g, h).value != e_g) fail("T4", {g, h}, "omega_{g,1} != 1_g");
    }

  for (const auto& g : degrees)
    for (const auto& h : degrees)
      for (const auto& l : degrees) {
        ++rep.instances;
        const GroupElem gh = grp.mul(g, h), hl = grp.mul(h, l);
        Vec lhs = a.mul(t.apply_alpha(g, a.mul(t.omega_at(h, l).value, t.idem_at(grp.inverse(g)))),
                        t.omega_at(g, hl).value);
        Vec rhs = a.mul(t.omega_at(g, h).value, t.omega_at(gh, l).value);
        if (lhs != rhs) fail("T5", {g, h, l}, "cocycle identity fails");
      }
  return rep;
}

TpaReport verify_tpa(const TwistedPartialAction& t) {
  std::vector<GroupElem> ds;
  for (const auto& g : t.domain_support()) {
    ds.push_back(g);
    ds.push_back(t.group.inverse(g));
  }
  ds.push_back(t.group.identity());
  return verify_tpa(t, ds);
}

Vec CrossedProduct::embed(const GroupElem& g, const Vec& d) const {
  auto it = domain_basis.find(g);
  const Algebra& base = *source.base;
  if (it == domain_basis.end()) {
    if (is_zero(d)) return ring->algebra().zero();
    throw PreconditionError("element outside D_g");
  }
  auto c = Subspace(base.field(), base.dim(), it->second).coordinates(d);
  if (!c) throw PreconditionError("element outside D_g");
  Vec out = ring->algebra().zero();
  const std::size_t off = offset.at(g);
  for (std::size_t i = 0; i < c->size(); ++i) out[off + i] = (*c)[i];
  return out;
}

EpsilonSystem CrossedProduct::canonical_epsilon() const {
  EpsilonSystem eps;
  const GroupElem one = source.group.identity();
  for (const auto& g : source.domain_support()) eps.eps[g] = embed(one, source.idem_at(g));
  return eps;
}

CrossedProduct build_crossed_product(const TwistedPartialAction& t) {
  auto rep = verify_tpa(t);
  if (!rep.ok())
    throw ConstructionError("twisted partial action fails " + rep.failures.front().axiom + " at (" +
                            degs(t.group, rep.failures.front().degrees) + "): " + rep.failures.front().detail);
  const Algebra& a = *t.base;
  const Field& f = a.field();
  CrossedProduct cp;
  cp.source = t;
  std::map<GroupElem, Subspace> dom;
  std::vector<std::string> names;
  std::vector<GroupElem> degrees;
  std::size_t n = 0;
  for (const auto& g : t.domain_support()) {
    Subspace d = ideal_of(a, t.idem_at(g));
    cp.offset[g] = n;
    cp.domain_basis[g] = d.basis();
    for (std::size_t i = 0; i < d.dim(); ++i) {
      names.push_back("d" + std::to_string(i) + "@" + t.group.to_string(g));
      degrees.push_back(g);
    }
    n += d.dim();
    dom.emplace(g, std::move(d));
  }
  std::vector<std::pair<GroupElem, std::size_t>> where(n);
  for (const auto& [g, off] : cp.offset)
    for (std::size_t i = 0; i < cp.domain_basis[g].size(); ++i) where[off + i] = {g, i};

  std::vector<std::vector<Vec>> mul(n, std::vector<Vec>(n));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const auto& [g, i] = where[p];
      const auto& [h, j] = where[q];
      const GroupElem gh = t.group.mul(g, h);
      const Vec& x = cp.domain_basis[g][i];
      const Vec& y = cp.domain_basis[h][j];
      Vec r = a.mul(a.mul(x, t.apply_alpha(g, a.mul(y, t.idem_at(t.group.inverse(g))))), t.omega_at(g, h).value);
      Vec out = zero_vec(f, n);
      if (!is_zero(r)) {
        auto it = dom.find(gh);
        auto c = it == dom.end() ? std::nullopt : it->second.coordinates(r);
        if (!c) throw ConstructionError("product leaves D_gh");
        for (std::size_t k = 0; k < c->size(); ++k) out[cp.offset[gh] + k] = (*c)[k];
      }
      mul[p][q] = std::move(out);
    }
  const GroupElem one = t.group.identity();
  Vec unit = zero_vec(f, n);
  auto uc = dom.at(one).coordinates(a.one());
  for (std::size_t k = 0; k < uc->size(); ++k) unit[cp.offset[one] + k] = (*uc)[k];
  try {
    auto alg = std::make_shared<const Algebra>(f, std::move(names), std::move(mul), std::move(unit));
    cp.ring = std::make_shared<const GradedRing>(std::move(alg), t.group, std::move(degrees));
  } catch (const InputError& e) {
    throw ConstructionError(std::string("partial crossed product does not validate: ") + e.what());
  }
  return cp;
}

Extraction extract_tpa(const GradedRing& a, const EpsilonSystem& eps,
                       const std::map<GroupElem, EpsilonInvertibleWitness>& witnesses) {
  const Algebra& alg = a.algebra();
  const Group& grp = a.group();
  const GroupElem one = grp.identity();
  const AlgebraPtr& r = a.base();
  const Field& f = alg.field();

  std::map<GroupElem, std::pair<Vec, Vec>> s;
  for (const auto& g : a.support()) {
    if (g == one) {
      s[g] = {alg.one(), alg.one()};
      continue;
    }
    auto it = witnesses.find(g);
    if (it == witnesses.end()) throw ExtractionInvalid("no witness for degree " + grp.to_string(g));
    if (!verify_witness(a, eps, it->second)) throw ExtractionInvalid("witness fails at degree " + grp.to_string(g));
    s[g] = {it->second.s, it->second.inverse};
  }
  auto sv = [&](const GroupElem& g) { return s.count(g) ? s[g].first : alg.zero(); };
  auto sbar = [&](const GroupElem& g) { return s.count(g) ? s[g].second : alg.zero(); };
  auto to_r = [&](const Vec& x) { return a.restrict(one, x); };

  TwistedPartialAction t{r, grp, {}, {}, {}};
  for (const auto& g : a.support()) {
    t.idem[g] = to_r(eps.at(a, g));
    Matrix m(f, r->dim(), r->dim());
    for (std::size_t j = 0; j < r->dim(); ++j) {
      Vec col = to_r(alg.mul(alg.mul(sv(g), a.embed(one, r->basis(j))), sbar(g)));
      for (std::size_t i = 0; i < r->dim(); ++i) m.at(i, j) = col[i];
    }
    t.alpha.emplace(g, std::move(m));
  }
  for (const auto& g : a.support())
    for (const auto& h : a.support()) {
      const GroupElem gh = grp.mul(g, h);
      t.omega[{g, h}] = {to_r(alg.mul(alg.mul(sv(g), sv(h)), sbar(gh))),
                         to_r(alg.mul(alg.mul(sv(gh), sbar(h)), sbar(g)))};
    }

  auto rep = verify_tpa(t, a.support());
  if (!rep.ok())
    throw ExtractionInvalid("extracted action fails " + rep.failures.front().axiom + " at (" +
                            degs(grp, rep.failures.front().degrees) + ")");
  Extraction ex{t, {}, Matrix(f, 0, 0)};
  try {
    ex.crossed = build_crossed_product(t);
  } catch (const Error& e) {
    throw ExtractionInvalid(std::string("crossed product of the extracted action: ") + e.what());
  }
  const Algebra& c = ex.crossed.ring->algebra();
  if (c.dim() != alg.dim()) throw ExtractionInvalid("crossed product dimension differs from A");
  std::vector<Vec> cols;
  try {
    for (std::size_t k = 0; k < alg.dim(); ++k) {
      const GroupElem& g = a.degrees()[k];
      cols.push_back(ex.crossed.embed(g, to_r(alg.mul(alg.basis(k), sbar(g)))));
    }
  } catch (const PreconditionError&) {
    throw ExtractionInvalid("a_g sbar_g lies outside D_g");
  }
  ex.iso = Matrix::from_columns(f, c.dim(), cols);
  if (!invertible(ex.iso)) throw ExtractionInvalid("graded map to the crossed product is not bijective");
  if (ex.iso * alg.one() != c.one()) throw ExtractionInvalid("graded map does not preserve the unit");
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = 0; j < alg.dim(); ++j)
      if (ex.iso * alg.structure(i, j) != c.mul(cols[i], cols[j]))
        throw ExtractionInvalid("graded map to the crossed product is not multiplicative");
  return ex;
}

}  // namespace grado
