#include "grado/center.hpp"

#include <random>

#include "grado/module.hpp"

namespace grado {

EpsilonDecomposition decompose_epsilon(const GradedRing& a, const EpsilonSystem& eps, const GroupElem& g,
                                       std::uint64_t variant) {
  const Algebra& alg = a.algebra();
  EpsilonDecomposition d{g, {}};
  if (g == a.group().identity()) {
    d.pairs.push_back({alg.one(), alg.one()});
    return d;
  }
  const GroupElem gi = a.group().inverse(g);
  const auto& ig = a.indices(g);
  const auto& igi = a.indices(gi);
  std::vector<Vec> cols;
  for (auto i : ig)
    for (auto j : igi) cols.push_back(alg.structure(i, j));
  if (cols.empty()) {
    if (!is_zero(eps.at(a, g))) throw VerificationError("nonzero eps_g with an empty component");
    return d;
  }
  Matrix m = Matrix::from_columns(alg.field(), alg.dim(), cols);
  auto sol = solve_linear(m, eps.at(a, g));
  if (!sol.consistent) throw VerificationError("eps_g is not in A_g A_g^-1");
  Vec c = *sol.particular;
  if (variant > 0) {
    std::mt19937_64 rng(variant);
    for (const auto& k : sol.kernel) axpy(c, alg.field().random(rng), k);
  }
  for (std::size_t p = 0; p < ig.size(); ++p)
    for (std::size_t q = 0; q < igi.size(); ++q) {
      const Scalar& coef = c[p * igi.size() + q];
      if (!coef.is_zero()) d.pairs.push_back({scale(coef, alg.basis(ig[p])), alg.basis(igi[q])});
    }
  return d;
}

Matrix gamma_matrix(const GradedRing& a, const EpsilonDecomposition& d) {
  const Algebra& alg = a.algebra();
  const GroupElem one = a.group().identity();
  const std::size_t n = a.component_dim(one);
  Matrix out(alg.field(), n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec x = a.embed(one, unit_vec(alg.field(), n, j));
    Vec y = alg.zero();
    for (const auto& [u, v] : d.pairs) y = add(y, alg.mul(alg.mul(u, x), v));
    if (!a.is_homogeneous(y, one)) throw VerificationError("Gamma_g leaves R");
    Vec col = a.restrict(one, y);
    for (std::size_t i = 0; i < n; ++i) out.at(i, j) = col[i];
  }
  return out;
}

Vec PartialCenterAction::eps_at(const GroupElem& g) const {
  auto it = eps.find(g);
  return it == eps.end() ? zero_vec(center.field(), center.ambient_dim()) : it->second;
}

Vec PartialCenterAction::apply(const GroupElem& g, const Vec& z) const {
  auto it = maps.find(g);
  return it == maps.end() ? zero_vec(center.field(), center.ambient_dim()) : it->second * z;
}

namespace {

Subspace scaled_by(const Algebra& r, const Subspace& z, const Vec& e) { return right_ideal_span(r, z, e); }

}  // namespace

PartialCenterAction gamma_action(const GradedRing& a, const EpsilonSystem& eps, std::uint64_t variant) {
  const Algebra& r = *a.base();
  const Group& grp = a.group();
  const GroupElem one = grp.identity();
  PartialCenterAction act{a.base(), center(r), {}, {}, {}, grp};
  for (const auto& g : a.support()) act.eps[g] = a.restrict(one, eps.at(a, g));
  for (const auto& g : a.support()) {
    act.domains.emplace(g, scaled_by(r, act.center, act.eps[g]));
    act.maps.emplace(g, gamma_matrix(a, decompose_epsilon(a, eps, g, variant)));
  }
  for (const auto& g : a.support()) {
    const GroupElem gi = grp.inverse(g);
    const Subspace& src = act.domains.at(gi);
    std::vector<Vec> images;
    for (const auto& z : src.basis()) {
      images.push_back(act.apply(g, z));
      if (act.apply(gi, images.back()) != z) throw VerificationError("gamma_g^-1 does not invert gamma_g");
    }
    if (Subspace(r.field(), r.dim(), images) != act.domains.at(g))
      throw VerificationError("gamma_g does not map Z(R) eps_g^-1 onto Z(R) eps_g");
    if (g == one)
      for (const auto& z : act.center.basis())
        if (act.apply(g, z) != z) throw VerificationError("gamma_1 is not the identity");
    for (const auto& h : a.support()) {
      const GroupElem gh = grp.mul(g, h);
      Subspace dom = scaled_by(r, act.domains.at(grp.inverse(h)), act.eps_at(grp.inverse(gh)));
      for (const auto& x : dom.basis())
        if (act.apply(g, act.apply(h, x)) != act.apply(gh, x))
          throw VerificationError("gamma_g gamma_h differs from gamma_gh");
    }
  }
  if (!eqga_holds(a, act)) throw VerificationError("gamma_g(r) a_g != a_g r");
  return act;
}

bool eqga_holds(const GradedRing& a, const PartialCenterAction& act) {
  const Algebra& alg = a.algebra();
  const GroupElem one = a.group().identity();
  for (const auto& g : a.support())
    for (const auto& z : act.center.basis()) {
      Vec gz = a.embed(one, act.apply(g, z));
      Vec zz = a.embed(one, z);
      for (auto i : a.indices(g))
        if (alg.mul(gz, alg.basis(i)) != alg.mul(alg.basis(i), zz)) return false;
    }
  return true;
}

bool gamma_decomposition_independent(const GradedRing& a, const EpsilonSystem& eps, std::uint64_t variant) {
  auto p = gamma_action(a, eps, 0);
  auto q = gamma_action(a, eps, variant);
  for (const auto& g : a.support())
    for (const auto& z : p.domains.at(a.group().inverse(g)).basis())
      if (p.apply(g, z) != q.apply(g, z)) return false;
  return true;
}

Subspace invariants(const Subspace& z, const PartialCenterAction& act) {
  const Algebra& r = *act.ring;
  const Field& f = r.field();
  std::vector<Vec> cols(z.dim());
  for (const auto& [g, m] : act.maps) {
    const Vec eg = act.eps_at(g), egi = act.eps_at(act.group.inverse(g));
    for (std::size_t k = 0; k < z.dim(); ++k) {
      const Vec& t = z.basis()[k];
      Vec cond = sub(act.apply(g, r.mul(t, egi)), r.mul(t, eg));
      cols[k].insert(cols[k].end(), cond.begin(), cond.end());
    }
  }
  if (z.dim() == 0 || cols[0].empty()) return z;
  std::vector<Vec> out;
  for (const auto& c : nullspace(Matrix::from_columns(f, cols[0].size(), cols))) {
    Vec t = zero_vec(f, z.ambient_dim());
    for (std::size_t k = 0; k < z.dim(); ++k) axpy(t, c[k], z.basis()[k]);
    out.push_back(std::move(t));
  }
  return Subspace(f, z.ambient_dim(), out);
}

Subspace invariants(const PartialCenterAction& act) { return invariants(act.center, act); }

std::optional<GaloisCoordinates> galois_check(const Algebra& r, const PartialCenterAction& act) {
  if (!r.is_commutative()) throw PreconditionError("partial Galois test needs a commutative ring");
  const Field& f = r.field();
  const std::size_t m = r.dim();
  const GroupElem one = act.group.identity();
  // Unknowns x_i in R at i*m + k; one block of m equations per degree.
  std::vector<Vec> rows;
  Vec rhs;
  for (const auto& [g, mat] : act.maps) {
    const Vec egi = act.eps_at(act.group.inverse(g));
    std::vector<Matrix> blocks;
    for (std::size_t i = 0; i < m; ++i) blocks.push_back(r.right_mult(act.apply(g, r.mul(r.basis(i), egi))));
    for (std::size_t row = 0; row < m; ++row) {
      Vec eq = zero_vec(f, m * m);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k) eq[i * m + k] = blocks[i].at(row, k);
      rows.push_back(std::move(eq));
      rhs.push_back(g == one ? r.one()[row] : f.zero());
    }
  }
  auto sol = solve_linear(Matrix::from_rows(f, m * m, rows), rhs);
  if (!sol.consistent) return std::nullopt;
  GaloisCoordinates c;
  for (std::size_t i = 0; i < m; ++i) {
    c.xs.emplace_back(sol.particular->begin() + i * m, sol.particular->begin() + (i + 1) * m);
    c.ys.push_back(r.basis(i));
  }
  if (!verify_galois(r, act, c)) throw VerificationError("Galois coordinates fail re-verification");
  return c;
}

bool verify_galois(const Algebra& r, const PartialCenterAction& act, const GaloisCoordinates& c) {
  for (const auto& [g, mat] : act.maps) {
    const Vec egi = act.eps_at(act.group.inverse(g));
    Vec sum = r.zero();
    for (std::size_t i = 0; i < c.xs.size(); ++i) sum = add(sum, r.mul(c.xs[i], act.apply(g, r.mul(c.ys[i], egi))));
    if (sum != (g == act.group.identity() ? r.one() : r.zero())) return false;
  }
  return true;
}

AzumayaReport azumaya_check(const GradedRing& a, const Subspace& s) {
  const Algebra& alg = a.algebra();
  const Field& f = alg.field();
  const GroupElem one = a.group().identity();
  if (!a.base()->is_commutative()) throw PreconditionError("Azumaya test needs a commutative R");
  AzumayaReport rep;
  std::vector<Vec> sbasis;
  for (const auto& v : s.basis()) sbasis.push_back(a.embed(one, v));
  const Subspace s_in_a(f, alg.dim(), sbasis);
  if (!s_in_a.contains(alg.one())) throw PreconditionError("S does not contain 1");

  rep.center_ok = center(alg) == s_in_a;
  if (!rep.center_ok) rep.detail += "Z(A) differs from S; ";

  auto sp = std::make_shared<const Algebra>(subalgebra(alg, s_in_a.basis(), alg.one()));
  auto ap = a.algebra_ptr();
  std::vector<Matrix> a_left, a_right, s_left, s_right;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    a_left.push_back(alg.left_basis_mult(i));
    a_right.push_back(alg.right_basis_mult(i));
  }
  for (const auto& v : s_in_a.basis()) {
    s_left.push_back(alg.left_mult(v));
    s_right.push_back(alg.right_mult(v));
  }
  Module first(f, ap, sp, alg.dim(), a_left, s_right);
  Module second(f, sp, ap, alg.dim(), s_left, a_right);
  TensorProduct t = tensor_over(first, second);
  const std::size_t q = t.quotient.dim();
  rep.tensor_dim = q;

  // mu(x (x) y) = xy on the quotient basis, then [mu; L_i - R_i] e = [1; 0].
  std::vector<Vec> rows;
  Vec rhs;
  Matrix mu(f, alg.dim(), q);
  for (std::size_t k = 0; k < q; ++k) {
    Vec amb = t.quotient.lift(k);
    Vec prod = alg.zero();
    for (std::size_t p = 0; p < amb.size(); ++p)
      if (!amb[p].is_zero()) axpy(prod, amb[p], alg.structure(p / alg.dim(), p % alg.dim()));
    for (std::size_t i = 0; i < alg.dim(); ++i) mu.at(i, k) = prod[i];
  }
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    rows.push_back(mu.row(i));
    rhs.push_back(alg.one()[i]);
  }
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    Matrix d = t.module.left()[i] - t.module.right()[i];
    for (std::size_t r = 0; r < q; ++r) {
      rows.push_back(d.row(r));
      rhs.push_back(f.zero());
    }
  }
  auto sol = q == 0 ? LinearSolution{} : solve_linear(Matrix::from_rows(f, q, rows), rhs);
  rep.separable = sol.consistent;
  if (sol.consistent)
    rep.separability_idempotent = *sol.particular;
  else
    rep.detail += "no separability idempotent; ";

  const Subspace r = a.component(one);
  rep.maximal_commutative = centralizer(alg, r) == r;
  if (!rep.maximal_commutative) rep.detail += "R is not maximal commutative; ";
  return rep;
}

bool delta_phi_consistent(const GradedRing& a, const EpsilonSystem& eps) {
  const Algebra& alg = a.algebra();
  for (const auto& g : a.support()) {
    const Vec eg = eps.at(a, g);
    for (const auto& h : a.support())
      for (auto i : a.indices(g))
        for (auto j : a.indices(h)) {
          const Vec& p = alg.structure(i, j);
          if (alg.mul(eg, p) != p) return false;
        }
  }
  return true;
}

}  // namespace grado
