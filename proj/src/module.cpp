#include "grado/module.hpp"

#include <random>

namespace grado {

namespace {

Matrix combine(const Field& f, std::size_t dim, const std::vector<Matrix>& mats, const Vec& coeffs) {
  Matrix out(f, dim, dim);
  for (std::size_t i = 0; i < mats.size(); ++i)
    if (!coeffs[i].is_zero()) out = out + mats[i].scaled(coeffs[i]);
  return out;
}

void check_actions(const Algebra& r, std::size_t dim, const std::vector<Matrix>& acts, bool right_side,
                   const char* side) {
  if (acts.size() != r.dim())
    throw DimensionMismatch(std::string(side) + " action needs one matrix per ring basis element");
  for (const auto& m : acts)
    if (m.rows() != dim || m.cols() != dim)
      throw DimensionMismatch(std::string(side) + " action matrix has wrong shape");
  if (combine(r.field(), dim, acts, r.one()) != Matrix::identity(r.field(), dim))
    throw InputError(std::string(side) + " action is not unital");
  for (std::size_t i = 0; i < r.dim(); ++i)
    for (std::size_t j = 0; j < r.dim(); ++j) {
      Matrix lhs = combine(r.field(), dim, acts, r.structure(i, j));
      Matrix rhs = right_side ? acts[j] * acts[i] : acts[i] * acts[j];
      if (lhs != rhs)
        throw InputError(std::string(side) + " action is not associative at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
    }
}

// Block-diagonal k-fold copy of each matrix.
std::vector<Matrix> block_copies(const std::vector<Matrix>& mats, std::size_t k) {
  std::vector<Matrix> out;
  for (const auto& m : mats) {
    const std::size_t d = m.rows();
    Matrix b(m.field(), k * d, k * d);
    for (std::size_t t = 0; t < k; ++t)
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) b.at(t * d + r, t * d + c) = m.at(r, c);
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<Matrix> restrict_actions(const std::vector<Matrix>& acts, const Subspace& u) {
  std::vector<Matrix> out;
  for (const auto& a : acts) {
    Matrix m(u.field(), u.dim(), u.dim());
    for (std::size_t c = 0; c < u.dim(); ++c) {
      auto coords = u.coordinates(a * u.basis()[c]);
      if (!coords) throw InputError("subspace is not closed under the module action");
      for (std::size_t r = 0; r < u.dim(); ++r) m.at(r, c) = (*coords)[r];
    }
    out.push_back(std::move(m));
  }
  return out;
}

// Adds the linear conditions F*A = B*F on a dimN x dimM unknown F (row-major).
void add_intertwining(RowReducer& rr, const Matrix& a, const Matrix& b, std::size_t dm, std::size_t dn) {
  const Field& f = rr.field();
  const std::size_t unknowns = dm * dn;
  for (std::size_t k = 0; k < dn; ++k)
    for (std::size_t j = 0; j < dm; ++j) {
      if (rr.rank() == unknowns) return;
      Vec row = zero_vec(f, unknowns);
      for (std::size_t t = 0; t < dm; ++t)
        if (!a.at(t, j).is_zero()) row[k * dm + t] += a.at(t, j);
      for (std::size_t t = 0; t < dn; ++t)
        if (!b.at(k, t).is_zero()) row[t * dm + j] -= b.at(k, t);
      rr.add(row);
    }
}

std::size_t rank_of_span(const Field& f, const std::vector<Matrix>& mats) {
  if (mats.empty()) return 0;
  RowReducer rr(f, mats[0].rows() * mats[0].cols());
  for (const auto& m : mats) rr.add(m.flatten());
  return rr.rank();
}

std::optional<Matrix> first_invertible(const Field& f, std::size_t dim, const std::vector<Matrix>& hom,
                                       const SearchStrategy& s, bool exhaustive, std::uint64_t& count) {
  std::mt19937_64 rng(s.seed);
  if (!exhaustive) {
    for (std::uint64_t t = 0; t < s.trials; ++t) {
      Vec c;
      for (std::size_t i = 0; i < hom.size(); ++i) c.push_back(f.random(rng));
      ++count;
      Matrix m = linear_combination(c, hom);
      if (rank(m) == dim) return m;
    }
    return std::nullopt;
  }
  const std::uint32_t p = f.characteristic();
  std::vector<std::uint32_t> digits(hom.size(), 0);
  while (true) {
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
    if (i == digits.size()) break;
    Vec c;
    for (auto d : digits) c.push_back(f.element(d));
    ++count;
    Matrix m = linear_combination(c, hom);
    if (rank(m) == dim) return m;
  }
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------
// Module

Module::Module(const Field& field, AlgebraPtr left_ring, AlgebraPtr right_ring, std::size_t dim,
               std::vector<Matrix> left, std::vector<Matrix> right)
    : field_(field),
      left_ring_(std::move(left_ring)),
      right_ring_(std::move(right_ring)),
      dim_(dim),
      left_(std::move(left)),
      right_(std::move(right)) {
  if (left_ring_ && left_ring_->field() != field_) throw InputError("left ring field mismatch");
  if (right_ring_ && right_ring_->field() != field_) throw InputError("right ring field mismatch");
  if (!left_ring_ && !left_.empty()) throw InputError("left action given without a left ring");
  if (!right_ring_ && !right_.empty()) throw InputError("right action given without a right ring");
  validate();
}

void Module::validate() const {
  if (left_ring_) check_actions(*left_ring_, dim_, left_, false, "left");
  if (right_ring_) check_actions(*right_ring_, dim_, right_, true, "right");
  if (left_ring_ && right_ring_)
    for (std::size_t i = 0; i < left_.size(); ++i)
      for (std::size_t j = 0; j < right_.size(); ++j)
        if (left_[i] * right_[j] != right_[j] * left_[i])
          throw InputError("left and right actions do not commute at (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
}

Module Module::left_module(AlgebraPtr ring, std::size_t dim, std::vector<Matrix> left) {
  Field f = ring->field();
  return Module(f, std::move(ring), nullptr, dim, std::move(left), {});
}

Module Module::right_module(AlgebraPtr ring, std::size_t dim, std::vector<Matrix> right) {
  Field f = ring->field();
  return Module(f, nullptr, std::move(ring), dim, {}, std::move(right));
}

Module Module::bimodule(AlgebraPtr ring, std::size_t dim, std::vector<Matrix> left, std::vector<Matrix> right) {
  Field f = ring->field();
  AlgebraPtr r2 = ring;
  return Module(f, std::move(ring), std::move(r2), dim, std::move(left), std::move(right));
}

Module Module::regular_left(AlgebraPtr ring) {
  std::vector<Matrix> l;
  for (std::size_t i = 0; i < ring->dim(); ++i) l.push_back(ring->left_basis_mult(i));
  std::size_t d = ring->dim();
  return left_module(std::move(ring), d, std::move(l));
}

Module Module::regular_right(AlgebraPtr ring) {
  std::vector<Matrix> r;
  for (std::size_t i = 0; i < ring->dim(); ++i) r.push_back(ring->right_basis_mult(i));
  std::size_t d = ring->dim();
  return right_module(std::move(ring), d, std::move(r));
}

Module Module::regular_bimodule(AlgebraPtr ring) {
  std::vector<Matrix> l, r;
  for (std::size_t i = 0; i < ring->dim(); ++i) {
    l.push_back(ring->left_basis_mult(i));
    r.push_back(ring->right_basis_mult(i));
  }
  std::size_t d = ring->dim();
  return bimodule(std::move(ring), d, std::move(l), std::move(r));
}

Module Module::submodule(const Module& ambient, const Subspace& u) {
  if (u.ambient_dim() != ambient.dim()) throw DimensionMismatch("submodule: ambient dimension mismatch");
  std::vector<Matrix> l = ambient.has_left() ? restrict_actions(ambient.left_, u) : std::vector<Matrix>{};
  std::vector<Matrix> r = ambient.has_right() ? restrict_actions(ambient.right_, u) : std::vector<Matrix>{};
  return Module(ambient.field_, ambient.left_ring_, ambient.right_ring_, u.dim(), std::move(l), std::move(r));
}

Matrix Module::act_left(const Vec& r) const {
  if (!left_ring_) throw PreconditionError("module has no left action");
  return combine(field_, dim_, left_, r);
}

Matrix Module::act_right(const Vec& r) const {
  if (!right_ring_) throw PreconditionError("module has no right action");
  return combine(field_, dim_, right_, r);
}

Module Module::left_part() const { return Module(field_, left_ring_, nullptr, dim_, left_, {}); }
Module Module::right_part() const { return Module(field_, nullptr, right_ring_, dim_, {}, right_); }

bool same_ring(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->field() == b->field() && a->one() == b->one() && a->structure_constants() == b->structure_constants();
}

// ---------------------------------------------------------------------------
// Quotient

Quotient::Quotient(const Field& f, std::size_t ambient, const std::vector<Vec>& relations)
    : field_(f), ambient_(ambient), relations_(f, ambient) {
  for (const auto& r : relations) {
    if (relations_.rank() == ambient) break;
    relations_.add(r);
  }
  std::vector<bool> pivot(ambient, false);
  for (auto p : relations_.pivots()) pivot[p] = true;
  for (std::size_t c = 0; c < ambient; ++c)
    if (!pivot[c]) free_.push_back(c);
}

Vec Quotient::project(const Vec& v) const {
  Vec w = relations_.reduce(v);
  Vec out;
  out.reserve(free_.size());
  for (auto c : free_) out.push_back(w[c]);
  return out;
}

Vec Quotient::lift(std::size_t k) const { return unit_vec(field_, ambient_, free_.at(k)); }

Vec Quotient::lift(const Vec& coords) const {
  Vec v = zero_vec(field_, ambient_);
  for (std::size_t k = 0; k < free_.size(); ++k) v[free_[k]] = coords[k];
  return v;
}

Matrix Quotient::induced(const Matrix& t) const {
  Matrix out(field_, dim(), dim());
  for (std::size_t k = 0; k < dim(); ++k) {
    Vec img = project(t * lift(k));
    for (std::size_t r = 0; r < dim(); ++r) out.at(r, k) = img[r];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Homomorphisms and isomorphism

std::vector<Matrix> hom_space(const Module& m, const Module& n) {
  if (m.has_left() != n.has_left() || m.has_right() != n.has_right())
    throw InputError("hom_space: module kinds differ");
  if (m.has_left() && !same_ring(m.left_ring(), n.left_ring())) throw InputError("hom_space: left rings differ");
  if (m.has_right() && !same_ring(m.right_ring(), n.right_ring())) throw InputError("hom_space: right rings differ");
  const Field& f = m.field();
  const std::size_t dm = m.dim(), dn = n.dim();
  if (dm == 0 || dn == 0) return {};
  RowReducer rr(f, dm * dn);
  for (std::size_t i = 0; i < m.left().size(); ++i) add_intertwining(rr, m.left()[i], n.left()[i], dm, dn);
  for (std::size_t i = 0; i < m.right().size(); ++i) add_intertwining(rr, m.right()[i], n.right()[i], dm, dn);
  std::vector<Matrix> out;
  for (const auto& v : rr.nullspace()) out.push_back(Matrix::unflatten(f, dn, dm, v));
  return out;
}

bool is_module_hom(const Module& m, const Module& n, const Matrix& f) {
  if (f.rows() != n.dim() || f.cols() != m.dim()) return false;
  for (std::size_t i = 0; i < m.left().size(); ++i)
    if (f * m.left()[i] != n.left()[i] * f) return false;
  for (std::size_t i = 0; i < m.right().size(); ++i)
    if (f * m.right()[i] != n.right()[i] * f) return false;
  return true;
}

bool iso_invariants_agree(const Module& m, const Module& n, std::string* why) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (m.dim() != n.dim()) return fail("dimensions differ");
  for (std::size_t i = 0; i < m.left().size(); ++i)
    if (rank(m.left()[i]) != rank(n.left()[i]))
      return fail("rank of left action of basis element " + std::to_string(i) + " differs");
  for (std::size_t i = 0; i < m.right().size(); ++i)
    if (rank(m.right()[i]) != rank(n.right()[i]))
      return fail("rank of right action of basis element " + std::to_string(i) + " differs");
  const std::size_t mm = hom_space(m, m).size(), nn = hom_space(n, n).size();
  if (mm != nn) return fail("endomorphism dimensions differ");
  if (hom_space(m, n).size() != mm) return fail("dim Hom(M,N) differs from dim End(M)");
  if (hom_space(n, m).size() != mm) return fail("dim Hom(N,M) differs from dim End(M)");
  return true;
}

IsoResult is_isomorphic(const Module& m, const Module& n, const SearchStrategy& strategy) {
  IsoResult res;
  if (m.has_left() != n.has_left() || m.has_right() != n.has_right())
    throw InputError("is_isomorphic: module kinds differ");
  const Field& f = m.field();
  if (m.dim() != n.dim()) {
    res.decision = Decision::no;
    res.reason = "dimensions differ";
    return res;
  }
  if (m.dim() == 0) {
    res.decision = Decision::yes;
    res.witness = Matrix(f, 0, 0);
    res.reason = "zero modules";
    return res;
  }
  auto hom = hom_space(m, n);
  if (hom.empty()) {
    res.decision = Decision::no;
    res.reason = "Hom(M,N) = 0";
    return res;
  }
  std::string why;
  if (!iso_invariants_agree(m, n, &why)) {
    res.decision = Decision::no;
    res.reason = why;
    return res;
  }
  if (hom.size() == 1) {
    res.candidates = 1;
    if (rank(hom[0]) == m.dim()) {
      res.decision = Decision::yes;
      res.witness = hom[0];
      res.reason = "one-dimensional Hom spanned by an isomorphism";
    } else {
      res.decision = Decision::no;
      res.reason = "one-dimensional Hom spanned by a non-isomorphism";
    }
    return res;
  }

  using K = SearchStrategy::Kind;
  const bool can_exhaust = f.is_finite() && bounded_power(f.characteristic(), hom.size(), strategy.budget) != 0;
  if (strategy.kind != K::exhaustive) {
    if (auto w = first_invertible(f, m.dim(), hom, strategy, false, res.candidates)) {
      res.decision = Decision::yes;
      res.witness = std::move(w);
      res.reason = "random search over Hom(M,N)";
      return res;
    }
    if (strategy.kind == K::random) {
      res.reason = "random search exhausted its trials";
      return res;
    }
  }
  if (can_exhaust) {
    if (auto w = first_invertible(f, m.dim(), hom, strategy, true, res.candidates)) {
      res.decision = Decision::yes;
      res.witness = std::move(w);
      res.reason = "exhaustive search over Hom(M,N)";
    } else {
      res.decision = Decision::no;
      res.reason = "exhaustive search over Hom(M,N) found no isomorphism";
    }
    return res;
  }
  res.reason = "Hom(M,N) too large to enumerate within budget";
  return res;
}

// ---------------------------------------------------------------------------
// Tensor products

Vec TensorProduct::simple_tensor(const Vec& m, const Vec& n) const {
  Vec v = zero_vec(module.field(), left_dim * right_dim);
  for (std::size_t i = 0; i < left_dim; ++i) {
    if (m[i].is_zero()) continue;
    for (std::size_t j = 0; j < right_dim; ++j) v[i * right_dim + j] = m[i] * n[j];
  }
  return quotient.project(v);
}

TensorProduct tensor_over(const Module& m, const Module& n) {
  if (!m.has_right() || !n.has_left()) throw InputError("tensor_over needs a right module and a left module");
  if (!same_ring(m.right_ring(), n.left_ring())) throw InputError("tensor_over: rings differ");
  const Field& f = m.field();
  const std::size_t dm = m.dim(), dn = n.dim(), amb = dm * dn;
  std::vector<Vec> rels;
  for (std::size_t i = 0; i < m.right().size(); ++i) {
    const Matrix& ra = m.right()[i];
    const Matrix& lb = n.left()[i];
    for (std::size_t a = 0; a < dm; ++a)
      for (std::size_t b = 0; b < dn; ++b) {
        Vec v = zero_vec(f, amb);
        for (std::size_t c = 0; c < dm; ++c)
          if (!ra.at(c, a).is_zero()) v[c * dn + b] += ra.at(c, a);
        for (std::size_t d = 0; d < dn; ++d)
          if (!lb.at(d, b).is_zero()) v[a * dn + d] -= lb.at(d, b);
        if (!is_zero(v)) rels.push_back(std::move(v));
      }
  }
  Quotient q(f, amb, rels);

  auto kron_left = [&](const Matrix& x) {
    Matrix t(f, amb, amb);
    for (std::size_t a = 0; a < dm; ++a)
      for (std::size_t c = 0; c < dm; ++c) {
        if (x.at(c, a).is_zero()) continue;
        for (std::size_t b = 0; b < dn; ++b) t.at(c * dn + b, a * dn + b) = x.at(c, a);
      }
    return t;
  };
  auto kron_right = [&](const Matrix& y) {
    Matrix t(f, amb, amb);
    for (std::size_t a = 0; a < dm; ++a)
      for (std::size_t b = 0; b < dn; ++b)
        for (std::size_t d = 0; d < dn; ++d)
          if (!y.at(d, b).is_zero()) t.at(a * dn + d, a * dn + b) = y.at(d, b);
    return t;
  };

  std::vector<Matrix> left, right;
  if (m.has_left())
    for (const auto& x : m.left()) left.push_back(q.induced(kron_left(x)));
  if (n.has_right())
    for (const auto& y : n.right()) right.push_back(q.induced(kron_right(y)));
  Module out(f, m.left_ring(), n.right_ring(), q.dim(), std::move(left), std::move(right));
  return TensorProduct{std::move(out), std::move(q), dm, dn};
}

// ---------------------------------------------------------------------------
// Projectivity and PicS

namespace {

FgpResult fgp_impl(const Module& m, bool right) {
  FgpResult res;
  const AlgebraPtr& ring = right ? m.right_ring() : m.left_ring();
  if (!ring) throw PreconditionError("is_fgp: requested side is absent");
  const Field& f = m.field();
  const std::size_t d = ring->dim(), dm = m.dim();
  const auto& acts = right ? m.right() : m.left();
  if (dm == 0) {
    res.projective = true;
    return res;
  }
  RowReducer span(f, dm);
  for (std::size_t k = 0; k < dm && span.rank() < dm; ++k) {
    Vec e = unit_vec(f, dm, k);
    if (span.contains(e)) continue;
    res.generators.push_back(e);
    for (const auto& a : acts) span.add(a * e);
  }
  const std::size_t k = res.generators.size();
  Matrix pi(f, dm, k * d);
  for (std::size_t t = 0; t < k; ++t)
    for (std::size_t j = 0; j < d; ++j) {
      Vec img = acts[j] * res.generators[t];
      for (std::size_t r = 0; r < dm; ++r) pi.at(r, t * d + j) = img[r];
    }
  Module side = right ? m.right_part() : m.left_part();
  std::vector<Matrix> reg;
  for (std::size_t j = 0; j < d; ++j) reg.push_back(right ? ring->right_basis_mult(j) : ring->left_basis_mult(j));
  auto blocks = block_copies(reg, k);
  Module free = right ? Module(f, nullptr, ring, k * d, {}, std::move(blocks))
                      : Module(f, ring, nullptr, k * d, std::move(blocks), {});
  auto hom = hom_space(side, free);
  res.surjection = pi;
  if (hom.empty()) return res;
  std::vector<Vec> cols;
  for (const auto& h : hom) cols.push_back((pi * h).flatten());
  auto sol = solve_linear(Matrix::from_columns(f, dm * dm, cols), Matrix::identity(f, dm).flatten());
  if (!sol.consistent) return res;
  res.section = linear_combination(*sol.particular, hom);
  res.projective = true;
  return res;
}

std::optional<Vec> annihilator_idempotent(const Algebra& r, const std::vector<Matrix>& acts) {
  std::vector<Vec> cols;
  for (const auto& a : acts) cols.push_back(a.flatten());
  const std::size_t rows = acts.empty() ? 0 : acts[0].rows() * acts[0].cols();
  if (rows == 0) return r.one();
  Subspace ann(r.field(), r.dim(), nullspace(Matrix::from_columns(r.field(), rows, cols)));
  auto e = ideal_identity(r, ann, Subspace::whole(r.field(), r.dim()));
  if (e && !r.is_central(*e)) return std::nullopt;
  return e;
}

}  // namespace

FgpResult is_fgp_left(const Module& m) { return fgp_impl(m, false); }
FgpResult is_fgp_right(const Module& m) { return fgp_impl(m, true); }

PicsCertificate pics_membership(const Module& p) {
  PicsCertificate cert;
  if (!p.has_left() || !p.has_right() || !same_ring(p.left_ring(), p.right_ring()))
    throw InputError("pics_membership needs an (R,R)-bimodule");
  const Algebra& r = *p.left_ring();
  cert.left_fgp = is_fgp_left(p);
  cert.right_fgp = is_fgp_right(p);
  const std::size_t end_right = hom_space(p.right_part(), p.right_part()).size();
  const std::size_t end_left = hom_space(p.left_part(), p.left_part()).size();
  cert.l_surjective = rank_of_span(p.field(), p.left()) == end_right;
  cert.r_surjective = rank_of_span(p.field(), p.right()) == end_left;
  cert.e1 = annihilator_idempotent(r, p.right());
  cert.e2 = annihilator_idempotent(r, p.left());
  if (p.dim() == 0) {
    cert.l_surjective = cert.r_surjective = true;
  }
  if (!cert.left_fgp.projective) cert.reason = "not finitely generated projective as a left module";
  else if (!cert.right_fgp.projective) cert.reason = "not finitely generated projective as a right module";
  else if (!cert.l_surjective) cert.reason = "l: R -> End(P_R) is not surjective";
  else if (!cert.r_surjective) cert.reason = "r: R -> End(_R P) is not surjective";
  else if (!cert.e1 || !cert.e2) cert.reason = "an annihilator is not generated by a central idempotent";
  cert.member = cert.reason.empty();
  return cert;
}

// ---------------------------------------------------------------------------
// Twisting

void validate_ideal_iso(const Algebra& r, const IdealIso& theta) {
  for (const Vec* e : {&theta.source, &theta.target})
    if (!r.is_idempotent(*e) || !r.is_central(*e)) throw InputError("ideal iso: idempotents must be central");
  if (theta.map.rows() != r.dim() || theta.map.cols() != r.dim()) throw DimensionMismatch("ideal iso: map shape");
  Subspace dom = right_ideal_span(r, Subspace::whole(r.field(), r.dim()), theta.source);
  Subspace tgt = right_ideal_span(r, Subspace::whole(r.field(), r.dim()), theta.target);
  for (std::size_t i = 0; i < r.dim(); ++i) {
    Vec b = r.basis(i);
    if (theta.map * b != theta.map * r.mul(b, theta.source)) throw InputError("ideal iso: map is not zero off its domain");
  }
  if (dom.image(theta.map) != tgt) throw InputError("ideal iso: map is not onto R 1_theta");
  if (theta.map * theta.source != theta.target) throw InputError("ideal iso: map does not send 1 to 1");
  for (const auto& x : dom.basis())
    for (const auto& y : dom.basis())
      if (theta.map * r.mul(x, y) != r.mul(theta.map * x, theta.map * y))
        throw InputError("ideal iso: map is not multiplicative");
}

IdealIso identity_ideal_iso(const Algebra& r) {
  return IdealIso{r.one(), r.one(), Matrix::identity(r.field(), r.dim())};
}

Module twist_by(const Module& m, const IdealIso& theta, Side side) {
  const bool right = side == Side::right;
  const AlgebraPtr& ring = right ? m.right_ring() : m.left_ring();
  if (!ring) throw PreconditionError("twist_by: module lacks the twisted side");
  const Algebra& r = *ring;
  validate_ideal_iso(r, theta);
  Matrix unit_on = right ? m.act_right(theta.target) : m.act_left(theta.target);
  if (unit_on != Matrix::identity(m.field(), m.dim()))
    throw PreconditionError("twist_by: module is not unital for the target idempotent");
  std::vector<Matrix> acts;
  for (std::size_t i = 0; i < r.dim(); ++i) {
    Vec t = theta.map * r.mul(r.basis(i), theta.source);
    acts.push_back(right ? m.act_right(t) : m.act_left(t));
  }
  if (right) return Module(m.field(), m.left_ring(), m.right_ring(), m.dim(), m.left(), std::move(acts));
  return Module(m.field(), m.left_ring(), m.right_ring(), m.dim(), std::move(acts), m.right());
}

// ---------------------------------------------------------------------------
// Constructors

Module left_ideal_module(const AlgebraPtr& r, const Vec& e) {
  Subspace u = right_ideal_span(*r, Subspace::whole(r->field(), r->dim()), e);
  return Module::submodule(Module::regular_left(r), u);
}

Module ideal_bimodule(const AlgebraPtr& r, const Vec& e) {
  if (!r->is_central(e)) throw PreconditionError("ideal_bimodule: idempotent is not central");
  Subspace u = right_ideal_span(*r, Subspace::whole(r->field(), r->dim()), e);
  return Module::submodule(Module::regular_bimodule(r), u);
}

Module direct_sum(const Module& a, const Module& b) {
  if (a.has_left() != b.has_left() || a.has_right() != b.has_right()) throw InputError("direct_sum: kinds differ");
  const Field& f = a.field();
  const std::size_t n = a.dim() + b.dim();
  auto blocks = [&](const std::vector<Matrix>& x, const std::vector<Matrix>& y) {
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < x.size(); ++i) {
      Matrix m(f, n, n);
      for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c) m.at(r, c) = x[i].at(r, c);
      for (std::size_t r = 0; r < b.dim(); ++r)
        for (std::size_t c = 0; c < b.dim(); ++c) m.at(a.dim() + r, a.dim() + c) = y[i].at(r, c);
      out.push_back(std::move(m));
    }
    return out;
  };
  return Module(f, a.left_ring(), a.right_ring(), n, blocks(a.left(), b.left()), blocks(a.right(), b.right()));
}

Module free_left(const AlgebraPtr& r, std::size_t k) {
  std::vector<Matrix> reg;
  for (std::size_t j = 0; j < r->dim(); ++j) reg.push_back(r->left_basis_mult(j));
  return Module(r->field(), r, nullptr, k * r->dim(), block_copies(reg, k), {});
}

}  // namespace grado
