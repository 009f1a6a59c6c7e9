#include "grado/graded.hpp"

#include <algorithm>
#include <random>

namespace grado {

// ---------------------------------------------------------------------------
// Group

Group Group::finite(std::vector<std::vector<std::size_t>> table, std::size_t identity) {
  const std::size_t n = table.size();
  if (n == 0) throw InputError("group table is empty");
  if (identity >= n) throw InputError("group identity index out of range");
  for (const auto& row : table) {
    if (row.size() != n) throw InputError("group table is not square");
    for (auto x : row)
      if (x >= n) throw InputError("group table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    if (table[identity][a] != a || table[a][identity] != a) throw InputError("identity element is not neutral");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]]) throw InputError("group table is not associative");
  Group g;
  g.finite_ = true;
  g.identity_ = identity;
  g.inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] == identity && table[b][a] == identity) g.inverse_[a] = b;
  for (auto x : g.inverse_)
    if (x == n) throw InputError("group table lacks inverses");
  g.table_ = std::move(table);
  return g;
}

Group Group::cyclic(std::size_t n) {
  if (n == 0) throw InputError("cyclic group order must be positive");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return finite(std::move(t), 0);
}

Group Group::free_abelian(std::size_t rank) {
  Group g;
  g.finite_ = false;
  g.rank_ = rank;
  return g;
}

GroupElem Group::identity() const {
  if (finite_) return {{static_cast<long long>(identity_)}};
  return {std::vector<long long>(rank_, 0)};
}

GroupElem Group::mul(const GroupElem& a, const GroupElem& b) const {
  if (finite_) return {{static_cast<long long>(table_.at(a.v.at(0)).at(b.v.at(0)))}};
  GroupElem c = a;
  for (std::size_t i = 0; i < rank_; ++i) c.v[i] += b.v.at(i);
  return c;
}

GroupElem Group::inverse(const GroupElem& a) const {
  if (finite_) return {{static_cast<long long>(inverse_.at(a.v.at(0)))}};
  GroupElem c = a;
  for (auto& x : c.v) x = -x;
  return c;
}

bool Group::contains(const GroupElem& a) const {
  if (finite_) return a.v.size() == 1 && a.v[0] >= 0 && static_cast<std::size_t>(a.v[0]) < table_.size();
  return a.v.size() == rank_;
}

std::vector<GroupElem> Group::elements() const {
  if (!finite_) throw PreconditionError("elements() of an infinite group");
  std::vector<GroupElem> out;
  for (std::size_t i = 0; i < table_.size(); ++i) out.push_back(element(i));
  return out;
}

GroupElem Group::element(std::size_t index) const {
  if (!finite_ || index >= table_.size()) throw InputError("group element index out of range");
  return {{static_cast<long long>(index)}};
}

GroupElem Group::integer(long long k) const {
  if (finite_) {
    long long n = static_cast<long long>(table_.size());
    return element(static_cast<std::size_t>(((k % n) + n) % n));
  }
  if (rank_ != 1) throw PreconditionError("integer() needs a rank-one free abelian group");
  return {{k}};
}

std::string Group::to_string(const GroupElem& g) const {
  if (g.v.size() == 1) return std::to_string(g.v[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < g.v.size(); ++i) s += (i ? "," : "") + std::to_string(g.v[i]);
  return s + ")";
}

// ---------------------------------------------------------------------------
// GradedRing

GradedRing::GradedRing(AlgebraPtr algebra, Group group, std::vector<GroupElem> degrees)
    : algebra_(std::move(algebra)), group_(std::move(group)), degrees_(std::move(degrees)) {
  const Algebra& a = *algebra_;
  if (degrees_.size() != a.dim()) throw DimensionMismatch("one degree per basis vector is required");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!group_.contains(degrees_[i])) throw InputError("degree of basis vector " + std::to_string(i) + " is not a group element");
    by_degree_[degrees_[i]].push_back(i);
  }
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      GroupElem d = group_.mul(degrees_[i], degrees_[j]);
      const Vec& c = a.structure(i, j);
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (!c[k].is_zero() && degrees_[k] != d)
          throw InputError("product b" + std::to_string(i) + "*b" + std::to_string(j) + " is not homogeneous of degree " +
                           group_.to_string(d));
    }
  const GroupElem one = group_.identity();
  for (std::size_t k = 0; k < a.dim(); ++k)
    if (!a.one()[k].is_zero() && degrees_[k] != one) throw InputError("unit is not of identity degree");
  for (const auto& [g, idx] : by_degree_) support_.push_back(g);
  base_ = std::make_shared<const Algebra>(coordinate_subalgebra(a, indices(one)));
}

bool GradedRing::in_support(const GroupElem& g) const { return by_degree_.count(g) > 0; }

const std::vector<std::size_t>& GradedRing::indices(const GroupElem& g) const {
  static const std::vector<std::size_t> empty;
  auto it = by_degree_.find(g);
  return it == by_degree_.end() ? empty : it->second;
}

Subspace GradedRing::component(const GroupElem& g) const {
  return Subspace::coordinate(field(), algebra_->dim(), indices(g));
}

Vec GradedRing::restrict(const GroupElem& g, const Vec& a) const {
  Vec out;
  for (auto i : indices(g)) out.push_back(a.at(i));
  return out;
}

Vec GradedRing::embed(const GroupElem& g, const Vec& coords) const {
  const auto& idx = indices(g);
  if (coords.size() != idx.size()) throw DimensionMismatch("component coordinates have wrong length");
  Vec out = algebra_->zero();
  for (std::size_t t = 0; t < idx.size(); ++t) out[idx[t]] = coords[t];
  return out;
}

bool GradedRing::is_homogeneous(const Vec& a, const GroupElem& g) const {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!a[k].is_zero() && degrees_[k] != g) return false;
  return true;
}

Module GradedRing::component_bimodule(const GroupElem& g) const {
  const auto& idx = indices(g);
  const auto& ridx = indices(group_.identity());
  const Algebra& a = *algebra_;
  auto restricted = [&](const Matrix& m) {
    Matrix out(field(), idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) out.at(r, c) = m.at(idx[r], idx[c]);
    return out;
  };
  std::vector<Matrix> left, right;
  for (auto i : ridx) {
    left.push_back(restricted(a.left_basis_mult(i)));
    right.push_back(restricted(a.right_basis_mult(i)));
  }
  return Module::bimodule(base_, idx.size(), std::move(left), std::move(right));
}

// ---------------------------------------------------------------------------
// Epsilon systems

Vec EpsilonSystem::at(const GradedRing& a, const GroupElem& g) const {
  auto it = eps.find(g);
  return it == eps.end() ? a.algebra().zero() : it->second;
}

namespace {

Subspace component_product(const GradedRing& a, const GroupElem& g, const GroupElem& h) {
  return product_span(a.algebra(), a.component(g), a.component(h));
}

}  // namespace

bool is_symmetrically_graded(const GradedRing& a) {
  for (const auto& g : a.support()) {
    GroupElem gi = a.group().inverse(g);
    Subspace j = component_product(a, g, gi);
    if (product_span(a.algebra(), j, a.component(g)) != a.component(g)) return false;
  }
  return true;
}

EpsilonDetection detect_epsilon(const GradedRing& a) {
  EpsilonDetection res;
  const Algebra& alg = a.algebra();
  const Subspace r = a.component(a.group().identity());
  for (const auto& g : a.support()) {
    GroupElem gi = a.group().inverse(g);
    if (!a.in_support(gi)) {
      res.failing = g;
      res.reason = "support is not closed under inversion at " + a.group().to_string(g);
      return res;
    }
    auto e = ideal_identity(alg, component_product(a, g, gi), r);
    if (!e) {
      res.failing = g;
      res.reason = "A_g A_g^-1 has no identity element at " + a.group().to_string(g);
      return res;
    }
    res.system.eps[g] = *e;
  }
  for (const auto& g : a.support()) {
    const Vec& eg = res.system.eps.at(g);
    const Vec& egi = res.system.eps.at(a.group().inverse(g));
    for (auto i : a.indices(g)) {
      Vec b = alg.basis(i);
      if (alg.mul(eg, b) != b || alg.mul(b, egi) != b) {
        res.failing = g;
        res.reason = "identity of A_g A_g^-1 does not absorb A_" + a.group().to_string(g) + " (basis vector " +
                     alg.basis_names()[i] + ")";
        return res;
      }
    }
    if (!alg.is_idempotent(eg)) throw VerificationError("epsilon is not idempotent");
    for (auto i : a.indices(a.group().identity()))
      if (alg.mul(eg, alg.basis(i)) != alg.mul(alg.basis(i), eg))
        throw VerificationError("epsilon is not central in A_1");
  }
  res.ok = true;
  return res;
}

bool epsilon_strong_via_symmetry(const GradedRing& a) {
  if (!is_symmetrically_graded(a)) return false;
  const Subspace r = a.component(a.group().identity());
  for (const auto& g : a.support()) {
    Subspace j = component_product(a, g, a.group().inverse(g));
    if (!ideal_identity(a.algebra(), j, r)) return false;
  }
  return true;
}

bool is_strongly_graded(const GradedRing& a) {
  if (!a.group().is_finite()) {
    if (a.group().rank() > 0) return false;
    return true;
  }
  for (const auto& g : a.group().elements())
    for (const auto& h : a.group().elements())
      if (component_product(a, g, h) != a.component(a.group().mul(g, h))) return false;
  return true;
}

std::vector<RemarkViolation> check_remark_identities(const GradedRing& a, const EpsilonSystem& eps) {
  std::vector<RemarkViolation> out;
  const Algebra& alg = a.algebra();
  for (const auto& g : a.support())
    for (const auto& h : a.support()) {
      GroupElem gh = a.group().mul(g, h);
      Subspace prod = component_product(a, g, h);
      Subspace comp = a.component(gh);
      if (prod != left_ideal_span(alg, eps.at(a, g), comp)) out.push_back({g, h, "A_g A_h = eps_g A_gh"});
      if (prod != right_ideal_span(alg, comp, eps.at(a, a.group().inverse(h))))
        out.push_back({g, h, "A_g A_h = A_gh eps_h^-1"});
    }
  return out;
}

// ---------------------------------------------------------------------------
// Epsilon-invertible elements

bool verify_witness(const GradedRing& a, const EpsilonSystem& eps, const EpsilonInvertibleWitness& w) {
  GroupElem gi = a.group().inverse(w.g);
  const Algebra& alg = a.algebra();
  return a.is_homogeneous(w.s, w.g) && a.is_homogeneous(w.inverse, gi) && alg.mul(w.s, w.inverse) == eps.at(a, w.g) &&
         alg.mul(w.inverse, w.s) == eps.at(a, gi);
}

namespace {

std::optional<Vec> solve_in_component(const GradedRing& a, const std::vector<Vec>& columns, const Vec& rhs,
                                      const GroupElem& deg) {
  const Algebra& alg = a.algebra();
  Matrix m = columns.empty() ? Matrix(alg.field(), alg.dim(), 0) : Matrix::from_columns(alg.field(), alg.dim(), columns);
  auto sol = solve_linear(m, rhs);
  if (!sol.consistent) return std::nullopt;
  return a.embed(deg, *sol.particular);
}

}  // namespace

std::optional<EpsilonInvertibleWitness> test_candidate(const GradedRing& a, const EpsilonSystem& eps,
                                                       const GroupElem& g, const Vec& s) {
  const Algebra& alg = a.algebra();
  GroupElem gi = a.group().inverse(g);
  const Vec eg = eps.at(a, g), egi = eps.at(a, gi);
  std::vector<Vec> right_cols, left_cols;
  for (auto t : a.indices(gi)) {
    right_cols.push_back(alg.mul(s, alg.basis(t)));
    left_cols.push_back(alg.mul(alg.basis(t), s));
  }
  auto u = solve_in_component(a, right_cols, eg, gi);
  if (!u) return std::nullopt;
  auto v = solve_in_component(a, left_cols, egi, gi);
  if (!v) return std::nullopt;
  EpsilonInvertibleWitness w{g, s, *u};
  if (verify_witness(a, eps, w)) return w;
  w.inverse = *v;
  if (verify_witness(a, eps, w)) return w;
  // One-sided solutions that disagree: fall back to the joint system.
  std::vector<Vec> joint;
  for (std::size_t t = 0; t < right_cols.size(); ++t) {
    Vec c = right_cols[t];
    c.insert(c.end(), left_cols[t].begin(), left_cols[t].end());
    joint.push_back(std::move(c));
  }
  Vec rhs = eg;
  rhs.insert(rhs.end(), egi.begin(), egi.end());
  Matrix m = joint.empty() ? Matrix(alg.field(), 2 * alg.dim(), 0) : Matrix::from_columns(alg.field(), 2 * alg.dim(), joint);
  auto sol = solve_linear(m, rhs);
  if (!sol.consistent) return std::nullopt;
  w.inverse = a.embed(gi, *sol.particular);
  return w;
}

WitnessSearch find_epsilon_invertible(const GradedRing& a, const EpsilonSystem& eps, const GroupElem& g,
                                      const SearchStrategy& strategy) {
  using K = SearchStrategy::Kind;
  WitnessSearch res;
  const Algebra& alg = a.algebra();
  const Field& f = alg.field();
  const GroupElem gi = a.group().inverse(g);
  const Vec eg = eps.at(a, g), egi = eps.at(a, gi);
  const std::size_t ng = a.component_dim(g);

  if (ng == 0) {
    res.candidates = 1;
    if (is_zero(eg) && is_zero(egi)) {
      res.decision = Decision::yes;
      res.witness = EpsilonInvertibleWitness{g, alg.zero(), alg.zero()};
      res.route = "empty component";
    } else {
      res.decision = Decision::no;
      res.route = "empty component with nonzero epsilon";
    }
    return res;
  }

  // The iso A_g -> R eps_g, x |-> x s', only needs eps_{g^-1} to absorb A_g on the right and eps_g idempotent.
  bool local_ok = alg.is_idempotent(eg);
  for (auto i : a.indices(g))
    if (alg.mul(alg.basis(i), egi) != alg.basis(i)) local_ok = false;
  const Subspace r = a.component(a.group().identity());
  const Subspace r_eps = right_ideal_span(alg, r, eg);
  if (local_ok && r_eps.dim() != ng) {
    res.decision = Decision::no;
    res.route = "dim A_g != dim R eps_g";
    return res;
  }

  auto from_coords = [&](const Vec& c) { return a.embed(g, c); };
  auto try_candidate = [&](const Vec& s) {
    ++res.candidates;
    if (auto w = test_candidate(a, eps, g, s)) {
      res.decision = Decision::yes;
      res.witness = std::move(w);
      return true;
    }
    return false;
  };

  if (strategy.kind == K::automatic || strategy.kind == K::random) {
    std::mt19937_64 rng(strategy.seed);
    for (std::uint64_t t = 0; t < strategy.trials; ++t) {
      Vec c;
      for (std::size_t i = 0; i < ng; ++i) c.push_back(f.random(rng));
      if (try_candidate(from_coords(c))) {
        res.route = "random";
        return res;
      }
    }
    if (strategy.kind == K::random) {
      res.route = "random trials exhausted";
      return res;
    }
  }

  const bool affordable = f.is_finite() && bounded_power(f.characteristic(), ng, strategy.budget) != 0;
  if ((strategy.kind == K::automatic || strategy.kind == K::exhaustive) && affordable) {
    res.candidates = 0;
    std::vector<std::uint32_t> digits(ng, 0);
    while (true) {
      Vec c;
      for (auto d : digits) c.push_back(f.element(d));
      if (try_candidate(from_coords(c))) {
        res.route = "exhaustive";
        return res;
      }
      std::size_t i = 0;
      while (i < ng && ++digits[i] == f.characteristic()) digits[i++] = 0;
      if (i == ng) break;
    }
    res.decision = Decision::no;
    res.route = "exhaustive enumeration of A_g";
    return res;
  }
  if (strategy.kind == K::exhaustive) {
    res.route = "A_g too large to enumerate within budget";
    return res;
  }

  if (local_ok) {
    const GradedRing& ag = a;
    Module comp = ag.component_bimodule(g).left_part();
    std::vector<Vec> gens;
    const auto& ridx = ag.indices(ag.group().identity());
    for (const auto& v : r_eps.basis()) {
      Vec c;
      for (auto i : ridx) c.push_back(v[i]);
      gens.push_back(std::move(c));
    }
    Module reps = Module::submodule(Module::regular_left(ag.base()), Subspace(f, ridx.size(), gens));
    auto iso = is_isomorphic(reps, comp, strategy);
    res.candidates += iso.candidates;
    if (iso.decision == Decision::no) {
      res.decision = Decision::no;
      res.route = "A_g and R eps_g are not isomorphic: " + iso.reason;
      return res;
    }
    if (iso.decision == Decision::yes) {
      // phi(eps_g) for the iso phi: R eps_g -> A_g.
      Subspace reps_space(f, ridx.size(), gens);
      Vec eg_r;
      for (auto i : ridx) eg_r.push_back(eg[i]);
      Vec img = *iso.witness * *reps_space.coordinates(eg_r);
      if (try_candidate(from_coords(img))) {
        res.route = "module isomorphism";
        return res;
      }
    }
  }
  res.route = "undecided within budget";
  return res;
}

CrossedDecision is_epsilon_crossed_product(const GradedRing& a, const SearchStrategy& strategy) {
  auto det = detect_epsilon(a);
  if (!det.ok) {
    CrossedDecision res;
    res.decision = Decision::no;
    res.reason = "not epsilon-strongly graded: " + det.reason;
    return res;
  }
  return is_epsilon_crossed_product(a, det.system, strategy);
}

CrossedDecision is_epsilon_crossed_product(const GradedRing& a, const EpsilonSystem& eps,
                                           const SearchStrategy& strategy) {
  CrossedDecision res;
  const Algebra& alg = a.algebra();
  const Subspace r = a.component(a.group().identity());
  bool any_no = false, any_undecided = false;
  for (const auto& g : a.support()) {
    auto s = find_epsilon_invertible(a, eps, g, strategy);
    if (s.decision == Decision::yes) {
      const Vec& sg = s.witness->s;
      if (left_ideal_span(alg, sg, r) != a.component(g) || right_ideal_span(alg, r, sg) != a.component(g))
        throw VerificationError("epsilon-invertible element does not generate A_g on both sides");
      res.witnesses[g] = *s.witness;
    } else if (s.decision == Decision::no) {
      if (!any_no) res.reason = "no epsilon-invertible element in degree " + a.group().to_string(g) + " (" + s.route + ")";
      any_no = true;
    } else {
      if (!any_undecided && !any_no)
        res.reason = "degree " + a.group().to_string(g) + " undecided (" + s.route + ")";
      any_undecided = true;
    }
    res.searches[g] = std::move(s);
  }
  res.decision = any_no ? Decision::no : any_undecided ? Decision::undecided : Decision::yes;
  if (res.decision == Decision::yes) res.reason = "epsilon-invertible element found in every support degree";
  return res;
}

// ---------------------------------------------------------------------------
// Matrix rings

GradedRing matrix_grading(const GradedRing& a, std::size_t n) {
  auto m = std::make_shared<const Algebra>(matrix_algebra(a.algebra(), n));
  const std::size_t d = a.algebra().dim();
  std::vector<GroupElem> deg(m->dim());
  for (std::size_t ij = 0; ij < n * n; ++ij)
    for (std::size_t k = 0; k < d; ++k) deg[ij * d + k] = a.degrees()[k];
  return GradedRing(std::move(m), a.group(), std::move(deg));
}

GeneratorSearch generator_condition(const GradedRing& a, const SearchStrategy& strategy) {
  GeneratorSearch res;
  const Algebra& alg = a.algebra();
  const Field& f = alg.field();
  const auto& ridx = a.indices(a.group().identity());
  bool any_undecided = false;
  for (const auto& g : a.support()) {
    const std::size_t ng = a.component_dim(g);
    auto generates = [&](const Vec& k) {
      Matrix left(f, alg.dim(), ridx.size()), right(f, alg.dim(), ridx.size());
      for (std::size_t t = 0; t < ridx.size(); ++t) {
        Vec rk = alg.mul(alg.basis(ridx[t]), k);
        Vec kr = alg.mul(k, alg.basis(ridx[t]));
        for (std::size_t i = 0; i < alg.dim(); ++i) {
          left.at(i, t) = rk[i];
          right.at(i, t) = kr[i];
        }
      }
      return rank(left) == ng && rank(right) == ng;
    };
    std::optional<Vec> found;
    std::mt19937_64 rng(strategy.seed ^ 0x9e3779b97f4a7c15ULL);
    if (strategy.kind != SearchStrategy::Kind::exhaustive)
      for (std::uint64_t t = 0; t < strategy.trials && !found; ++t) {
        Vec c;
        for (std::size_t i = 0; i < ng; ++i) c.push_back(f.random(rng));
        Vec k = a.embed(g, c);
        if (generates(k)) found = k;
      }
    const bool affordable = f.is_finite() && bounded_power(f.characteristic(), ng, strategy.budget) != 0;
    bool exhausted = false;
    if (!found && affordable && strategy.kind != SearchStrategy::Kind::random) {
      std::vector<std::uint32_t> digits(ng, 0);
      while (!found) {
        std::size_t i = 0;
        while (i < ng && ++digits[i] == f.characteristic()) digits[i++] = 0;
        if (i == ng) break;
        Vec c;
        for (auto d : digits) c.push_back(f.element(d));
        Vec k = a.embed(g, c);
        if (generates(k)) found = k;
      }
      exhausted = !found;
    }
    if (found) {
      res.kappa[g] = *found;
    } else if (exhausted) {
      res.decision = Decision::no;
      res.reason = "no generator of A_g on both sides in degree " + a.group().to_string(g);
      return res;
    } else {
      any_undecided = true;
      res.reason = "degree " + a.group().to_string(g) + " undecided";
    }
  }
  res.decision = any_undecided ? Decision::undecided : Decision::yes;
  return res;
}

MatcroReport matcro_decide(const GradedRing& a, std::size_t n, const SearchStrategy& strategy) {
  MatcroReport rep;
  rep.n = n;
  auto det = detect_epsilon(a);
  if (!det.ok) {
    rep.note = "not epsilon-strongly graded: " + det.reason;
    return rep;
  }
  rep.applicable = true;
  GradedRing b = matrix_grading(a, n);
  auto detb = detect_epsilon(b);
  if (!detb.ok) throw VerificationError("matrix ring over an epsilon-strong ring is not epsilon-strong");
  const std::size_t d = a.algebra().dim();
  rep.eps_is_diagonal = true;
  for (const auto& g : a.support()) {
    Vec expect = b.algebra().zero();
    const Vec eg = det.system.at(a, g);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < d; ++k) expect[(i * n + i) * d + k] = eg[k];
    if (detb.system.at(b, g) != expect) rep.eps_is_diagonal = false;
  }
  rep.crossed = is_epsilon_crossed_product(b, detb.system, strategy);
  rep.generator = generator_condition(b, strategy);
  rep.decided = rep.crossed.decision != Decision::undecided && rep.generator.decision != Decision::undecided;
  rep.agree = rep.crossed.decision == rep.generator.decision;
  rep.note = "theta-family conditions recorded as implied-equivalent";
  return rep;
}

GradedRing restrict_to_subgroup(const GradedRing& a, const std::vector<GroupElem>& subgroup) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < a.degrees().size(); ++i)
    if (std::find(subgroup.begin(), subgroup.end(), a.degrees()[i]) != subgroup.end()) idx.push_back(i);
  auto sub = std::make_shared<const Algebra>(coordinate_subalgebra(a.algebra(), idx));
  std::vector<GroupElem> deg;
  for (auto i : idx) deg.push_back(a.degrees()[i]);
  return GradedRing(std::move(sub), a.group(), std::move(deg));
}

}  // namespace grado
