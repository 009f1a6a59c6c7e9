#include "grado/gradedmod.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace grado {

GradedModule::GradedModule(GradedPtr ring, std::vector<GroupElem> degrees, std::vector<Matrix> action)
    : ring_(std::move(ring)),
      degrees_(std::move(degrees)),
      module_(Module::left_module(ring_->algebra_ptr(), degrees_.size(), std::move(action))) {
  const GradedRing& a = *ring_;
  for (const auto& d : degrees_)
    if (!a.group().contains(d)) throw InputError("module degree is not a group element");
  for (std::size_t i = 0; i < a.algebra().dim(); ++i) {
    const Matrix& m = module_.left()[i];
    for (std::size_t c = 0; c < dim(); ++c) {
      const GroupElem target = a.group().mul(a.degrees()[i], degrees_[c]);
      for (std::size_t r = 0; r < dim(); ++r)
        if (!m.at(r, c).is_zero() && degrees_[r] != target)
          throw InputError("action of basis vector " + std::to_string(i) + " does not respect the grading");
    }
  }
}

std::vector<std::size_t> GradedModule::indices(const GroupElem& g) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < degrees_.size(); ++i)
    if (degrees_[i] == g) out.push_back(i);
  return out;
}

std::vector<GroupElem> GradedModule::support() const {
  std::set<GroupElem> s(degrees_.begin(), degrees_.end());
  return {s.begin(), s.end()};
}

GradedModule regular_graded_module(const GradedPtr& a) {
  return GradedModule(a, a->degrees(), Module::regular_left(a->algebra_ptr()).left());
}

GradedModule suspend(const GradedModule& m, const GroupElem& l) {
  const Group& grp = m.ring().group();
  const GroupElem li = grp.inverse(l);
  std::vector<GroupElem> deg;
  for (const auto& d : m.degrees()) deg.push_back(grp.mul(d, li));
  return GradedModule(m.ring_ptr(), std::move(deg), m.action());
}

std::vector<Matrix> graded_mor(const GradedModule& m, const GradedModule& n, const GroupElem& l) {
  if (m.ring_ptr() != n.ring_ptr() && !same_ring(m.ring().algebra_ptr(), n.ring().algebra_ptr()))
    throw InputError("graded_mor: modules over different rings");
  const Field& f = m.ring().field();
  const Group& grp = m.ring().group();
  const std::size_t dm = m.dim(), dn = n.dim();
  // Only entries (r, c) with deg r = deg c * l are unknowns.
  std::vector<std::vector<long>> var(dn, std::vector<long>(dm, -1));
  std::vector<std::pair<std::size_t, std::size_t>> pos;
  for (std::size_t r = 0; r < dn; ++r)
    for (std::size_t c = 0; c < dm; ++c)
      if (n.degrees()[r] == grp.mul(m.degrees()[c], l)) {
        var[r][c] = static_cast<long>(pos.size());
        pos.push_back({r, c});
      }
  if (pos.empty()) return {};
  RowReducer rr(f, pos.size());
  for (std::size_t b = 0; b < m.action().size(); ++b) {
    const Matrix& am = m.action()[b];
    const Matrix& an = n.action()[b];
    for (std::size_t r = 0; r < dn; ++r)
      for (std::size_t c = 0; c < dm; ++c) {
        Vec eq = zero_vec(f, pos.size());
        bool any = false;
        for (std::size_t k = 0; k < dm; ++k)
          if (var[r][k] >= 0 && !am.at(k, c).is_zero()) {
            eq[var[r][k]] += am.at(k, c);
            any = true;
          }
        for (std::size_t k = 0; k < dn; ++k)
          if (var[k][c] >= 0 && !an.at(r, k).is_zero()) {
            eq[var[k][c]] -= an.at(r, k);
            any = true;
          }
        if (any) rr.add(eq);
      }
  }
  std::vector<Matrix> out;
  for (const auto& v : rr.nullspace()) {
    Matrix x(f, dn, dm);
    for (std::size_t t = 0; t < pos.size(); ++t) x.at(pos[t].first, pos[t].second) = v[t];
    out.push_back(std::move(x));
  }
  return out;
}

Vec EndRing::element_of(const Matrix& op) const {
  const Algebra& a = ring->algebra();
  std::vector<Vec> cols;
  for (const auto& o : operators) cols.push_back(o.flatten());
  auto sol = solve_linear(Matrix::from_columns(a.field(), op.rows() * op.cols(), cols), op.flatten());
  if (!sol.consistent) throw PreconditionError("operator is not a graded endomorphism");
  return *sol.particular;
}

EndRing build_end_ring(const GradedModule& m) {
  if (m.dim() == 0) throw InputError("the zero module has no unital endomorphism ring");
  const Field& f = m.ring().field();
  const Group& grp = m.ring().group();
  const std::size_t d = m.dim();
  std::set<GroupElem> ls;
  for (const auto& r : m.degrees())
    for (const auto& c : m.degrees()) ls.insert(grp.mul(grp.inverse(c), r));

  EndRing end;
  std::vector<GroupElem> degrees;
  std::vector<std::string> names;
  std::map<GroupElem, std::pair<std::size_t, Subspace>> blocks;
  for (const auto& l : ls) {
    std::vector<Vec> flats;
    for (const auto& x : graded_mor(m, m, l)) flats.push_back(x.flatten());
    Subspace s(f, d * d, flats);
    if (s.is_zero()) continue;
    const std::size_t off = end.operators.size();
    for (std::size_t k = 0; k < s.dim(); ++k) {
      end.operators.push_back(Matrix::unflatten(f, d, d, s.basis()[k]));
      degrees.push_back(l);
      names.push_back("u" + std::to_string(k) + "@" + grp.to_string(l));
    }
    blocks.emplace(l, std::make_pair(off, std::move(s)));
  }
  const std::size_t n = end.operators.size();
  auto coords = [&](const Matrix& op, const GroupElem& l) {
    Vec out = zero_vec(f, n);
    if (op.is_zero()) return out;
    auto it = blocks.find(l);
    auto c = it == blocks.end() ? std::nullopt : it->second.second.coordinates(op.flatten());
    if (!c) throw VerificationError("composition of graded morphisms left its degree");
    for (std::size_t k = 0; k < c->size(); ++k) out[it->second.first + k] = (*c)[k];
    return out;
  };
  std::vector<std::vector<Vec>> mul(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      mul[i][j] = coords(end.operators[j] * end.operators[i], grp.mul(degrees[i], degrees[j]));
  Vec unit = coords(Matrix::identity(f, d), grp.identity());
  auto alg = std::make_shared<const Algebra>(f, std::move(names), std::move(mul), std::move(unit));
  end.ring = std::make_shared<const GradedRing>(std::move(alg), grp, std::move(degrees));
  return end;
}

namespace {

std::vector<Vec> span_basis(const Field& f, std::size_t len, const std::vector<Matrix>& ms) {
  std::vector<Vec> flats;
  for (const auto& x : ms) flats.push_back(x.flatten());
  return Subspace(f, len, flats).basis();
}

/// Basis of J = span{f o g} in End(N), as matrices.
std::vector<Matrix> product_ideal(const GradedModule& n, const std::vector<Matrix>& fs, const std::vector<Matrix>& gs) {
  const Field& f = n.ring().field();
  std::vector<Matrix> prods;
  for (const auto& x : fs)
    for (const auto& y : gs) prods.push_back(x * y);
  std::vector<Matrix> out;
  for (const auto& v : span_basis(f, n.dim() * n.dim(), prods)) out.push_back(Matrix::unflatten(f, n.dim(), n.dim(), v));
  return out;
}

Vec concat(std::vector<Vec> parts) {
  Vec out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Matrix combination(const Field& f, std::size_t rows, std::size_t cols, const std::vector<Matrix>& basis, const Vec& c) {
  Matrix out(f, rows, cols);
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!c[k].is_zero()) out = out + basis[k].scaled(c[k]);
  return out;
}

}  // namespace

SemiDivision semi_divides(const GradedModule& n, const GradedModule& m) {
  const Field& f = n.ring().field();
  const GroupElem one = n.ring().group().identity();
  SemiDivision res{false, std::nullopt, Subspace(f, n.dim()), ""};
  auto fs = graded_mor(m, n, one);
  auto gs = graded_mor(n, m, one);
  auto j = product_ideal(n, fs, gs);
  if (j.empty()) {
    res.reason = "J = span{f o g} is zero";
    return res;
  }
  std::vector<Vec> cols;
  for (const auto& x : j) {
    std::vector<Vec> parts;
    for (const auto& y : fs) parts.push_back((x * y).flatten());
    for (const auto& y : gs) parts.push_back((y * x).flatten());
    cols.push_back(concat(std::move(parts)));
  }
  std::vector<Vec> rhs_parts;
  for (const auto& y : fs) rhs_parts.push_back(y.flatten());
  for (const auto& y : gs) rhs_parts.push_back(y.flatten());
  Vec rhs = concat(std::move(rhs_parts));
  auto sol = solve_linear(Matrix::from_columns(f, rhs.size(), cols), rhs);
  if (!sol.consistent) {
    res.reason = "J has no element absorbing every graded morphism";
    return res;
  }
  if (!sol.kernel.empty()) throw VerificationError("identity of J is not unique");
  Matrix e = combination(f, n.dim(), n.dim(), j, *sol.particular);
  if (e * e != e) throw VerificationError("identity of J is not idempotent");
  res.holds = true;
  res.summand = Subspace(f, n.dim(), e.column_list());
  res.idempotent = std::move(e);
  return res;
}

bool divides(const GradedModule& n, const GradedModule& m) {
  const Field& f = n.ring().field();
  const GroupElem one = n.ring().group().identity();
  auto j = product_ideal(n, graded_mor(m, n, one), graded_mor(n, m, one));
  if (n.dim() == 0) return true;
  if (j.empty()) return false;
  std::vector<Vec> cols;
  for (const auto& x : j) cols.push_back(x.flatten());
  return solve_linear(Matrix::from_columns(f, n.dim() * n.dim(), cols), Matrix::identity(f, n.dim()).flatten())
      .consistent;
}

EpsilonSimilarity epsilon_similar(const GradedModule& m, const GradedModule& n, const SearchStrategy& strategy) {
  using K = SearchStrategy::Kind;
  const Field& f = m.ring().field();
  const GroupElem one = m.ring().group().identity();
  EpsilonSimilarity res;
  auto sn = semi_divides(n, m);
  auto sm = semi_divides(m, n);
  if (!sn.holds || !sm.holds) {
    res.decision = Decision::no;
    res.reason = !sn.holds ? "N does not semi-divide M: " + sn.reason : "M does not semi-divide N: " + sm.reason;
    return res;
  }
  res.e_n = sn.idempotent;
  res.e_m = sm.idempotent;
  auto fs = graded_mor(m, n, one);
  auto gs = graded_mor(n, m, one);
  const std::size_t dm = m.dim(), dn = n.dim();

  auto try_f = [&](const Vec& c) -> bool {
    ++res.candidates;
    Matrix fm = combination(f, dn, dm, fs, c);
    std::vector<Vec> cols;
    for (const auto& g : gs) cols.push_back(concat({(fm * g).flatten(), (g * fm).flatten()}));
    Vec rhs = concat({res.e_n->flatten(), res.e_m->flatten()});
    if (cols.empty()) return false;
    auto sol = solve_linear(Matrix::from_columns(f, rhs.size(), cols), rhs);
    if (!sol.consistent) return false;
    res.f = fm;
    res.g = combination(f, dm, dn, gs, *sol.particular);
    res.decision = Decision::yes;
    return true;
  };

  const std::size_t k = fs.size();
  if (strategy.kind != K::exhaustive) {
    std::mt19937_64 rng(strategy.seed);
    for (std::uint64_t t = 0; t < strategy.trials; ++t) {
      Vec c;
      for (std::size_t i = 0; i < k; ++i) c.push_back(f.random(rng));
      if (try_f(c)) {
        res.reason = "random";
        return res;
      }
    }
  }
  if (strategy.kind != K::random && f.is_finite() && bounded_power(f.characteristic(), k, strategy.budget) != 0) {
    std::vector<std::uint32_t> digits(k, 0);
    while (true) {
      Vec c;
      for (auto d : digits) c.push_back(f.element(d));
      if (try_f(c)) {
        res.reason = "exhaustive";
        return res;
      }
      std::size_t i = 0;
      while (i < k && ++digits[i] == f.characteristic()) digits[i++] = 0;
      if (i == k) break;
    }
    res.decision = Decision::no;
    res.reason = "exhaustive enumeration of Mor_C(M, N)";
    return res;
  }
  res.reason = "search budget exhausted";
  return res;
}

ClassifyReport classify_end(const GradedModule& m, const SearchStrategy& strategy) {
  ClassifyReport rep;
  const Group& grp = m.ring().group();
  EndRing end = build_end_ring(m);
  const GradedRing& b = *end.ring;
  rep.end_support = b.support();

  auto det = detect_epsilon(b);
  rep.eps_direct = det.ok;
  rep.strong_direct = is_strongly_graded(b);
  rep.crossed_direct = det.ok ? is_epsilon_crossed_product(b, det.system, strategy).decision : Decision::no;

  rep.eps_module = true;
  for (const auto& l : rep.end_support) {
    GradedModule ml = suspend(m, l);
    if (!semi_divides(m, ml).holds || !semi_divides(ml, m).holds) rep.eps_module = false;
  }

  std::vector<GroupElem> strong_degrees;
  if (grp.is_finite()) {
    strong_degrees = grp.elements();
  } else {
    strong_degrees = rep.end_support;
    GroupElem outside = grp.identity();
    for (const auto& l : rep.end_support) outside.v[0] = std::max(outside.v[0], l.v[0] + 1);
    strong_degrees.push_back(outside);
  }
  rep.strong_module = true;
  for (const auto& l : strong_degrees) {
    GradedModule ml = suspend(m, l);
    if (!divides(m, ml) || !divides(ml, m)) rep.strong_module = false;
  }

  bool closed = true;
  for (const auto& l : rep.end_support)
    if (!b.in_support(grp.inverse(l))) closed = false;
  rep.crossed_module = closed ? Decision::yes : Decision::no;
  if (closed)
    for (const auto& l : rep.end_support) {
      auto s = epsilon_similar(m, suspend(m, l), strategy);
      if (s.decision == Decision::no) {
        rep.crossed_module = Decision::no;
        break;
      }
      if (s.decision == Decision::undecided) rep.crossed_module = Decision::undecided;
    }

  if (rep.eps_direct != rep.eps_module) rep.disagreements.push_back("epsilon-strong: direct and module routes differ");
  if (rep.strong_direct != rep.strong_module) rep.disagreements.push_back("strong: direct and module routes differ");
  if (rep.crossed_direct != Decision::undecided && rep.crossed_module != Decision::undecided &&
      rep.crossed_direct != rep.crossed_module)
    rep.disagreements.push_back("crossed: direct and module routes differ");
  return rep;
}

GradedModule induce(const GradedPtr& a, const Module& n) {
  if (!n.has_left() || !same_ring(n.left_ring(), a->base())) throw InputError("induce needs a left module over A_1");
  const Algebra& alg = a->algebra();
  const Field& f = alg.field();
  const Group& grp = a->group();
  const std::size_t dn = n.dim();
  std::map<GroupElem, TensorProduct> parts;
  std::map<GroupElem, std::size_t> offset;
  std::vector<GroupElem> degrees;
  for (const auto& g : a->support()) {
    TensorProduct t = tensor_over(a->component_bimodule(g), n);
    offset[g] = degrees.size();
    degrees.insert(degrees.end(), t.quotient.dim(), g);
    parts.emplace(g, std::move(t));
  }
  const std::size_t total = degrees.size();
  std::vector<Matrix> action;
  for (std::size_t k = 0; k < alg.dim(); ++k) {
    Matrix act(f, total, total);
    const GroupElem h = a->degrees()[k];
    for (auto& [g, tg] : parts) {
      const GroupElem hg = grp.mul(h, g);
      auto it = parts.find(hg);
      if (it == parts.end()) continue;
      const auto& src = a->indices(g);
      const auto& dst = a->indices(hg);
      const Matrix& lb = alg.left_basis_mult(k);
      for (std::size_t q = 0; q < tg.quotient.dim(); ++q) {
        Vec amb = tg.quotient.lift(q);
        Vec img = zero_vec(f, dst.size() * dn);
        for (std::size_t i = 0; i < src.size(); ++i)
          for (std::size_t j = 0; j < dn; ++j) {
            const Scalar& c = amb[i * dn + j];
            if (c.is_zero()) continue;
            for (std::size_t r = 0; r < dst.size(); ++r)
              if (!lb.at(dst[r], src[i]).is_zero()) img[r * dn + j] += c * lb.at(dst[r], src[i]);
          }
        Vec col = it->second.quotient.project(img);
        for (std::size_t r = 0; r < col.size(); ++r) act.at(offset[hg] + r, offset[g] + q) = col[r];
      }
    }
    action.push_back(std::move(act));
  }
  return GradedModule(a, std::move(degrees), std::move(action));
}

IsoResult graded_isomorphic(const GradedModule& m, const GradedModule& n, const GroupElem& l,
                            const SearchStrategy& strategy) {
  using K = SearchStrategy::Kind;
  IsoResult res;
  const Field& f = m.ring().field();
  const Group& grp = m.ring().group();
  if (m.dim() != n.dim()) {
    res.decision = Decision::no;
    res.reason = "dimensions differ";
    return res;
  }
  for (const auto& g : m.support())
    if (m.indices(g).size() != n.indices(grp.mul(g, l)).size()) {
      res.decision = Decision::no;
      res.reason = "component dimensions differ at " + grp.to_string(g);
      return res;
    }
  if (m.dim() == 0) {
    res.decision = Decision::yes;
    res.witness = Matrix(f, 0, 0);
    return res;
  }
  auto hom = graded_mor(m, n, l);
  auto test = [&](const Vec& c) {
    ++res.candidates;
    Matrix x = combination(f, n.dim(), m.dim(), hom, c);
    if (!invertible(x)) return false;
    res.decision = Decision::yes;
    res.witness = std::move(x);
    return true;
  };
  if (hom.empty()) {
    res.decision = Decision::no;
    res.reason = "no graded morphisms of this degree";
    return res;
  }
  if (strategy.kind != K::exhaustive) {
    std::mt19937_64 rng(strategy.seed);
    for (std::uint64_t t = 0; t < strategy.trials; ++t) {
      Vec c;
      for (std::size_t i = 0; i < hom.size(); ++i) c.push_back(f.random(rng));
      if (test(c)) return res;
    }
  }
  if (strategy.kind != K::random && f.is_finite() && bounded_power(f.characteristic(), hom.size(), strategy.budget) != 0) {
    std::vector<std::uint32_t> digits(hom.size(), 0);
    while (true) {
      Vec c;
      for (auto d : digits) c.push_back(f.element(d));
      if (test(c)) return res;
      std::size_t i = 0;
      while (i < hom.size() && ++digits[i] == f.characteristic()) digits[i++] = 0;
      if (i == hom.size()) break;
    }
    res.decision = Decision::no;
    res.reason = "exhaustive enumeration of graded morphisms";
    return res;
  }
  res.reason = "search budget exhausted";
  return res;
}

namespace {

/// The span of the components with degrees in `ds`, if it is an A-submodule.
std::optional<GradedModule> component_submodule(const GradedModule& n, const std::set<GroupElem>& ds) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n.dim(); ++i)
    if (ds.count(n.degrees()[i])) idx.push_back(i);
  std::vector<bool> inside(n.dim(), false);
  for (auto i : idx) inside[i] = true;
  std::vector<Matrix> acts;
  for (const auto& x : n.action()) {
    Matrix r(x.field(), idx.size(), idx.size());
    for (std::size_t c = 0; c < idx.size(); ++c)
      for (std::size_t row = 0; row < n.dim(); ++row) {
        if (x.at(row, idx[c]).is_zero()) continue;
        if (!inside[row]) return std::nullopt;
      }
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) r.at(a, b) = x.at(idx[a], idx[b]);
    acts.push_back(std::move(r));
  }
  std::vector<GroupElem> deg;
  for (auto i : idx) deg.push_back(n.degrees()[i]);
  return GradedModule(n.ring_ptr(), std::move(deg), std::move(acts));
}

Decision meet(Decision a, Decision b) {
  if (a == Decision::no || b == Decision::no) return Decision::no;
  if (a == Decision::undecided || b == Decision::undecided) return Decision::undecided;
  return Decision::yes;
}

}  // namespace

AstorReport check_astor(const GradedPtr& a, const Module& n, const SearchStrategy& strategy) {
  AstorReport rep;
  const Group& grp = a->group();
  const Field& f = a->field();
  GradedModule ind = induce(a, n);
  const auto supp = a->support();
  auto supp_l = [&](const GroupElem& l) {
    std::vector<GroupElem> out;
    for (const auto& g : supp)
      if (a->in_support(grp.mul(g, l))) out.push_back(g);
    return out;
  };
  auto shifted = [&](const std::vector<GroupElem>& s, const GroupElem& l) {
    std::set<GroupElem> out;
    for (const auto& g : s) out.insert(grp.mul(g, l));
    return out;
  };

  rep.hypothesis = Decision::yes;
  for (const auto& l : supp) {
    AstorDegree d;
    d.l = l;
    d.supp_l = supp_l(l);
    const GroupElem li = grp.inverse(l);
    auto lower = component_submodule(ind, std::set<GroupElem>(d.supp_l.begin(), d.supp_l.end()));
    auto upper = component_submodule(ind, shifted(d.supp_l, l));
    auto upper_inv = component_submodule(ind, shifted(supp_l(li), li));
    d.submodules_ok = lower && upper && upper_inv;
    if (!d.submodules_ok) {
      d.lower_upper = d.upper_upper = Decision::no;
      d.reason = "components indexed by supp_l do not form a graded submodule";
    } else {
      auto r1 = graded_isomorphic(*lower, *upper, l, strategy);
      auto r2 = graded_isomorphic(*upper, *upper_inv, li, strategy);
      d.lower_upper = r1.decision;
      d.upper_upper = r2.decision;
      d.reason = r1.reason + (r2.reason.empty() ? "" : "; " + r2.reason);
    }
    rep.hypothesis = meet(rep.hypothesis, meet(d.lower_upper, d.upper_upper));
    rep.degrees.push_back(std::move(d));
  }

  EndRing c = build_end_ring(ind);
  auto det = detect_epsilon(*c.ring);
  rep.end_epsilon_strong = det.ok;
  rep.consistent = !(rep.hypothesis == Decision::yes && !det.ok);

  // G-invariance and the phi_l witnesses.
  std::map<GroupElem, Matrix> phi;
  rep.g_invariant = Decision::yes;
  for (const auto& g : supp) {
    TensorProduct t = tensor_over(a->component_bimodule(g), n);
    auto iso = is_isomorphic(t.module, n.left_part(), strategy);
    rep.g_invariant = meet(rep.g_invariant, iso.decision);
    if (iso.decision == Decision::yes) phi.emplace(g, *iso.witness);
  }
  if (rep.g_invariant != Decision::yes) {
    rep.note = "N is not G-invariant (or undecided); phi_l not assembled";
    return rep;
  }
  std::map<GroupElem, Matrix> phi_inv;
  for (const auto& [g, m] : phi) phi_inv.emplace(g, *inverse(m));
  auto offsets = [&](const GroupElem& g) { return ind.indices(g); };
  auto block_op = [&](const GroupElem& l) {
    Matrix op(f, ind.dim(), ind.dim());
    for (const auto& g : supp_l(l)) {
      const GroupElem gl = grp.mul(g, l);
      Matrix blk = phi_inv.at(gl) * phi.at(g);
      auto src = offsets(g), dst = offsets(gl);
      for (std::size_t r = 0; r < dst.size(); ++r)
        for (std::size_t q = 0; q < src.size(); ++q) op.at(dst[r], src[q]) = blk.at(r, q);
    }
    return op;
  };
  auto a_linear = [&](const Matrix& op) {
    for (const auto& x : ind.action())
      if (op * x != x * op) return false;
    return true;
  };
  for (const auto& l : supp) {
    PhiDegree pd{l, false, false};
    Matrix fl = block_op(l), fli = block_op(grp.inverse(l));
    pd.in_end = a_linear(fl) && a_linear(fli);
    if (pd.in_end && det.ok) {
      // In C the product uv is v o u.
      Matrix el = Matrix(f, ind.dim(), ind.dim()), eli = el;
      Vec cl = det.system.at(*c.ring, l), cli = det.system.at(*c.ring, grp.inverse(l));
      for (std::size_t k = 0; k < c.operators.size(); ++k) {
        el = el + c.operators[k].scaled(cl[k]);
        eli = eli + c.operators[k].scaled(cli[k]);
      }
      pd.epsilon_invertible = fli * fl == el && fl * fli == eli;
    }
    rep.phi.push_back(pd);
  }
  return rep;
}

}  // namespace grado
