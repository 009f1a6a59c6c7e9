#include "grado/algebra.hpp"

#include <algorithm>
#include <random>

#include "grado/search.hpp"

namespace grado {

namespace {

// Converts vectors of span(basis) into coordinates relative to that basis.
class BasisCoords {
 public:
  BasisCoords(const Field& f, std::size_t ambient, const std::vector<Vec>& basis)
      : space_(f, ambient, basis), tinv_(f, basis.size(), basis.size()) {
    if (space_.dim() != basis.size()) throw InputError("basis vectors are linearly dependent");
    std::vector<Vec> cols;
    for (const auto& b : basis) cols.push_back(*space_.coordinates(b));
    auto inv = inverse(Matrix::from_columns(f, basis.size(), cols));
    tinv_ = *inv;
  }

  std::optional<Vec> operator()(const Vec& v) const {
    auto c = space_.coordinates(v);
    if (!c) return std::nullopt;
    return tinv_ * *c;
  }

 private:
  Subspace space_;
  Matrix tinv_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Algebra

Algebra::Algebra(Field field, std::vector<std::string> basis_names, std::vector<std::vector<Vec>> mul, Vec unit)
    : field_(field), names_(std::move(basis_names)), mul_(std::move(mul)), unit_(std::move(unit)) {
  const std::size_t n = names_.size();
  if (n == 0) throw InputError("algebra must have positive dimension");
  if (mul_.size() != n) throw DimensionMismatch("structure table has wrong row count");
  for (std::size_t i = 0; i < n; ++i) {
    if (mul_[i].size() != n) throw DimensionMismatch("structure table row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      if (mul_[i][j].size() != n)
        throw DimensionMismatch("product b" + std::to_string(i) + "*b" + std::to_string(j) + " has wrong length");
      for (const auto& s : mul_[i][j]) {
        if (s.field() != field_) throw InputError("structure constant outside " + field_.name());
      }
    }
  }
  if (unit_.size() != n) throw DimensionMismatch("unit has wrong length");
  build_tables();
  validate();
}

Algebra::Algebra(Trusted, Field field, std::vector<std::string> basis_names, std::vector<std::vector<Vec>> mul,
                 Vec unit)
    : field_(field), names_(std::move(basis_names)), mul_(std::move(mul)), unit_(std::move(unit)) {
  build_tables();
}

void Algebra::build_tables() {
  const std::size_t n = names_.size();
  sparse_.assign(n, std::vector<std::vector<Term>>(n));
  left_.assign(n, Matrix(field_, n, n));
  right_.assign(n, Matrix(field_, n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = mul_[i][j][k];
        if (c.is_zero()) continue;
        sparse_[i][j].push_back({k, c});
        left_[i].at(k, j) = c;
        right_[j].at(k, i) = c;
      }
}

void Algebra::validate() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i) {
    Vec b = basis(i);
    if (mul(unit_, b) != b || mul(b, unit_) != b)
      throw InputError("unit is not a two-sided identity on basis vector " + std::to_string(i));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec lhs = right_[k] * mul_[i][j];
        Vec rhs = left_[i] * mul_[j][k];
        if (lhs != rhs)
          throw InputError("associativity fails on basis triple (" + std::to_string(i) + "," + std::to_string(j) +
                           "," + std::to_string(k) + ")");
      }
}

Vec Algebra::mul(const Vec& a, const Vec& b) const {
  const std::size_t n = dim();
  if (a.size() != n || b.size() != n) throw DimensionMismatch("element length does not match algebra dimension");
  if (field_.is_finite()) {
    const std::uint64_t p = field_.characteristic();
    std::vector<std::uint64_t> acc(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t ai = a[i].residue();
      if (ai == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        std::uint64_t bj = b[j].residue();
        if (bj == 0) continue;
        std::uint64_t ab = ai * bj % p;
        for (const auto& t : sparse_[i][j]) acc[t.k] = (acc[t.k] + ab * t.c.residue()) % p;
      }
    }
    Vec out;
    out.reserve(n);
    for (auto x : acc) out.push_back(Scalar(Scalar::ModP{static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(p)}));
    return out;
  }
  Vec out = zero();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      Scalar ab = a[i] * b[j];
      for (const auto& t : sparse_[i][j]) out[t.k] += ab * t.c;
    }
  }
  return out;
}

Vec Algebra::pow(const Vec& a, std::uint64_t e) const {
  Vec r = unit_, b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

Matrix Algebra::left_mult(const Vec& a) const {
  Matrix m(field_, dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (!a[i].is_zero()) m = m + left_[i].scaled(a[i]);
  return m;
}

Matrix Algebra::right_mult(const Vec& a) const {
  Matrix m(field_, dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (!a[i].is_zero()) m = m + right_[i].scaled(a[i]);
  return m;
}

bool Algebra::is_commutative() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      if (mul_[i][j] != mul_[j][i]) return false;
  return true;
}

bool Algebra::is_idempotent(const Vec& e) const { return mul(e, e) == e; }

bool Algebra::is_central(const Vec& z) const {
  for (std::size_t i = 0; i < dim(); ++i) {
    Vec b = basis(i);
    if (mul(z, b) != mul(b, z)) return false;
  }
  return true;
}

Algebra Algebra::opposite() const {
  std::vector<std::vector<Vec>> m(dim(), std::vector<Vec>(dim()));
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) m[i][j] = mul_[j][i];
  return Algebra(Trusted{}, field_, names_, std::move(m), unit_);
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(const Field& f, std::size_t ambient_dim, const std::vector<Vec>& generators)
    : field_(f), ambient_(ambient_dim) {
  RowReducer rr(f, ambient_dim);
  for (const auto& g : generators) {
    if (rr.rank() == ambient_dim) break;
    rr.add(g);
  }
  basis_ = rr.basis();
  pivots_ = rr.pivots();
}

Subspace Subspace::whole(const Field& f, std::size_t n) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(unit_vec(f, n, i));
  return Subspace(f, n, gens);
}

Subspace Subspace::coordinate(const Field& f, std::size_t n, const std::vector<std::size_t>& indices) {
  std::vector<Vec> gens;
  for (auto i : indices) gens.push_back(unit_vec(f, n, i));
  return Subspace(f, n, gens);
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector length does not match subspace ambient dimension");
  Vec c;
  c.reserve(basis_.size());
  Vec rest = v;
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    Scalar x = rest[pivots_[r]];
    c.push_back(x);
    if (!x.is_zero()) axpy(rest, -x, basis_[r]);
  }
  if (!grado::is_zero(rest)) return std::nullopt;
  return c;
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vec& v) { return contains(v); });
}

Subspace Subspace::sum(const Subspace& other) const {
  std::vector<Vec> gens = basis_;
  gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
  return Subspace(field_, ambient_, gens);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (is_zero() || other.is_zero()) return Subspace(field_, ambient_);
  std::vector<Vec> cols = basis_;
  for (const auto& b : other.basis_) cols.push_back(scale(-field_.one(), b));
  auto ker = nullspace(Matrix::from_columns(field_, ambient_, cols));
  std::vector<Vec> gens;
  for (const auto& k : ker) {
    Vec v = zero_vec(field_, ambient_);
    for (std::size_t r = 0; r < basis_.size(); ++r) axpy(v, k[r], basis_[r]);
    gens.push_back(std::move(v));
  }
  return Subspace(field_, ambient_, gens);
}

Subspace Subspace::image(const Matrix& m) const {
  if (m.cols() != ambient_) throw DimensionMismatch("image: matrix width does not match ambient dimension");
  std::vector<Vec> gens;
  for (const auto& b : basis_) gens.push_back(m * b);
  return Subspace(field_, m.rows(), gens);
}

// ---------------------------------------------------------------------------
// Products, centers, identities

Subspace product_span(const Algebra& a, const Subspace& x, const Subspace& y) {
  if (x.ambient_dim() != a.dim() || y.ambient_dim() != a.dim())
    throw DimensionMismatch("product_span: subspaces do not live in this algebra");
  RowReducer rr(a.field(), a.dim());
  for (const auto& u : x.basis())
    for (const auto& v : y.basis()) {
      if (rr.rank() == a.dim()) break;
      rr.add(a.mul(u, v));
    }
  return Subspace(a.field(), a.dim(), rr.basis());
}

Subspace left_ideal_span(const Algebra& a, const Vec& s, const Subspace& x) {
  std::vector<Vec> gens;
  for (const auto& v : x.basis()) gens.push_back(a.mul(s, v));
  return Subspace(a.field(), a.dim(), gens);
}

Subspace right_ideal_span(const Algebra& a, const Subspace& x, const Vec& s) {
  std::vector<Vec> gens;
  for (const auto& v : x.basis()) gens.push_back(a.mul(v, s));
  return Subspace(a.field(), a.dim(), gens);
}

Subspace centralizer(const Algebra& a, const Subspace& s) {
  RowReducer rr(a.field(), a.dim());
  for (const auto& v : s.basis()) {
    Matrix c = a.right_mult(v) - a.left_mult(v);
    for (std::size_t r = 0; r < c.rows(); ++r) {
      if (rr.rank() == a.dim()) break;
      rr.add(c.row(r));
    }
  }
  return Subspace(a.field(), a.dim(), rr.nullspace());
}

Subspace center(const Algebra& a) { return centralizer(a, Subspace::whole(a.field(), a.dim())); }

std::optional<Vec> ideal_identity(const Algebra& a, const Subspace& j, const Subspace& within) {
  for (const auto& w : within.basis())
    for (const auto& x : j.basis())
      if (!j.contains(a.mul(w, x)) || !j.contains(a.mul(x, w)))
        throw PreconditionError("ideal_identity: subspace is not a two-sided ideal");
  if (j.is_zero()) return a.zero();

  const std::size_t m = j.dim(), n = a.dim();
  Matrix sys(a.field(), 2 * m * n, m);
  Vec rhs;
  rhs.reserve(2 * m * n);
  for (std::size_t xi = 0; xi < m; ++xi) {
    const Vec& x = j.basis()[xi];
    for (std::size_t t = 0; t < m; ++t) {
      Vec l = a.mul(j.basis()[t], x);
      Vec r = a.mul(x, j.basis()[t]);
      for (std::size_t k = 0; k < n; ++k) {
        sys.at((2 * xi) * n + k, t) = l[k];
        sys.at((2 * xi + 1) * n + k, t) = r[k];
      }
    }
  }
  for (std::size_t xi = 0; xi < m; ++xi)
    for (int side = 0; side < 2; ++side)
      for (std::size_t k = 0; k < n; ++k) rhs.push_back(j.basis()[xi][k]);
  auto sol = solve_linear(sys, rhs);
  if (!sol.consistent) return std::nullopt;
  if (!sol.kernel.empty()) throw VerificationError("ideal identity is not unique");
  Vec e = a.zero();
  for (std::size_t t = 0; t < m; ++t) axpy(e, (*sol.particular)[t], j.basis()[t]);
  return e;
}

// ---------------------------------------------------------------------------
// Idempotents

namespace {

std::vector<Vec> exhaustive_idempotents(const Algebra& a) {
  const std::uint32_t p = a.field().characteristic();
  std::vector<std::uint32_t> digits(a.dim(), 0);
  std::vector<Vec> out;
  while (true) {
    Vec x;
    x.reserve(a.dim());
    for (auto d : digits) x.push_back(a.field().element(d));
    if (a.is_idempotent(x)) out.push_back(std::move(x));
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return out;
}

std::size_t leading_index(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return i;
  return v.size();
}

void canonical_order(std::vector<Vec>& es) {
  std::sort(es.begin(), es.end(), [](const Vec& x, const Vec& y) {
    auto lx = leading_index(x), ly = leading_index(y);
    if (lx != ly) return lx < ly;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i].residue() != y[i].residue()) return x[i].residue() > y[i].residue();
    return false;
  });
}

constexpr std::uint32_t kSmallPrime = 257;

}  // namespace

std::vector<Vec> primitive_idempotents(const Algebra& a, std::uint64_t seed) {
  if (!a.field().is_finite() || !a.is_commutative())
    throw PreconditionError("primitive idempotent splitting needs a commutative algebra over GF(p)");
  const Field& f = a.field();
  const std::uint32_t p = f.characteristic();
  const std::size_t n = a.dim();

  // Berlekamp subalgebra: fixed points of Frobenius, one dimension per local factor.
  Matrix frob(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec img = a.pow(a.basis(i), p);
    for (std::size_t k = 0; k < n; ++k) frob.at(k, i) = img[k];
  }
  std::vector<Vec> berlekamp = nullspace(frob - Matrix::identity(f, n));
  const std::size_t target = berlekamp.size();

  std::vector<Vec> parts{a.one()};
  if (p <= kSmallPrime) {
    for (const auto& b : berlekamp) {
      if (parts.size() == target) break;
      std::vector<Vec> next;
      for (const auto& e : parts) {
        Vec x = a.mul(e, b);
        for (std::uint32_t c = 0; c < p; ++c) {
          Vec y = sub(x, scale(f.element(c), e));
          Vec piece = sub(e, a.pow(y, p - 1));
          if (!is_zero(piece)) next.push_back(std::move(piece));
        }
      }
      parts = std::move(next);
    }
  } else {
    std::mt19937_64 rng(seed);
    const Scalar half = f.from_int(2).inverse();
    std::uint64_t attempts = 0;
    while (parts.size() < target) {
      if (++attempts > 100000) throw SearchBudgetExceeded("idempotent splitting did not converge");
      Vec x = a.zero();
      for (const auto& b : berlekamp) axpy(x, f.random(rng), b);
      std::vector<Vec> next;
      for (const auto& e : parts) {
        Vec y = a.pow(a.mul(e, x), (p - 1) / 2);
        y = a.mul(y, e);
        Vec piece = scale(half, add(a.mul(y, y), y));
        if (!is_zero(piece) && piece != e) {
          next.push_back(piece);
          next.push_back(sub(e, piece));
        } else {
          next.push_back(e);
        }
      }
      parts = std::move(next);
    }
  }
  if (parts.size() != target) throw VerificationError("idempotent splitting produced the wrong number of factors");
  canonical_order(parts);
  return parts;
}

IdempotentResult find_idempotents(const Algebra& a, std::uint64_t budget, IdempotentMode mode, std::uint64_t seed) {
  const bool finite = a.field().is_finite();
  const bool affordable = finite && bounded_power(a.field().characteristic(), a.dim(), budget) != 0;
  const bool splittable = finite && a.is_commutative();
  if (mode == IdempotentMode::automatic) {
    if (affordable) mode = IdempotentMode::exhaustive;
    else if (splittable) mode = IdempotentMode::splitting;
    else throw SearchBudgetExceeded("idempotent search space exceeds budget and algebra is not splittable");
  }
  if (mode == IdempotentMode::exhaustive) {
    if (!affordable) throw SearchBudgetExceeded("exhaustive idempotent search exceeds budget");
    return {mode, exhaustive_idempotents(a)};
  }
  return {mode, primitive_idempotents(a, seed)};
}

// ---------------------------------------------------------------------------
// Constructions

Algebra subalgebra(const Algebra& a, const std::vector<Vec>& basis, const Vec& unit) {
  BasisCoords coords(a.field(), a.dim(), basis);
  const std::size_t m = basis.size();
  std::vector<std::vector<Vec>> mul(m, std::vector<Vec>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto c = coords(a.mul(basis[i], basis[j]));
      if (!c) throw InputError("subalgebra basis is not closed under multiplication");
      mul[i][j] = std::move(*c);
    }
  auto u = coords(unit);
  if (!u) throw InputError("subalgebra unit is not in the span");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back("s" + std::to_string(i));
  return Algebra(a.field(), std::move(names), std::move(mul), std::move(*u));
}

Algebra coordinate_subalgebra(const Algebra& a, const std::vector<std::size_t>& indices) {
  std::vector<std::size_t> pos(a.dim(), a.dim());
  for (std::size_t t = 0; t < indices.size(); ++t) pos[indices[t]] = t;
  auto restrict = [&](const Vec& v) {
    Vec out = zero_vec(a.field(), indices.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k].is_zero()) continue;
      if (pos[k] == a.dim()) throw InputError("coordinate subalgebra is not closed under multiplication");
      out[pos[k]] = v[k];
    }
    return out;
  };
  std::vector<std::vector<Vec>> mul(indices.size(), std::vector<Vec>(indices.size()));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    names.push_back(a.basis_names()[indices[i]]);
    for (std::size_t j = 0; j < indices.size(); ++j) mul[i][j] = restrict(a.structure(indices[i], indices[j]));
  }
  return Algebra(a.field(), std::move(names), std::move(mul), restrict(a.one()));
}

Algebra matrix_algebra(const Algebra& a, std::size_t n) {
  if (n == 0) throw InputError("matrix size must be positive");
  const std::size_t d = a.dim(), dim = n * n * d;
  auto idx = [&](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * d + k; };
  std::vector<std::vector<Vec>> mul(dim, std::vector<Vec>(dim, zero_vec(a.field(), dim)));
  std::vector<std::string> names(dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        names[idx(i, j, k)] = a.basis_names()[k] + "*e" + std::to_string(i + 1) + std::to_string(j + 1);
        for (std::size_t m = 0; m < n; ++m)
          for (std::size_t l = 0; l < d; ++l) {
            Vec& out = mul[idx(i, j, k)][idx(j, m, l)];
            const Vec& c = a.structure(k, l);
            for (std::size_t t = 0; t < d; ++t) out[idx(i, m, t)] = c[t];
          }
      }
  Vec unit = zero_vec(a.field(), dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < d; ++t) unit[idx(i, i, t)] = a.one()[t];
  return Algebra(a.field(), std::move(names), std::move(mul), std::move(unit));
}

Algebra tensor_algebra(const Algebra& a, const Algebra& b) {
  if (a.field() != b.field()) throw InputError("tensor_algebra: field mismatch");
  const std::size_t da = a.dim(), db = b.dim(), dim = da * db;
  std::vector<std::vector<Vec>> mul(dim, std::vector<Vec>(dim, zero_vec(a.field(), dim)));
  std::vector<std::string> names(dim);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) {
      names[i * db + j] = a.basis_names()[i] + "(x)" + b.basis_names()[j];
      for (std::size_t k = 0; k < da; ++k)
        for (std::size_t l = 0; l < db; ++l) {
          Vec& out = mul[i * db + j][k * db + l];
          const Vec& ca = a.structure(i, k);
          const Vec& cb = b.structure(j, l);
          for (std::size_t s = 0; s < da; ++s) {
            if (ca[s].is_zero()) continue;
            for (std::size_t t = 0; t < db; ++t) out[s * db + t] = ca[s] * cb[t];
          }
        }
    }
  Vec unit = zero_vec(a.field(), dim);
  for (std::size_t s = 0; s < da; ++s)
    for (std::size_t t = 0; t < db; ++t) unit[s * db + t] = a.one()[s] * b.one()[t];
  return Algebra(a.field(), std::move(names), std::move(mul), std::move(unit));
}

Algebra direct_product(const Algebra& a, const Algebra& b) {
  if (a.field() != b.field()) throw InputError("direct_product: field mismatch");
  const std::size_t da = a.dim(), dim = da + b.dim();
  std::vector<std::vector<Vec>> mul(dim, std::vector<Vec>(dim, zero_vec(a.field(), dim)));
  std::vector<std::string> names = a.basis_names();
  names.insert(names.end(), b.basis_names().begin(), b.basis_names().end());
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      std::copy(a.structure(i, j).begin(), a.structure(i, j).end(), mul[i][j].begin());
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      std::copy(b.structure(i, j).begin(), b.structure(i, j).end(), mul[da + i][da + j].begin() + da);
  Vec unit = a.one();
  unit.insert(unit.end(), b.one().begin(), b.one().end());
  return Algebra(a.field(), std::move(names), std::move(mul), std::move(unit));
}

Algebra diagonal_algebra(const Field& f, std::size_t n) {
  std::vector<std::vector<Vec>> mul(n, std::vector<Vec>(n, zero_vec(f, n)));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    mul[i][i] = unit_vec(f, n, i);
    names.push_back("e" + std::to_string(i + 1));
  }
  Vec unit(n, f.one());
  return Algebra(f, std::move(names), std::move(mul), std::move(unit));
}

Algebra full_matrix_algebra(const Field& f, std::size_t n) {
  const std::size_t dim = n * n;
  std::vector<std::vector<Vec>> mul(dim, std::vector<Vec>(dim, zero_vec(f, dim)));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      names.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
      for (std::size_t k = 0; k < n; ++k) mul[i * n + j][j * n + k] = unit_vec(f, dim, i * n + k);
    }
  Vec unit = zero_vec(f, dim);
  for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = f.one();
  return Algebra(f, std::move(names), std::move(mul), std::move(unit));
}

}  // namespace grado
