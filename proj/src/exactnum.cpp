#include "grado/exactnum.hpp"

#include <algorithm>
#include <numeric>

#include "grado/search.hpp"

namespace grado {

namespace {

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p, b = a % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  long long t = 0, nt = 1, r = p, nr = a;
  while (nr) {
    long long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_same(const Field& a, const Field& b) {
  if (a != b) throw InputError("field mismatch: " + a.name() + " vs " + b.name());
}

// Dense residue matrix for the GF(p) elimination path.
using Rows32 = std::vector<std::vector<std::uint32_t>>;

Rows32 residues(const Matrix& m) {
  Rows32 out(m.rows(), std::vector<std::uint32_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.at(r, c).residue();
  return out;
}

// a -= c * b over GF(p), starting at column `from`.
void sub_mul(std::vector<std::uint32_t>& a, std::uint32_t c, const std::vector<std::uint32_t>& b,
             std::uint32_t p, std::size_t from) {
  if (c == 0) return;
  const std::uint64_t nc = p - c;
  for (std::size_t k = from; k < a.size(); ++k) {
    if (b[k] == 0) continue;
    a[k] = static_cast<std::uint32_t>((a[k] + nc * b[k]) % p);
  }
}

void scale_row(std::vector<std::uint32_t>& a, std::uint32_t c, std::uint32_t p) {
  for (auto& x : a) x = mul_mod(x, c, p);
}

}  // namespace

// ---------------------------------------------------------------------------
// Field

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p))
    throw InputError("characteristic must be a prime below 2^31, got " + std::to_string(p));
  return Field(static_cast<std::uint32_t>(p));
}

std::optional<std::uint64_t> Field::order() const {
  if (!is_finite()) return std::nullopt;
  return p_;
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  if (!is_finite()) return Scalar(mpq_class(static_cast<long>(v)));
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Scalar(Scalar::ModP{static_cast<std::uint32_t>(r), p_});
}

Scalar Field::from_rational(const mpq_class& q) const {
  if (!is_finite()) return Scalar(q);
  mpz_class num = q.get_num() % p_;
  mpz_class den = q.get_den() % p_;
  if (num < 0) num += p_;
  if (den == 0) throw InputError("denominator vanishes in " + name());
  std::uint32_t n = static_cast<std::uint32_t>(num.get_ui());
  std::uint32_t d = static_cast<std::uint32_t>(den.get_ui());
  return Scalar(Scalar::ModP{mul_mod(n, inv_mod(d, p_), p_), p_});
}

Scalar Field::element(std::uint64_t k) const {
  if (!is_finite()) throw PreconditionError("element enumeration requires a finite field");
  return Scalar(Scalar::ModP{static_cast<std::uint32_t>(k % p_), p_});
}

Scalar Field::random(std::mt19937_64& rng) const {
  if (is_finite()) {
    std::uniform_int_distribution<std::uint32_t> d(0, p_ - 1);
    return Scalar(Scalar::ModP{d(rng), p_});
  }
  std::uniform_int_distribution<int> d(-4, 4);
  return from_int(d(rng));
}

std::string Field::name() const { return is_finite() ? "GF(" + std::to_string(p_) + ")" : "Q"; }

// ---------------------------------------------------------------------------
// Scalar

Field Scalar::field() const {
  if (auto m = modp()) return Field(m->p);
  return Field(0);
}

bool Scalar::is_zero() const {
  if (auto m = modp()) return m->v == 0;
  return std::get<mpq_class>(rep_) == 0;
}

bool Scalar::is_one() const {
  if (auto m = modp()) return m->v == 1 % m->p;
  return std::get<mpq_class>(rep_) == 1;
}

std::uint32_t Scalar::residue() const {
  auto m = modp();
  if (!m) throw PreconditionError("residue() on a rational scalar");
  return m->v;
}

const mpq_class& Scalar::rational() const {
  auto q = std::get_if<mpq_class>(&rep_);
  if (!q) throw PreconditionError("rational() on a GF(p) scalar");
  return *q;
}

Scalar Scalar::operator+(const Scalar& o) const {
  auto a = modp(), b = o.modp();
  if (a && b && a->p == b->p) {
    std::uint32_t s = a->v + b->v;
    if (s >= a->p) s -= a->p;
    return Scalar(ModP{s, a->p});
  }
  require_same(field(), o.field());
  return Scalar(mpq_class(rational() + o.rational()));
}

Scalar Scalar::operator-(const Scalar& o) const {
  auto a = modp(), b = o.modp();
  if (a && b && a->p == b->p) {
    std::uint32_t s = a->v >= b->v ? a->v - b->v : a->v + (a->p - b->v);
    return Scalar(ModP{s, a->p});
  }
  require_same(field(), o.field());
  return Scalar(mpq_class(rational() - o.rational()));
}

Scalar Scalar::operator*(const Scalar& o) const {
  auto a = modp(), b = o.modp();
  if (a && b && a->p == b->p) return Scalar(ModP{mul_mod(a->v, b->v, a->p), a->p});
  require_same(field(), o.field());
  return Scalar(mpq_class(rational() * o.rational()));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  if (auto a = modp()) return Scalar(ModP{a->v == 0 ? 0 : a->p - a->v, a->p});
  return Scalar(mpq_class(-rational()));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero");
  if (auto a = modp()) return Scalar(ModP{inv_mod(a->v, a->p), a->p});
  return Scalar(mpq_class(1 / rational()));
}

Scalar Scalar::pow(std::uint64_t e) const {
  if (auto a = modp()) return Scalar(ModP{pow_mod(a->v, e, a->p), a->p});
  mpq_class r = 1, b = rational();
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return Scalar(r);
}

bool operator==(const Scalar& a, const Scalar& b) {
  auto x = a.modp(), y = b.modp();
  if (x && y) return x->p == y->p && x->v == y->v;
  if (x || y) return false;
  return a.rational() == b.rational();
}

std::string Scalar::to_string() const {
  if (auto a = modp()) return std::to_string(a->v);
  return rational().get_str();
}

// ---------------------------------------------------------------------------
// Vectors

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, f.zero()); }

Vec unit_vec(const Field& f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v.at(i) = f.one();
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
  Vec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
  Vec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vec scale(const Scalar& c, const Vec& v) {
  Vec out = v;
  for (auto& x : out) x = c * x;
  return out;
}

void axpy(Vec& a, const Scalar& c, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] += c * b[i];
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Matrix Matrix::from_rows(const Field& f, std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const Field& f, std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionMismatch("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::col(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

std::vector<Vec> Matrix::row_list() const {
  std::vector<Vec> out;
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

std::vector<Vec> Matrix::column_list() const {
  std::vector<Vec> out;
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(col(c));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool Matrix::is_zero() const { return grado::is_zero(data_); }

Matrix Matrix::unflatten(const Field& f, std::size_t rows, std::size_t cols, const Vec& v) {
  if (v.size() != rows * cols) throw DimensionMismatch("flat length mismatch");
  Matrix m(f, rows, cols);
  m.data_ = v;
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
  require_same(field_, o.field_);
  Matrix out(field_, rows_, o.cols_);
  if (field_.is_finite()) {
    const std::uint32_t p = field_.characteristic();
    std::vector<std::uint64_t> acc(o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < cols_; ++k) {
        std::uint64_t a = at(i, k).residue();
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          acc[j] = (acc[j] + a * o.at(k, j).residue()) % p;
      }
      for (std::size_t j = 0; j < o.cols_; ++j)
        out.at(i, j) = Scalar(Scalar::ModP{static_cast<std::uint32_t>(acc[j]), p});
    }
    return out;
  }
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out.at(i, j) += a * o.at(k, j);
    }
  return out;
}

Vec Matrix::operator*(const Vec& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
  Vec out = zero_vec(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r)
      if (!at(r, c).is_zero()) out[r] += at(r, c) * v[c];
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix out = *this;
  for (auto& x : out.data_) x = c * x;
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix linear_combination(const std::vector<Scalar>& coeffs, const std::vector<Matrix>& mats) {
  if (coeffs.size() != mats.size() || mats.empty())
    throw DimensionMismatch("linear_combination needs matching non-empty inputs");
  Matrix out(mats[0].field(), mats[0].rows(), mats[0].cols());
  for (std::size_t i = 0; i < mats.size(); ++i)
    if (!coeffs[i].is_zero()) out = out + mats[i].scaled(coeffs[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

Echelon rref_fast(const Matrix& a) {
  const std::uint32_t p = a.field().characteristic();
  Rows32 m = residues(a);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && m[piv][c] == 0) ++piv;
    if (piv == a.rows()) continue;
    std::swap(m[piv], m[r]);
    scale_row(m[r], inv_mod(m[r][c], p), p);
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (i != r) sub_mul(m[i], m[i][c], m[r], p, c);
    pivots.push_back(c);
    ++r;
  }
  Matrix out(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t c = 0; c < a.cols(); ++c) out.at(i, c) = Scalar(Scalar::ModP{m[i][c], p});
  return {std::move(out), std::move(pivots)};
}

Echelon rref_generic(const Matrix& a) {
  std::vector<Vec> m = a.row_list();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && m[piv][c].is_zero()) ++piv;
    if (piv == a.rows()) continue;
    std::swap(m[piv], m[r]);
    m[r] = scale(m[r][c].inverse(), m[r]);
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (i != r && !m[i][c].is_zero()) axpy(m[i], -m[i][c], m[r]);
    pivots.push_back(c);
    ++r;
  }
  return {Matrix::from_rows(a.field(), a.cols(), m), std::move(pivots)};
}

std::vector<Vec> kernel_from_rref(const Echelon& e, std::size_t cols) {
  const Field& f = e.rref.field();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(f, cols);
    v[free] = f.one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rref.at(r, free);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

Echelon row_reduce(const Matrix& a) {
  if (a.field().is_finite()) return rref_fast(a);
  return rref_generic(a);
}

std::size_t rank(const Matrix& a) { return row_reduce(a).rank(); }

std::vector<Vec> nullspace(const Matrix& a) { return kernel_from_rref(row_reduce(a), a.cols()); }

LinearSolution solve_linear(const Matrix& a, const Vec& b) {
  if (a.rows() != b.size()) throw DimensionMismatch("solve_linear: A has " + std::to_string(a.rows()) +
                                                    " rows but b has " + std::to_string(b.size()));
  const Field& f = a.field();
  Matrix aug(f, a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  Echelon e = row_reduce(aug);
  LinearSolution sol;
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return sol;
  sol.consistent = true;
  Vec x = zero_vec(f, a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.rref.at(r, a.cols());
  sol.particular = std::move(x);
  Echelon ea{e.rref, e.pivots};
  sol.kernel = kernel_from_rref(ea, a.cols());
  return sol;
}

LinearSolution solve_linear(const Matrix& a, const Matrix& b) {
  if (b.cols() != 1) throw DimensionMismatch("solve_linear expects a single right-hand column");
  return solve_linear(a, b.col(0));
}

bool invertible(const Matrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("invertible: matrix is not square");
  return rank(a) == a.rows();
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("inverse: matrix is not square");
  const std::size_t n = a.rows();
  Matrix aug(a.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, n + r) = a.field().one();
  }
  Echelon e = row_reduce(aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(a.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = e.rref.at(r, n + c);
  return inv;
}

// ---------------------------------------------------------------------------
// RowReducer

RowReducer::RowReducer(const Field& f, std::size_t cols) : field_(f), cols_(cols) {}

bool RowReducer::add(const Vec& row) {
  if (row.size() != cols_) throw DimensionMismatch("RowReducer: row length mismatch");
  if (field_.is_finite()) {
    const std::uint32_t p = field_.characteristic();
    std::vector<std::uint32_t> v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = row[c].residue();
    for (std::size_t i = 0; i < fast_rows_.size(); ++i) sub_mul(v, v[pivots_[i]], fast_rows_[i], p, 0);
    auto it = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
    if (it == v.end()) return false;
    const std::size_t pc = static_cast<std::size_t>(it - v.begin());
    scale_row(v, inv_mod(v[pc], p), p);
    for (auto& r : fast_rows_) sub_mul(r, r[pc], v, p, 0);
    fast_rows_.push_back(std::move(v));
    pivots_.push_back(pc);
    return true;
  }
  Vec v = reduce(row);
  auto it = std::find_if(v.begin(), v.end(), [](const Scalar& x) { return !x.is_zero(); });
  if (it == v.end()) return false;
  const std::size_t pc = static_cast<std::size_t>(it - v.begin());
  v = scale(v[pc].inverse(), v);
  for (auto& r : rows_)
    if (!r[pc].is_zero()) axpy(r, -r[pc], v);
  rows_.push_back(std::move(v));
  pivots_.push_back(pc);
  return true;
}

Vec RowReducer::reduce(const Vec& v) const {
  if (v.size() != cols_) throw DimensionMismatch("RowReducer: vector length mismatch");
  if (field_.is_finite()) {
    const std::uint32_t p = field_.characteristic();
    std::vector<std::uint32_t> w(cols_);
    for (std::size_t c = 0; c < cols_; ++c) w[c] = v[c].residue();
    for (std::size_t i = 0; i < fast_rows_.size(); ++i) sub_mul(w, w[pivots_[i]], fast_rows_[i], p, 0);
    Vec out;
    out.reserve(cols_);
    for (auto x : w) out.push_back(Scalar(Scalar::ModP{x, p}));
    return out;
  }
  Vec w = v;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (!w[pivots_[i]].is_zero()) axpy(w, -w[pivots_[i]], rows_[i]);
  return w;
}

bool RowReducer::contains(const Vec& v) const { return grado::is_zero(reduce(v)); }

std::vector<Vec> RowReducer::basis() const {
  std::vector<std::size_t> order(pivots_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  std::vector<Vec> out;
  for (auto i : order) {
    if (field_.is_finite()) {
      Vec v;
      v.reserve(cols_);
      for (auto x : fast_rows_[i]) v.push_back(Scalar(Scalar::ModP{x, field_.characteristic()}));
      out.push_back(std::move(v));
    } else {
      out.push_back(rows_[i]);
    }
  }
  return out;
}

std::vector<std::size_t> RowReducer::pivots() const {
  std::vector<std::size_t> p = pivots_;
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<Vec> RowReducer::nullspace() const {
  std::vector<Vec> rows = basis();
  Matrix m = rows.empty() ? Matrix(field_, 0, cols_) : Matrix::from_rows(field_, cols_, rows);
  return kernel_from_rref({m, pivots()}, cols_);
}

// ---------------------------------------------------------------------------
// search.hpp helpers

std::string to_string(Decision d) {
  switch (d) {
    case Decision::yes: return "yes";
    case Decision::no: return "no";
    case Decision::undecided: return "undecided";
  }
  return "undecided";
}

std::string to_string(SearchStrategy::Kind k) {
  switch (k) {
    case SearchStrategy::Kind::automatic: return "automatic";
    case SearchStrategy::Kind::exhaustive: return "exhaustive";
    case SearchStrategy::Kind::random: return "random";
    case SearchStrategy::Kind::module_iso: return "module-iso";
  }
  return "automatic";
}

std::uint64_t bounded_power(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return 0;
    r *= base;
    if (r > cap) return 0;
  }
  return r;
}

}  // namespace grado
