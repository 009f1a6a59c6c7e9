#pragma once

/**
 * @file exactnum.hpp
 * @brief Exact scalars (prime fields and rationals) and dense linear algebra.
 *
 * Every predicate in the library is decided over an exact field, so there is
 * no floating point anywhere. A Field is a small value descriptor: GF(p) for a
 * prime p < 2^31, or Q. Scalars carry their field, which keeps arithmetic
 * self-contained; mixing fields is a programming error and throws.
 *
 * Matrices act on column vectors. All the elimination routines have a fast
 * path for GF(p) that works on machine words.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "grado/errors.hpp"

namespace grado {

class Scalar;

class Field {
 public:
  /// GF(p); throws InputError unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);
  static Field rationals() { return Field(0); }

  bool is_finite() const { return p_ != 0; }
  std::uint32_t characteristic() const { return p_; }
  /// Number of elements for GF(p); nullopt for Q.
  std::optional<std::uint64_t> order() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_rational(const mpq_class& q) const;
  /// k-th element in the canonical enumeration 0..p-1 (finite fields only).
  Scalar element(std::uint64_t k) const;
  Scalar random(std::mt19937_64& rng) const;

  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

 private:
  friend class Scalar;
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/// Element of GF(p) (canonical representative 0..p-1) or a normalized rational.
class Scalar {
 public:
  struct ModP {
    std::uint32_t v;
    std::uint32_t p;
  };

  Scalar(ModP m) : rep_(m) {}
  Scalar(mpq_class q) : rep_(std::move(q)) {}

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  /// Canonical residue (GF(p) only).
  std::uint32_t residue() const;
  /// Rational value (Q only).
  const mpq_class& rational() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// "3" for GF(p), "3/2" or "-4" for Q.
  std::string to_string() const;

 private:
  const ModP* modp() const { return std::get_if<ModP>(&rep_); }
  std::variant<ModP, mpq_class> rep_;
};

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, std::size_t n);
Vec unit_vec(const Field& f, std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
/// a += c * b
void axpy(Vec& a, const Scalar& c, const Vec& b);

class Matrix {
 public:
  Matrix(const Field& f, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_rows(const Field& f, std::size_t cols, const std::vector<Vec>& rows);
  static Matrix from_columns(const Field& f, std::size_t rows, const std::vector<Vec>& cols);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  std::vector<Vec> row_list() const;
  std::vector<Vec> column_list() const;
  Matrix transpose() const;
  bool is_zero() const;
  /// Row-major flattening.
  const std::vector<Scalar>& data() const { return data_; }
  Vec flatten() const { return data_; }
  static Matrix unflatten(const Field& f, std::size_t rows, std::size_t cols, const Vec& v);

  Matrix operator*(const Matrix& o) const;
  Vec operator*(const Vec& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Σ c_i M_i for matrices of identical shape.
Matrix linear_combination(const std::vector<Scalar>& coeffs, const std::vector<Matrix>& mats);

/// Reduced row echelon form with pivot columns.
struct Echelon {
  Matrix rref;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

Echelon row_reduce(const Matrix& a);
std::size_t rank(const Matrix& a);
/// Basis of ker(A) (column vectors x with Ax = 0), one per free column.
std::vector<Vec> nullspace(const Matrix& a);

struct LinearSolution {
  bool consistent = false;
  std::optional<Vec> particular;
  std::vector<Vec> kernel;
};

/// Solves Ax = b exactly; throws DimensionMismatch when A.rows != b.size.
LinearSolution solve_linear(const Matrix& a, const Vec& b);
/// Matrix right-hand side with a single column.
LinearSolution solve_linear(const Matrix& a, const Matrix& b);
/// Throws DimensionMismatch on non-square input.
bool invertible(const Matrix& a);
std::optional<Matrix> inverse(const Matrix& a);

/**
 * Incremental Gauss-Jordan elimination.
 *
 * Holds a reduced basis of the span of the rows fed so far. Large, highly
 * redundant equation systems are fed row by row so the working set never
 * exceeds the rank.
 */
class RowReducer {
 public:
  RowReducer(const Field& f, std::size_t cols);

  /// Returns true if the row was independent of the current span.
  bool add(const Vec& row);
  /// Reduces v against the current basis; zero iff v lies in the span.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;

  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  /// Canonical RREF rows, sorted by pivot column.
  std::vector<Vec> basis() const;
  std::vector<std::size_t> pivots() const;
  /// Kernel of the row system: vectors x with <row, x> = 0 for every row added.
  std::vector<Vec> nullspace() const;

 private:
  Field field_;
  std::size_t cols_;
  // Raw residues for GF(p); the rational path keeps Scalars.
  std::vector<std::vector<std::uint32_t>> fast_rows_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace grado
