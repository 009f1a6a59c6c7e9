#pragma once

/**
 * @file algebra.hpp
 * @brief Finite-dimensional associative unital algebras given by structure constants.
 *
 * Elements are coordinate vectors over the algebra's basis. Subspaces carry a
 * canonical reduced echelon basis, so two subspaces are equal exactly when
 * their bases are equal.
 */

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grado/exactnum.hpp"

namespace grado {

class Algebra {
 public:
  /// mul[i][j] holds the coordinates of b_i * b_j. Validates associativity and the unit.
  Algebra(Field field, std::vector<std::string> basis_names, std::vector<std::vector<Vec>> mul, Vec unit);

  const Field& field() const { return field_; }
  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  const Vec& structure(std::size_t i, std::size_t j) const { return mul_[i][j]; }
  const std::vector<std::vector<Vec>>& structure_constants() const { return mul_; }

  const Vec& one() const { return unit_; }
  Vec zero() const { return zero_vec(field_, dim()); }
  Vec basis(std::size_t i) const { return unit_vec(field_, dim(), i); }

  Vec mul(const Vec& a, const Vec& b) const;
  Vec pow(const Vec& a, std::uint64_t e) const;

  /// Matrix of x |-> a*x.
  Matrix left_mult(const Vec& a) const;
  /// Matrix of x |-> x*a.
  Matrix right_mult(const Vec& a) const;
  const Matrix& left_basis_mult(std::size_t i) const { return left_[i]; }
  const Matrix& right_basis_mult(std::size_t i) const { return right_[i]; }

  bool is_commutative() const;
  bool is_idempotent(const Vec& e) const;
  bool is_central(const Vec& z) const;

  /// A^op; not re-validated since A already was.
  Algebra opposite() const;

 private:
  struct Trusted {};
  Algebra(Trusted, Field field, std::vector<std::string> basis_names, std::vector<std::vector<Vec>> mul, Vec unit);
  void build_tables();

  struct Term {
    std::size_t k;
    Scalar c;
  };

  void validate() const;

  Field field_;
  std::vector<std::string> names_;
  std::vector<std::vector<Vec>> mul_;
  std::vector<std::vector<std::vector<Term>>> sparse_;
  Vec unit_;
  std::vector<Matrix> left_;
  std::vector<Matrix> right_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

class Subspace {
 public:
  Subspace(const Field& f, std::size_t ambient_dim, const std::vector<Vec>& generators = {});
  static Subspace whole(const Field& f, std::size_t n);
  static Subspace coordinate(const Field& f, std::size_t n, const std::vector<std::size_t>& indices);

  const Field& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Vec>& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in basis(); nullopt if v is not in the subspace.
  std::optional<Vec> coordinates(const Vec& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  Subspace image(const Matrix& m) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Field field_;
  std::size_t ambient_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

/// span{x*y : x in X, y in Y}.
Subspace product_span(const Algebra& a, const Subspace& x, const Subspace& y);
/// span{s*x : x in X} and span{x*s : x in X} for a single element s.
Subspace left_ideal_span(const Algebra& a, const Vec& s, const Subspace& x);
Subspace right_ideal_span(const Algebra& a, const Subspace& x, const Vec& s);

Subspace center(const Algebra& a);
/// {x : x*s = s*x for all s in S}.
Subspace centralizer(const Algebra& a, const Subspace& s);

/// Identity element of J. Throws PreconditionError unless J is a two-sided ideal of `within`.
std::optional<Vec> ideal_identity(const Algebra& a, const Subspace& j, const Subspace& within);

enum class IdempotentMode { automatic, exhaustive, splitting };

struct IdempotentResult {
  IdempotentMode mode;
  /// Exhaustive: every idempotent. Splitting: complete orthogonal primitive set.
  std::vector<Vec> idempotents;
};

/// Throws SearchBudgetExceeded when neither mode applies.
IdempotentResult find_idempotents(const Algebra& a, std::uint64_t budget = std::uint64_t{1} << 20,
                                  IdempotentMode mode = IdempotentMode::automatic, std::uint64_t seed = 1);

/// Complete orthogonal set of primitive idempotents of a commutative algebra over GF(p).
std::vector<Vec> primitive_idempotents(const Algebra& a, std::uint64_t seed = 1);

/// Algebra on span(basis) with identity `unit`; basis must be closed under products.
Algebra subalgebra(const Algebra& a, const std::vector<Vec>& basis, const Vec& unit);

/// Sub-algebra spanned by a set of basis vectors of `a` (coordinates are restricted, not re-solved).
Algebra coordinate_subalgebra(const Algebra& a, const std::vector<std::size_t>& indices);

/// Mn(A) with basis b_k e_ij at index (i*n + j)*dim + k.
Algebra matrix_algebra(const Algebra& a, std::size_t n);

/// A x B over the common field with basis (i, j) at index i*dim(B) + j.
Algebra tensor_algebra(const Algebra& a, const Algebra& b);

/// Direct product A x B with basis of A followed by basis of B.
Algebra direct_product(const Algebra& a, const Algebra& b);

/// k^n with coordinate idempotents.
Algebra diagonal_algebra(const Field& f, std::size_t n);

/// Full matrix algebra Mn(k) with basis e_ij at index i*n + j.
Algebra full_matrix_algebra(const Field& f, std::size_t n);

}  // namespace grado
