#pragma once

/**
 * @file module.hpp
 * @brief Finite-dimensional one- and two-sided modules over structure algebras.
 *
 * A Module carries an optional left ring and an optional right ring. Both
 * actions are stored as matrices on column vectors: left[i] is m |-> b_i m and
 * right[i] is m |-> m b_i.
 *
 * Tensor products are quotients of the field tensor product; see Quotient.
 */

#include <optional>
#include <string>
#include <vector>

#include "grado/algebra.hpp"
#include "grado/search.hpp"

namespace grado {

class Module {
 public:
  /// Validates unit, associativity and (for bimodules) commuting actions.
  Module(const Field& field, AlgebraPtr left_ring, AlgebraPtr right_ring, std::size_t dim, std::vector<Matrix> left,
         std::vector<Matrix> right);

  static Module left_module(AlgebraPtr ring, std::size_t dim, std::vector<Matrix> left);
  static Module right_module(AlgebraPtr ring, std::size_t dim, std::vector<Matrix> right);
  static Module bimodule(AlgebraPtr ring, std::size_t dim, std::vector<Matrix> left, std::vector<Matrix> right);

  /// R as a left module, a right module, or an (R,R)-bimodule over itself.
  static Module regular_left(AlgebraPtr ring);
  static Module regular_right(AlgebraPtr ring);
  static Module regular_bimodule(AlgebraPtr ring);

  /// Subspace U of `ambient` closed under the relevant actions, with its induced actions.
  static Module submodule(const Module& ambient, const Subspace& u);

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  bool has_left() const { return left_ring_ != nullptr; }
  bool has_right() const { return right_ring_ != nullptr; }
  const AlgebraPtr& left_ring() const { return left_ring_; }
  const AlgebraPtr& right_ring() const { return right_ring_; }
  const std::vector<Matrix>& left() const { return left_; }
  const std::vector<Matrix>& right() const { return right_; }

  Matrix act_left(const Vec& r) const;
  Matrix act_right(const Vec& r) const;

  /// Drops one side of the structure.
  Module left_part() const;
  Module right_part() const;

 private:
  void validate() const;

  Field field_;
  AlgebraPtr left_ring_;
  AlgebraPtr right_ring_;
  std::size_t dim_;
  std::vector<Matrix> left_;
  std::vector<Matrix> right_;
};

/// Pointer-equal or identical structure constants.
bool same_ring(const AlgebraPtr& a, const AlgebraPtr& b);

/**
 * Quotient V / W of an ambient coordinate space by a relation subspace.
 *
 * Quotient coordinates are the entries at the non-pivot columns of a vector
 * reduced against the relations, so the representation is canonical.
 */
class Quotient {
 public:
  Quotient(const Field& f, std::size_t ambient, const std::vector<Vec>& relations);

  std::size_t dim() const { return free_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  const std::vector<std::size_t>& free_columns() const { return free_; }

  Vec project(const Vec& v) const;
  /// Representative of the k-th quotient basis vector.
  Vec lift(std::size_t k) const;
  Vec lift(const Vec& coords) const;
  /// Map induced on the quotient by an ambient map preserving the relations.
  Matrix induced(const Matrix& t) const;

 private:
  Field field_;
  std::size_t ambient_;
  RowReducer relations_;
  std::vector<std::size_t> free_;
};

/// Basis of module homomorphisms M -> N (dim N x dim M matrices). Sides present on both must match.
std::vector<Matrix> hom_space(const Module& m, const Module& n);
bool is_module_hom(const Module& m, const Module& n, const Matrix& f);

struct IsoResult {
  Decision decision = Decision::undecided;
  std::optional<Matrix> witness;
  std::string reason;
  std::uint64_t candidates = 0;
};

/// Deterministic "no" only from invariants or an exhausted finite enumeration.
IsoResult is_isomorphic(const Module& m, const Module& n, const SearchStrategy& strategy = {});

/// Hom-dimension invariants that any isomorphism must preserve; false means certainly not isomorphic.
bool iso_invariants_agree(const Module& m, const Module& n, std::string* why = nullptr);

struct TensorProduct {
  Module module;
  Quotient quotient;
  std::size_t left_dim;   ///< dim M; ambient index (i, j) is i * dim N + j
  std::size_t right_dim;  ///< dim N

  /// Class of m (x) n.
  Vec simple_tensor(const Vec& m, const Vec& n) const;
};

/// M (x)_R N for M with a right R-action and N with a left R-action over the same ring.
TensorProduct tensor_over(const Module& m, const Module& n);

struct FgpResult {
  bool projective = false;
  std::vector<Vec> generators;
  std::optional<Matrix> surjection;  ///< R^k -> M
  std::optional<Matrix> section;     ///< M -> R^k with surjection * section = id
};

/// Finitely generated projective test for the left structure of M.
FgpResult is_fgp_left(const Module& m);
/// Same for the right structure.
FgpResult is_fgp_right(const Module& m);

struct PicsCertificate {
  bool member = false;
  std::string reason;
  FgpResult left_fgp;
  FgpResult right_fgp;
  bool l_surjective = false;  ///< R -> End(P_R)
  bool r_surjective = false;  ///< R -> End(_R P)
  /// Central idempotents with Ann(P_R) = R e1 and Ann(_R P) = R e2 (R coordinates).
  std::optional<Vec> e1;
  std::optional<Vec> e2;
};

PicsCertificate pics_membership(const Module& p);

/// Ring isomorphism theta: R 1_src -> R 1_tgt between ideals generated by central idempotents.
struct IdealIso {
  Vec source;  ///< 1_{theta^-1}
  Vec target;  ///< 1_theta
  Matrix map;  ///< R coordinates to R coordinates, zero outside R 1_src
};

void validate_ideal_iso(const Algebra& r, const IdealIso& theta);
IdealIso identity_ideal_iso(const Algebra& r);

enum class Side { left, right };

/// right: m . a = m theta(a 1_src), requires m 1_tgt = m. left: a . m = theta(a 1_src) m, requires 1_tgt m = m.
Module twist_by(const Module& m, const IdealIso& theta, Side side);

/// R e for an idempotent e, as a left R-module with basis from span{b_i e}.
Module left_ideal_module(const AlgebraPtr& r, const Vec& e);
/// R e as an (R,R)-bimodule, e central.
Module ideal_bimodule(const AlgebraPtr& r, const Vec& e);

/// Direct sum of two modules with the same rings.
Module direct_sum(const Module& a, const Module& b);

/// R^k as a left module.
Module free_left(const AlgebraPtr& r, std::size_t k);

}  // namespace grado
