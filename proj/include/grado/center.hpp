#pragma once

/**
 * @file center.hpp
 * @brief The maps Gamma_g, the induced partial action on Z(R), its invariants,
 * partial Galois coordinates and a direct Azumaya test.
 *
 * Elements of R are given in R coordinates (the indices of the identity
 * component of A).
 */

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grado/graded.hpp"

namespace grado {

struct EpsilonDecomposition {
  GroupElem g;
  /// (u_i, v_i) with u_i in A_g, v_i in A_{g^-1} and sum u_i v_i = eps_g.
  std::vector<std::pair<Vec, Vec>> pairs;
};

/// variant 0 takes the particular solution; variant k > 0 adds a seeded kernel combination.
EpsilonDecomposition decompose_epsilon(const GradedRing& a, const EpsilonSystem& eps, const GroupElem& g,
                                       std::uint64_t variant = 0);

/// Gamma_g(x) = sum u_i x v_i on R coordinates.
Matrix gamma_matrix(const GradedRing& a, const EpsilonDecomposition& d);

struct PartialCenterAction {
  AlgebraPtr ring;  ///< R
  Subspace center;  ///< Z(R) in R coordinates
  std::map<GroupElem, Vec> eps;  ///< eps_g in R coordinates
  std::map<GroupElem, Subspace> domains;  ///< Z(R) eps_g
  std::map<GroupElem, Matrix> maps;  ///< Gamma_g; only its values on Z(R) eps_g^-1 are canonical
  Group group;

  Vec eps_at(const GroupElem& g) const;
  Vec apply(const GroupElem& g, const Vec& z) const;
};

/// Assembles gamma and verifies image, partial-action axioms and gamma_g(r) a = a r; throws VerificationError.
PartialCenterAction gamma_action(const GradedRing& a, const EpsilonSystem& eps, std::uint64_t variant = 0);

/// Compares gamma from two decompositions on every Z(R) eps_g^-1.
bool gamma_decomposition_independent(const GradedRing& a, const EpsilonSystem& eps, std::uint64_t variant = 1);

/// Every basis pair r in Z(R), a in A_g satisfies gamma_g(r) a = a r.
bool eqga_holds(const GradedRing& a, const PartialCenterAction& act);

/// {t in Z(R) : gamma_g(t eps_g^-1) = t eps_g for all g}.
Subspace invariants(const PartialCenterAction& act);
Subspace invariants(const Subspace& center, const PartialCenterAction& act);

struct GaloisCoordinates {
  std::vector<Vec> xs;
  std::vector<Vec> ys;
};

/// y_i = basis of R, x_i solved linearly. Throws PreconditionError for noncommutative R.
std::optional<GaloisCoordinates> galois_check(const Algebra& r, const PartialCenterAction& act);
bool verify_galois(const Algebra& r, const PartialCenterAction& act, const GaloisCoordinates& c);

struct AzumayaReport {
  bool center_ok = false;
  bool separable = false;
  bool maximal_commutative = false;
  std::optional<Vec> separability_idempotent;  ///< coordinates in the quotient basis of A (x)_S A
  std::size_t tensor_dim = 0;
  std::string detail;
  bool ok() const { return center_ok && separable && maximal_commutative; }
};

/// S given in R coordinates; must contain 1.
AzumayaReport azumaya_check(const GradedRing& a, const Subspace& s);

/// eps_g a_g a_h = a_g a_h on homogeneous basis pairs.
bool delta_phi_consistent(const GradedRing& a, const EpsilonSystem& eps);

}  // namespace grado
