#pragma once

/**
 * @file pic.hpp
 * @brief The partial representation g |-> [A_g] into the Picard semigroup of R
 * and the multiplication isomorphisms of a graded bimodule.
 */

#include <string>
#include <utility>
#include <vector>

#include "grado/graded.hpp"
#include "grado/module.hpp"

namespace grado {

struct PhiCheck {
  GroupElem g, h;
  Decision left_triple = Decision::undecided;   ///< A_g^-1 A_g A_h vs A_g^-1 A_gh
  Decision right_triple = Decision::undecided;  ///< A_g A_h A_h^-1 vs A_gh A_h^-1
  Decision corner = Decision::undecided;        ///< A_g A_g^-1 vs R eps_g
  std::string detail;
};

struct PhiReport {
  std::vector<PhiCheck> checks;
  /// no if any check is no, else undecided if any is undecided.
  Decision overall = Decision::yes;
};

/// A_g (x)_R ... as (R,R)-bimodules, compared with is_isomorphic.
PhiReport phi_partial_rep_check(const GradedRing& a, const EpsilonSystem& eps,
                                const std::vector<std::pair<GroupElem, GroupElem>>& pairs,
                                const SearchStrategy& strategy = {});

/// Graded (A,A)-bimodule: both actions are indexed by the basis of A.
struct GradedBimodule {
  Module module;
  std::vector<GroupElem> degrees;

  std::vector<std::size_t> indices(const GroupElem& g) const;
};

GradedBimodule regular_graded_bimodule(const GradedRing& a);

struct IsomulCheck {
  GroupElem g;
  bool mu_ok = false;        ///< A_g (x) M_1 -> eps_g M_g bijective bimodule map
  bool mu_tilde_ok = false;  ///< A_g^-1 (x) M_g -> eps_g^-1 M_1 bijective bimodule map
  bool context_ok = false;   ///< mixed associativity of the Morita context
  std::size_t tensor_dim = 0;
  std::size_t tensor_tilde_dim = 0;
  Matrix mu;
  Matrix mu_tilde;
  std::string detail;
};

struct IsomulReport {
  std::vector<IsomulCheck> checks;
  bool ok() const;
};

IsomulReport verify_isomul(const GradedRing& a, const EpsilonSystem& eps, const GradedBimodule& m,
                           const std::vector<GroupElem>& degrees);
IsomulReport verify_isomul(const GradedRing& a, const EpsilonSystem& eps, const std::vector<GroupElem>& degrees);

}  // namespace grado
