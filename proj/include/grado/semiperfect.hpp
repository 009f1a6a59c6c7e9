#pragma once

/**
 * @file semiperfect.hpp
 * @brief Primitive idempotent frames of A_1, the subgroups G_X, the reduction
 * to A_{G_X} and the partial action of G on frame indices.
 *
 * Idempotents are given in R coordinates, R = A_1.
 */

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "grado/gradedmod.hpp"

namespace grado {

struct IdempotentFrame {
  AlgebraPtr ring;
  std::vector<Vec> e;
  /// 1 = sum completion[k]; Rcompletion[k] should be isomorphic to Re[assignment[k]].
  std::vector<Vec> completion;
  std::vector<std::size_t> assignment;
};

struct FrameReport {
  bool idempotent = true;
  bool orthogonal = true;
  Decision irredundant = Decision::yes;
  bool completion_orthogonal = true;
  bool completion_sums_to_one = true;
  Decision assignments = Decision::yes;
  std::vector<std::string> issues;
  bool ok() const {
    return idempotent && orthogonal && irredundant == Decision::yes && completion_orthogonal &&
           completion_sums_to_one && assignments == Decision::yes;
  }
};

/// Validation is reported, not thrown, so a defective frame can still be analysed.
FrameReport validate_frame(const IdempotentFrame& frame, const SearchStrategy& strategy = {});

Module frame_module(const IdempotentFrame& frame, std::size_t i);

struct EgeEntry {
  GroupElem g;
  std::string idempotent;  ///< "E[i]" or "C[k]"
  bool eps_fixes = false;  ///< eps_g e = e
  bool eps_kills = false;  ///< eps_g e = 0
  bool ag_e = false;       ///< A_g e != 0
  bool agi_e = false;      ///< A_{g^-1} e != 0
  bool equivalent() const { return eps_fixes == ag_e && ag_e == agi_e && (eps_fixes || eps_kills); }
};

struct EgeReport {
  std::vector<EgeEntry> entries;
  bool ok() const;
};

/// Checks the three-way equivalence on E and the completion for each degree.
EgeReport lemma_ege_check(const GradedRing& a, const EpsilonSystem& eps, const IdempotentFrame& frame,
                          const std::vector<GroupElem>& degrees);

/// A_g (x)_R Re_i as a left R-module.
Module translate(const GradedRing& a, const IdempotentFrame& frame, const GroupElem& g, std::size_t i);

struct GxMembership {
  GroupElem g;
  Decision member = Decision::undecided;
  std::map<std::size_t, std::size_t> moves;  ///< i |-> j with A_g (x) Re_i = Re_j
  std::string detail;
};

struct GxReport {
  std::vector<std::size_t> x;
  std::vector<GxMembership> entries;
  std::vector<GroupElem> members;
  std::size_t undecided = 0;
  bool subgroup_ok = true;  ///< closure checked inside the test set only
  std::string scope;
  bool contains(const GroupElem& g) const;
};

GxReport compute_GX(const GradedRing& a, const IdempotentFrame& frame, const std::vector<std::size_t>& x,
                    const std::vector<GroupElem>& test_set, const SearchStrategy& strategy = {});

struct SemicaseReport {
  GxReport gx;
  std::vector<GroupElem> eps_set;  ///< g with eps_g e_i = e_i for every e_i in E
  Decision gx_matches_eps = Decision::undecided;
  bool subring_epsilon_strong = false;
  Decision end_crossed = Decision::undecided;
  std::size_t end_dim = 0;
  /// Members of PicS among the components, each sending every Re_i to 0 or some Re_j.
  Decision pics_permutes = Decision::undecided;
  std::vector<std::string> notes;
};

/// eps may be absent when A is not epsilon-strong; the eps leg is then skipped.
SemicaseReport theorem_semicase_check(const GradedPtr& a, const std::optional<EpsilonSystem>& eps,
                                      const IdempotentFrame& frame, const std::vector<std::size_t>& x,
                                      const std::vector<GroupElem>& test_set, const SearchStrategy& strategy = {});

struct IndexPartialAction {
  std::map<GroupElem, std::set<std::size_t>> domains;  ///< I_g
  std::map<GroupElem, std::map<std::size_t, std::size_t>> maps;  ///< alpha_g : I_{g^-1} -> I_g
  std::size_t undecided = 0;
  std::vector<std::string> violations;
  bool ok() const { return undecided == 0 && violations.empty(); }
  /// Every I_g is the whole index set.
  bool global(std::size_t n) const;
};

IndexPartialAction index_partial_action(const GradedRing& a, const IdempotentFrame& frame,
                                        const std::vector<GroupElem>& test_set, const SearchStrategy& strategy = {});

}  // namespace grado
