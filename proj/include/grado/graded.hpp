#pragma once

/**
 * @file graded.hpp
 * @brief Groups, group gradings on structure algebras, and epsilon-strong gradings.
 *
 * Degrees are assigned per basis vector, so every component A_g is a
 * coordinate subspace. Free abelian groups are allowed; every loop runs over
 * the (finite) support only.
 */

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "grado/algebra.hpp"
#include "grado/module.hpp"
#include "grado/search.hpp"

namespace grado {

/// Finite group element (single index) or an integer vector of a free abelian group.
struct GroupElem {
  std::vector<long long> v;
  auto operator<=>(const GroupElem&) const = default;
};

class Group {
 public:
  /// Cayley table table[a][b] = a*b; validated as a group.
  static Group finite(std::vector<std::vector<std::size_t>> table, std::size_t identity);
  static Group cyclic(std::size_t n);
  static Group trivial() { return cyclic(1); }
  static Group free_abelian(std::size_t rank);

  bool is_finite() const { return finite_; }
  std::size_t order() const { return table_.size(); }
  std::size_t rank() const { return rank_; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  std::size_t identity_index() const { return identity_; }

  GroupElem identity() const;
  GroupElem mul(const GroupElem& a, const GroupElem& b) const;
  GroupElem inverse(const GroupElem& a) const;
  bool contains(const GroupElem& a) const;
  /// All elements (finite groups only).
  std::vector<GroupElem> elements() const;

  GroupElem element(std::size_t index) const;
  GroupElem integer(long long k) const;

  std::string to_string(const GroupElem& g) const;

  friend bool operator==(const Group& a, const Group& b) {
    return a.finite_ == b.finite_ && a.rank_ == b.rank_ && a.table_ == b.table_ && a.identity_ == b.identity_;
  }

 private:
  bool finite_ = true;
  std::size_t rank_ = 0;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
};

class GradedRing {
 public:
  /// Validates that every basis product is homogeneous of the product degree and that 1 has degree 1_G.
  GradedRing(AlgebraPtr algebra, Group group, std::vector<GroupElem> degrees);

  const Algebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const Group& group() const { return group_; }
  const std::vector<GroupElem>& degrees() const { return degrees_; }
  const Field& field() const { return algebra_->field(); }

  /// Sorted support.
  const std::vector<GroupElem>& support() const { return support_; }
  bool in_support(const GroupElem& g) const;
  const std::vector<std::size_t>& indices(const GroupElem& g) const;
  Subspace component(const GroupElem& g) const;
  std::size_t component_dim(const GroupElem& g) const { return indices(g).size(); }
  /// Coordinates within the component (restriction to indices(g)).
  Vec restrict(const GroupElem& g, const Vec& a) const;
  /// Element of A from coordinates within the component.
  Vec embed(const GroupElem& g, const Vec& coords) const;
  bool is_homogeneous(const Vec& a, const GroupElem& g) const;

  /// R = A_1 with basis indices(1).
  const AlgebraPtr& base() const { return base_; }

  /// A_g as an (R,R)-bimodule in component coordinates.
  Module component_bimodule(const GroupElem& g) const;
  /// A as a left module over itself.
  Module regular_left() const { return Module::regular_left(algebra_); }

 private:
  AlgebraPtr algebra_;
  Group group_;
  std::vector<GroupElem> degrees_;
  std::vector<GroupElem> support_;
  std::map<GroupElem, std::vector<std::size_t>> by_degree_;
  AlgebraPtr base_;
};

using GradedPtr = std::shared_ptr<const GradedRing>;

/// epsilon_g for g in supp(A); every other degree reads as zero.
struct EpsilonSystem {
  std::map<GroupElem, Vec> eps;
  Vec at(const GradedRing& a, const GroupElem& g) const;
};

struct EpsilonDetection {
  bool ok = false;
  EpsilonSystem system;
  std::optional<GroupElem> failing;
  std::string reason;
};

bool is_symmetrically_graded(const GradedRing& a);
/// Direct route: identity of A_g A_{g^-1} that absorbs A_g on both sides.
EpsilonDetection detect_epsilon(const GradedRing& a);
/// Independent route: symmetric grading and every A_g A_{g^-1} a unital ideal of A_1.
bool epsilon_strong_via_symmetry(const GradedRing& a);
/// A_g A_h = A_gh for all g, h in G (false for infinite groups of positive rank).
bool is_strongly_graded(const GradedRing& a);

struct RemarkViolation {
  GroupElem g, h;
  std::string which;
};

/// A_g A_h = eps_g A_gh and A_g A_h = A_gh eps_{h^-1} for g, h in supp.
std::vector<RemarkViolation> check_remark_identities(const GradedRing& a, const EpsilonSystem& eps);

struct EpsilonInvertibleWitness {
  GroupElem g;
  Vec s;        ///< in A_g
  Vec inverse;  ///< in A_{g^-1}
};

bool verify_witness(const GradedRing& a, const EpsilonSystem& eps, const EpsilonInvertibleWitness& w);

struct WitnessSearch {
  Decision decision = Decision::undecided;
  std::optional<EpsilonInvertibleWitness> witness;
  std::string route;
  std::uint64_t candidates = 0;
};

/**
 * Searches A_g for an epsilon-invertible element relative to the given system.
 * The system is taken as given: callers may pass a hand-made candidate.
 */
WitnessSearch find_epsilon_invertible(const GradedRing& a, const EpsilonSystem& eps, const GroupElem& g,
                                      const SearchStrategy& strategy = {});

/// Tests a single candidate s in A_g: solves s u = eps_g and v s = eps_{g^-1}.
std::optional<EpsilonInvertibleWitness> test_candidate(const GradedRing& a, const EpsilonSystem& eps,
                                                       const GroupElem& g, const Vec& s);

struct CrossedDecision {
  Decision decision = Decision::undecided;
  std::map<GroupElem, EpsilonInvertibleWitness> witnesses;
  std::map<GroupElem, WitnessSearch> searches;
  std::string reason;
};

CrossedDecision is_epsilon_crossed_product(const GradedRing& a, const SearchStrategy& strategy = {});
CrossedDecision is_epsilon_crossed_product(const GradedRing& a, const EpsilonSystem& eps,
                                           const SearchStrategy& strategy = {});

/// Mn(A) graded by deg(a e_ij) = deg(a).
GradedRing matrix_grading(const GradedRing& a, std::size_t n);

struct GeneratorSearch {
  Decision decision = Decision::undecided;
  std::map<GroupElem, Vec> kappa;
  std::string reason;
};

/// Existence of kappa(g) in A_g with R kappa(g) = A_g = kappa(g) R for every supp degree.
GeneratorSearch generator_condition(const GradedRing& a, const SearchStrategy& strategy = {});

struct MatcroReport {
  std::size_t n = 1;
  bool applicable = false;  ///< A is epsilon-strong
  CrossedDecision crossed;  ///< condition (ii)
  GeneratorSearch generator;  ///< condition (iv)
  bool decided = false;  ///< neither condition undecided
  bool agree = false;
  bool eps_is_diagonal = false;  ///< eps of Mn(A) equals eps_g I_n
  std::string note;
};

MatcroReport matcro_decide(const GradedRing& a, std::size_t n, const SearchStrategy& strategy = {});

/// A_H = sum of A_h over h in the subgroup H; still graded by G, with support inside H.
GradedRing restrict_to_subgroup(const GradedRing& a, const std::vector<GroupElem>& subgroup);

}  // namespace grado
