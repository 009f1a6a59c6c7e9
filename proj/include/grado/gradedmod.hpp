#pragma once

/**
 * @file gradedmod.hpp
 * @brief Graded left modules, graded morphisms, the graded endomorphism ring
 * END_A(M) with product uv = v o u, and the divisibility deciders.
 *
 * Morphisms are dim N x dim M matrices. Mor_C(M, N) means degree-1 morphisms.
 */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grado/graded.hpp"
#include "grado/module.hpp"

namespace grado {

class GradedModule {
 public:
  /// action[i] is the matrix of b_i for the basis of A. Validates module axioms and A_g M_h in M_gh.
  GradedModule(GradedPtr ring, std::vector<GroupElem> degrees, std::vector<Matrix> action);

  const GradedRing& ring() const { return *ring_; }
  const GradedPtr& ring_ptr() const { return ring_; }
  std::size_t dim() const { return degrees_.size(); }
  const std::vector<GroupElem>& degrees() const { return degrees_; }
  const std::vector<Matrix>& action() const { return module_.left(); }
  const Module& module() const { return module_; }

  std::vector<std::size_t> indices(const GroupElem& g) const;
  /// Sorted support.
  std::vector<GroupElem> support() const;

 private:
  GradedPtr ring_;
  std::vector<GroupElem> degrees_;
  Module module_;
};

/// A as a graded left module over itself.
GradedModule regular_graded_module(const GradedPtr& a);

/// (M(l))_g = M_{gl}: a basis vector of degree d gets degree d l^-1.
GradedModule suspend(const GradedModule& m, const GroupElem& l);

/// Basis of Mor_A(M, N)_l: A-linear maps with f(M_g) in N_{gl}.
std::vector<Matrix> graded_mor(const GradedModule& m, const GradedModule& n, const GroupElem& l);

struct EndRing {
  GradedPtr ring;
  /// Operator represented by each basis vector of the ring.
  std::vector<Matrix> operators;
  Vec element_of(const Matrix& op) const;
};

/// Throws InputError for the zero module.
EndRing build_end_ring(const GradedModule& m);

struct SemiDivision {
  bool holds = false;
  std::optional<Matrix> idempotent;  ///< identity of J inside End_C(N)
  Subspace summand;                  ///< im(e) in N coordinates
  std::string reason;
};

/// N |_sd M via the identity of J = span{f o g}.
SemiDivision semi_divides(const GradedModule& n, const GradedModule& m);
/// N | M: id_N in span{f o g}.
bool divides(const GradedModule& n, const GradedModule& m);

struct EpsilonSimilarity {
  Decision decision = Decision::undecided;
  std::optional<Matrix> f;  ///< M -> N
  std::optional<Matrix> g;  ///< N -> M
  std::optional<Matrix> e_m;
  std::optional<Matrix> e_n;
  std::uint64_t candidates = 0;
  std::string reason;
};

EpsilonSimilarity epsilon_similar(const GradedModule& m, const GradedModule& n, const SearchStrategy& strategy = {});

struct ClassifyReport {
  bool eps_direct = false;
  bool eps_module = false;
  bool strong_direct = false;
  bool strong_module = false;
  Decision crossed_direct = Decision::undecided;
  Decision crossed_module = Decision::undecided;
  std::vector<GroupElem> end_support;
  std::vector<std::string> disagreements;
  bool consistent() const { return disagreements.empty(); }
};

ClassifyReport classify_end(const GradedModule& m, const SearchStrategy& strategy = {});

/// Ind N = A (x)_R N with (Ind N)_g = A_g (x)_R N.
GradedModule induce(const GradedPtr& a, const Module& n);

/// Graded isomorphism of degree l from M to N.
IsoResult graded_isomorphic(const GradedModule& m, const GradedModule& n, const GroupElem& l,
                            const SearchStrategy& strategy = {});

struct AstorDegree {
  GroupElem l;
  std::vector<GroupElem> supp_l;
  bool submodules_ok = false;
  Decision lower_upper = Decision::undecided;  ///< N_(l) vs N^(l), degree l
  Decision upper_upper = Decision::undecided;  ///< N^(l) vs N^(l^-1), degree l^-1
  std::string reason;
};

struct PhiDegree {
  GroupElem l;
  bool in_end = false;               ///< phi_l is A-linear of degree l
  bool epsilon_invertible = false;
};

struct AstorReport {
  std::vector<AstorDegree> degrees;
  Decision hypothesis = Decision::undecided;
  bool end_epsilon_strong = false;
  bool consistent = true;  ///< hypothesis yes implies END(Ind N) epsilon-strong
  Decision g_invariant = Decision::undecided;
  std::vector<PhiDegree> phi;
  std::string note;
};

AstorReport check_astor(const GradedPtr& a, const Module& n, const SearchStrategy& strategy = {});

}  // namespace grado
