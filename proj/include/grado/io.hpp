#pragma once

/**
 * @file io.hpp
 * @brief Instance documents: one JSON format carrying an algebra, an optional
 * grading or twisted partial action, modules, a frame and a task list.
 *
 * Schema errors are raised as InputError with a JSON pointer to the offending
 * value.
 */

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "grado/crossed.hpp"
#include "grado/gradedmod.hpp"
#include "grado/semiperfect.hpp"

namespace grado {

using Json = nlohmann::ordered_json;

struct NamedModule {
  std::string name;
  /// "graded_vector_space": over the trivially graded field.
  /// "left_ideal": R e for an idempotent e of R = A_1.
  /// "graded": graded left A-module given by one matrix per basis vector of A.
  /// "left", "bimodule": R-modules given by matrices per basis vector of R.
  std::string kind;
  std::vector<GroupElem> degrees;
  Vec idempotent;
  std::size_t dim = 0;
  std::vector<Matrix> left;
  std::vector<Matrix> right;
  std::optional<GradedModule> graded;
  std::optional<Module> plain;
};

struct Instance {
  std::string name;
  Field field = Field::prime(2);
  /// A itself, or the base ring when a twisted partial action is given.
  AlgebraPtr algebra;
  std::optional<Group> group;
  /// Degrees of the basis of `algebra` when it carries the grading.
  std::vector<GroupElem> degrees;
  std::optional<TwistedPartialAction> tpa;
  std::optional<CrossedProduct> crossed;
  /// The graded ring: `algebra` with `degrees`, or the crossed product of `tpa`.
  GradedPtr graded;
  std::vector<NamedModule> modules;
  std::optional<IdempotentFrame> frame;
  std::optional<EpsilonSystem> epsilon_candidate;
  /// Degrees quantified over by frame computations; defaults to the group or the support.
  std::vector<GroupElem> test_set;
  std::vector<std::string> tasks;
  std::uint64_t seed = 1;

  /// Builds graded (and crossed) from the raw pieces; no-op once built.
  void build_ring();
  /// Builds graded, crossed, module structures and the default test set from the raw pieces.
  void finalize();
};

Instance parse_instance(const Json& doc);
Instance load_instance(const std::string& path);
Json to_json(const Instance& inst);

Json scalar_json(const Scalar& s);
/// Sparse element {basis name: coefficient}.
Json element_json(const Algebra& a, const Vec& v);
Json vec_json(const Vec& v);
Json matrix_json(const Matrix& m);
Json group_elem_json(const Group& g, const GroupElem& e);

}  // namespace grado
