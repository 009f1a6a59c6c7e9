#pragma once

#include <cstdint>
#include <string>

namespace grado {

/// Outcome of a decision procedure. `no` is only produced by deterministic
/// routes (invariant mismatch or an exhausted finite enumeration).
enum class Decision { yes, no, undecided };

std::string to_string(Decision d);

struct SearchStrategy {
  enum class Kind { automatic, exhaustive, random, module_iso };

  Kind kind = Kind::automatic;
  std::uint64_t seed = 0x5eed;
  std::uint64_t trials = 256;
  /// Upper bound on candidate evaluations for exhaustive enumeration.
  std::uint64_t budget = std::uint64_t{1} << 20;

  static SearchStrategy exhaustive_only(std::uint64_t budget = std::uint64_t{1} << 20) {
    SearchStrategy s;
    s.kind = Kind::exhaustive;
    s.budget = budget;
    return s;
  }
  static SearchStrategy random_only(std::uint64_t seed, std::uint64_t trials) {
    SearchStrategy s;
    s.kind = Kind::random;
    s.seed = seed;
    s.trials = trials;
    return s;
  }
};

std::string to_string(SearchStrategy::Kind k);

/// base^exp if it does not exceed `cap`, otherwise 0.
std::uint64_t bounded_power(std::uint64_t base, std::uint64_t exp, std::uint64_t cap);

}  // namespace grado
