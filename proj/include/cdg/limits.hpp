#pragma once

// Named scale bounds. Exceeding one raises ScaleError naming the bound.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cdg {

struct Limit {
  const char* name;
  std::uint64_t value;
  const char* meaning;
};

namespace limits {
inline constexpr std::uint64_t kMaxEnumeratedOrder = 1000000;     // element lists
inline constexpr std::uint64_t kMaxEnumeratedCells = 60000000;    // order * degree for element lists
inline constexpr std::uint64_t kMaxStructureOrder = 1000000;      // Fitting, Sylow, series
inline constexpr std::uint64_t kMaxClassOrder = 1000000;          // conjugacy classes
inline constexpr std::uint64_t kMaxClassCount = 200;
inline constexpr std::uint64_t kMaxOracleOrder = 20000;           // Dixon degree oracle
inline constexpr std::uint64_t kMaxOracleClasses = 120;
inline constexpr std::uint64_t kMaxDixonPrime = 2147483647;       // 2^31 - 1
inline constexpr std::uint64_t kMaxCharacterCheckOrder = 20000;   // fully_ramified_via_characters
inline constexpr std::uint64_t kMaxFieldOrder = 1u << 20;          // GF(p^n) tables
inline constexpr std::uint64_t kMaxAffineField = 4096;            // affine permutation groups
inline constexpr std::uint64_t kMaxSemilinearClosure = 10000000;  // closure check of Γ subgroups
inline constexpr std::uint64_t kMaxModuleDim = 20;
inline constexpr std::uint64_t kMaxModuleMatrixField = 4096;      // matrix path of module lemmas
inline constexpr std::uint64_t kMaxModuleVectors = 1u << 22;       // exhaustive vector scans
inline constexpr std::uint64_t kMaxMatrixGroup = 100000;          // enumerated matrix groups
inline constexpr std::uint64_t kHallTrialBudget = 100000;
inline constexpr std::uint64_t kMaxPairingGroup = 4096;           // p^(3n) for heisenberg_pairing
}  // namespace limits

inline std::vector<Limit> all_limits() {
  using namespace limits;
  return {
      {"max_enumerated_order", kMaxEnumeratedOrder, "largest group whose elements are listed"},
      {"max_enumerated_cells", kMaxEnumeratedCells, "order times degree for listed groups"},
      {"max_structure_order", kMaxStructureOrder, "Fitting/Sylow/series computations"},
      {"max_class_order", kMaxClassOrder, "conjugacy class enumeration"},
      {"max_class_count", kMaxClassCount, "conjugacy class count"},
      {"max_oracle_order", kMaxOracleOrder, "Dixon degree oracle group order"},
      {"max_oracle_classes", kMaxOracleClasses, "Dixon degree oracle class count"},
      {"max_dixon_prime", kMaxDixonPrime, "largest splitting prime tried"},
      {"max_character_check_order", kMaxCharacterCheckOrder, "fully ramified test via characters"},
      {"max_field_order", kMaxFieldOrder, "GF(p^n) with log tables"},
      {"max_affine_field", kMaxAffineField, "p^n for affine permutation groups"},
      {"max_semilinear_closure", kMaxSemilinearClosure, "closure check of semilinear groups"},
      {"max_module_dim", kMaxModuleDim, "dimension for irreducibility and embedding tests"},
      {"max_module_matrix_field", kMaxModuleMatrixField, "q^m for the matrix path of module lemmas"},
      {"max_module_vectors", kMaxModuleVectors, "p^dim for exhaustive irreducibility certification"},
      {"max_matrix_group", kMaxMatrixGroup, "enumerated matrix group order"},
      {"hall_trial_budget", kHallTrialBudget, "random trials for p-complement search"},
      {"max_pairing_group", kMaxPairingGroup, "p^(3n) for heisenberg_pairing"},
  };
}

class ScaleError : public std::length_error {
 public:
  ScaleError(const std::string& bound, std::uint64_t limit, std::uint64_t got)
      : std::length_error("scale bound '" + bound + "' = " + std::to_string(limit) + " exceeded (got " +
                          std::to_string(got) + ")"),
        bound_(bound) {}
  const std::string& bound() const { return bound_; }

 private:
  std::string bound_;
};

inline void require_within(const char* bound, std::uint64_t limit, std::uint64_t got) {
  if (got > limit) throw ScaleError(bound, limit, got);
}

}  // namespace cdg
