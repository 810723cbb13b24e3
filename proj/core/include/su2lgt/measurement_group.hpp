#pragma once

#include <vector>

#include "su2lgt/pauli_sum.hpp"

namespace su2lgt {

/// Set of qubit-wise compatible Pauli strings measurable in one setting.
struct MeasurementGroup {
  std::vector<PauliString> members;
  /// Per-qubit measurement axis, 'X' 'Y' 'Z' or 'F' (free).
  std::string basis_assignment;
  /// Member with the fewest identity components (ties by canonical order).
  PauliString representative;
};

/// Greedy qubit-wise grouping: strings sorted by descending support size
/// (ties by canonical order), each seeded into the first compatible group.
/// The identity string forms no group.
std::vector<MeasurementGroup> group_for_measurement(const PauliSum& h);

}  // namespace su2lgt
