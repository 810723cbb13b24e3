#include "su2lgt/measurement_group.hpp"

#include <algorithm>

namespace su2lgt {

std::vector<MeasurementGroup> group_for_measurement(const PauliSum& h) {
  std::vector<PauliString> strings;
  for (const auto& [s, c] : h.terms())
    if (!s.is_identity()) strings.push_back(s);
  std::sort(strings.begin(), strings.end(),
            [](const PauliString& a, const PauliString& b) {
              if (a.support_size() != b.support_size())
                return a.support_size() > b.support_size();
              return a < b;
            });

  std::vector<MeasurementGroup> groups;
  for (const auto& s : strings) {
    bool placed = false;
    for (auto& g : groups) {
      if (std::all_of(g.members.begin(), g.members.end(),
                      [&](const PauliString& m) {
                        return qubitwise_compatible(s, m);
                      })) {
        g.members.push_back(s);
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({{s}, {}, s});
  }

  for (auto& g : groups) {
    g.basis_assignment.assign(h.n_qubits(), 'F');
    for (const auto& m : g.members)
      for (unsigned q = 0; q < h.n_qubits(); ++q)
        if (m.factor(q) != 'I') g.basis_assignment[q] = m.factor(q);
    g.representative = *std::min_element(
        g.members.begin(), g.members.end(),
        [](const PauliString& a, const PauliString& b) {
          if (a.support_size() != b.support_size())
            return a.support_size() > b.support_size();
          return a < b;
        });
  }
  return groups;
}

}  // namespace su2lgt
