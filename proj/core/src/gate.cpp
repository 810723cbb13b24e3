#include "su2lgt/gate.hpp"

#include <set>

namespace su2lgt {

void Gate::validate() const {
  std::set<unsigned> uniq(qubits.begin(), qubits.end());
  if (uniq.size() != qubits.size())
    throw std::invalid_argument("gate qubit indices must be distinct");
  const bool needs_param = kind == GateKind::RY || kind == GateKind::CRY ||
                           kind == GateKind::PSWAP;
  if (needs_param != param.has_value())
    throw std::invalid_argument("gate parameter mismatch");
  std::size_t expect = 0;
  switch (kind) {
    case GateKind::X:
    case GateKind::RY:
      expect = 1;
      break;
    case GateKind::CNOT:
    case GateKind::SWAP:
    case GateKind::PSWAP:
      expect = 2;
      break;
    case GateKind::TOFFOLI:
      expect = 3;
      break;
    case GateKind::CRY:
      expect = qubits.size() >= 2 ? qubits.size() : 2;
      break;
  }
  if (qubits.size() != expect)
    throw std::invalid_argument("gate arity mismatch");
  if (control_polarity.size() != n_controls())
    throw std::invalid_argument("control polarity size mismatch");
}

Gate make_x(unsigned q) { return {GateKind::X, {q}, {}, std::nullopt}; }

Gate make_ry(unsigned q, GateParam p) { return {GateKind::RY, {q}, {}, p}; }

Gate make_cry(std::vector<unsigned> controls, std::vector<bool> polarity,
              unsigned target, GateParam p) {
  std::vector<unsigned> qs = std::move(controls);
  qs.push_back(target);
  return {GateKind::CRY, std::move(qs), std::move(polarity), p};
}

Gate make_cnot(unsigned control, unsigned target, bool polarity) {
  return {GateKind::CNOT, {control, target}, {polarity}, std::nullopt};
}

Gate make_swap(unsigned a, unsigned b) {
  return {GateKind::SWAP, {a, b}, {}, std::nullopt};
}

Gate make_toffoli(unsigned c1, unsigned c2, unsigned target, bool p1,
                  bool p2) {
  return {GateKind::TOFFOLI, {c1, c2, target}, {p1, p2}, std::nullopt};
}

Gate make_pswap(unsigned a, unsigned b, GateParam p) {
  return {GateKind::PSWAP, {a, b}, {}, p};
}

}  // namespace su2lgt
