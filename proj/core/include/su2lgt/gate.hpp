#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

namespace su2lgt {

enum class GateKind { X, RY, CRY, CNOT, SWAP, TOFFOLI, PSWAP };

/// Parameter slot of a rotation gate: either a fixed angle or a symbolic
/// index into the circuit's parameter vector (optionally negated, for
/// inverted circuits).
struct GateParam {
  bool symbolic = false;
  double fixed = 0.0;
  unsigned slot = 0;
  bool negated = false;
  double scale = 1.0;  // applied to symbolic values (e.g. RY angle = 2*theta)

  static GateParam angle(double v) { return {false, v, 0, false, 1.0}; }
  static GateParam slot_index(unsigned i, double scale = 1.0) {
    return {true, 0.0, i, false, scale};
  }

  double resolve(const std::vector<double>& theta) const {
    if (!symbolic) return fixed;
    double v = scale * theta.at(slot);
    return negated ? -v : v;
  }
};

/// One gate. `qubits` lists controls first, the target(s) last:
///   X: {target}; RY: {target}; CRY: {c1..ck, target} (k >= 1);
///   CNOT: {control, target}; SWAP/PSWAP: {a, b};
///   TOFFOLI: {c1, c2, target}.
/// control_polarity[i] is true for a filled control (fires on |1> = down)
/// and false for an open control (fires on |0> = up).
struct Gate {
  GateKind kind;
  std::vector<unsigned> qubits;
  std::vector<bool> control_polarity;
  std::optional<GateParam> param;

  unsigned n_controls() const {
    switch (kind) {
      case GateKind::CNOT:
        return 1;
      case GateKind::TOFFOLI:
        return 2;
      case GateKind::CRY:
        return static_cast<unsigned>(qubits.size()) - 1;
      default:
        return 0;
    }
  }
  unsigned target() const { return qubits.back(); }
  bool is_parameterized() const { return param && param->symbolic; }
  bool is_self_inverse() const {
    return kind == GateKind::X || kind == GateKind::CNOT ||
           kind == GateKind::SWAP || kind == GateKind::TOFFOLI;
  }

  void validate() const;
};

Gate make_x(unsigned q);
Gate make_ry(unsigned q, GateParam p);
Gate make_cry(std::vector<unsigned> controls, std::vector<bool> polarity,
              unsigned target, GateParam p);
Gate make_cnot(unsigned control, unsigned target, bool polarity = true);
Gate make_swap(unsigned a, unsigned b);
Gate make_toffoli(unsigned c1, unsigned c2, unsigned target,
                  bool p1 = true, bool p2 = true);
Gate make_pswap(unsigned a, unsigned b, GateParam p);

}  // namespace su2lgt
