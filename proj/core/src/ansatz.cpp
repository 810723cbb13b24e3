#include "su2lgt/ansatz.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <optional>
#include <set>
#include <stdexcept>

#include "su2lgt/exact.hpp"

namespace su2lgt {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool bit(std::uint64_t s, unsigned q) { return (s >> q) & 1; }

/// Greedy minimal-ish control set on A (target qubit excluded) whose
/// polarity pattern rejects every state in `excl`.
std::vector<unsigned> choose_controls(std::uint64_t A, unsigned n_qubits,
                                      unsigned target,
                                      std::vector<std::uint64_t> excl) {
  excl.erase(std::remove(excl.begin(), excl.end(), A), excl.end());
  std::vector<unsigned> ctrl;
  while (!excl.empty()) {
    unsigned best = n_qubits;
    std::size_t best_cnt = 0;
    for (unsigned q = 0; q < n_qubits; ++q) {
      if (q == target) continue;
      if (std::find(ctrl.begin(), ctrl.end(), q) != ctrl.end()) continue;
      std::size_t cnt = 0;
      for (auto e : excl)
        if (bit(e, q) != bit(A, q)) ++cnt;
      if (cnt > best_cnt) {
        best_cnt = cnt;
        best = q;
      }
    }
    if (best == n_qubits)
      throw std::logic_error("cannot isolate Givens rotation");
    ctrl.push_back(best);
    excl.erase(std::remove_if(excl.begin(), excl.end(),
                              [&](std::uint64_t e) {
                                return bit(e, best) != bit(A, best);
                              }),
               excl.end());
  }
  std::sort(ctrl.begin(), ctrl.end());
  return ctrl;
}

/// Givens rotation |A> -> cos t |A> + sin t |B>, |B> -> -sin t |A> +
/// cos t |B>, identity on every state in `prot`. Either a symbolic slot
/// (t = theta[slot]) or a fixed angle.
void emit_givens(Circuit& c, std::uint64_t A, std::uint64_t B,
                 std::optional<unsigned> slot, double fixed_theta,
                 const std::vector<std::uint64_t>& prot) {
  const std::uint64_t u = A ^ B;
  if (u == 0) throw std::invalid_argument("degenerate Givens pair");
  const unsigned p = static_cast<unsigned>(std::countr_zero(u));
  std::vector<unsigned> others;
  for (unsigned q = p + 1; q < c.n_qubits; ++q)
    if (bit(u, q)) others.push_back(q);

  // V aligns B with A everywhere but the pivot: CNOTs from p firing on
  // B's pivot value.
  const bool vpol = bit(B, p);
  std::vector<Gate> v;
  for (unsigned q : others) v.push_back(make_cnot(p, q, vpol));
  auto image = [&](std::uint64_t s) {
    if (bit(s, p) == vpol)
      for (unsigned q : others) s ^= 1ull << q;
    return s;
  };

  std::vector<std::uint64_t> excl;
  for (auto P : prot) excl.push_back(image(P));
  const auto ctrl = choose_controls(A, c.n_qubits, p, excl);

  const bool a_down = bit(A, p);  // pivot bit of A set = |down>
  GateParam par;
  if (slot) {
    par = GateParam::slot_index(*slot, 2.0);  // RY angle is 2t
    par.negated = a_down;
  } else {
    par = GateParam::angle(a_down ? -2 * fixed_theta : 2 * fixed_theta);
  }

  for (const auto& g : v) c.append(g);
  if (ctrl.empty()) {
    c.append(make_ry(p, par));
  } else {
    std::vector<bool> pol;
    for (unsigned q : ctrl) pol.push_back(bit(A, q));
    c.append(make_cry(ctrl, pol, p, par));
  }
  for (auto it = v.rbegin(); it != v.rend(); ++it) c.append(*it);
}

/// Static block turning |s> into (|s> - |sp>)/sqrt(2): a double-controlled
/// quarter Y-rotation creating the moved branch, then one Toffoli per
/// remaining differing qubit. Falls back to the generic Givens form if no
/// two-control isolation exists.
void emit_pair_block(Circuit& c, std::uint64_t s, std::uint64_t sp,
                     const std::vector<std::uint64_t>& prot) {
  const std::uint64_t u = s ^ sp;
  const unsigned t = static_cast<unsigned>(std::countr_zero(u));
  std::vector<unsigned> rest;
  for (unsigned q = t + 1; q < c.n_qubits; ++q)
    if (bit(u, q)) rest.push_back(q);

  // Search all controls up-front; fall back atomically on failure.
  unsigned c1 = 0, c2 = 0;
  bool found = false;
  for (unsigned a = 0; a < c.n_qubits && !found; ++a) {
    if (a == t) continue;
    for (unsigned b = a + 1; b < c.n_qubits && !found; ++b) {
      if (b == t) continue;
      bool ok = true;
      for (auto P : prot)
        if (bit(P, a) == bit(s, a) && bit(P, b) == bit(s, b)) {
          ok = false;
          break;
        }
      if (ok) {
        c1 = a;
        c2 = b;
        found = true;
      }
    }
  }

  std::vector<std::pair<unsigned, unsigned>> toffoli_ctrl;  // (q, r)
  std::uint64_t branch = s ^ (1ull << t);
  if (found) {
    for (unsigned q : rest) {
      bool got = false;
      for (unsigned r = 0; r < c.n_qubits && !got; ++r) {
        if (r == t || r == q) continue;
        bool ok = true;
        for (auto P : prot)
          if (bit(P, t) == bit(branch, t) && bit(P, r) == bit(branch, r)) {
            ok = false;
            break;
          }
        if (ok) {
          toffoli_ctrl.emplace_back(q, r);
          got = true;
        }
      }
      if (!got) {
        found = false;
        break;
      }
      branch ^= 1ull << q;
    }
  }

  if (!found) {
    emit_givens(c, s, sp, std::nullopt, -kPi / 4, prot);
    return;
  }

  const bool s_t = bit(s, t);
  c.append(make_cry({c1, c2}, {bit(s, c1), bit(s, c2)}, t,
                    GateParam::angle(s_t ? kPi / 2 : -kPi / 2)));
  branch = s ^ (1ull << t);
  for (const auto& [q, r] : toffoli_ctrl) {
    c.append(make_toffoli(t, r, q, bit(branch, t), bit(branch, r)));
    branch ^= 1ull << q;
  }
}

}  // namespace

std::vector<double> hyperspherical_amplitudes(const ParamVector& theta) {
  std::vector<double> a(theta.size() + 1);
  double running = 1.0;
  for (std::size_t n = 0; n < theta.size(); ++n) {
    a[n] = running * std::cos(theta[n]);
    running *= std::sin(theta[n]);
  }
  a[theta.size()] = running;
  return a;
}

Circuit ansatz_basis_superposition(unsigned n_qubits,
                                   const std::vector<std::uint64_t>& states,
                                   const std::vector<SingletPairing>& pairing) {
  if (states.empty()) throw parameter_error("empty basis list");
  std::set<std::uint64_t> seen(states.begin(), states.end());
  if (seen.size() != states.size())
    throw parameter_error("duplicate basis state");
  for (const auto& pe : pairing) {
    if (pe.state_index >= states.size())
      throw parameter_error("pairing index out of range");
    if (!seen.insert(pe.partner).second)
      throw parameter_error("overlapping singlet pairing");
  }
  for (auto s : seen)
    if (s >> n_qubits) throw parameter_error("basis state out of range");

  Circuit c;
  c.n_qubits = n_qubits;
  for (unsigned q = 0; q < n_qubits; ++q)
    if (bit(states[0], q)) c.append(make_x(q));

  std::vector<std::uint64_t> live{states[0]};
  for (std::size_t n = 1; n < states.size(); ++n) {
    std::vector<std::uint64_t> prot(live.begin(), live.end() - 1);
    emit_givens(c, states[n - 1], states[n],
                static_cast<unsigned>(n - 1), 0.0, prot);
    live.push_back(states[n]);
  }
  for (const auto& pe : pairing) {
    const std::uint64_t s = states[pe.state_index];
    std::vector<std::uint64_t> prot;
    for (auto l : live)
      if (l != s) prot.push_back(l);
    emit_givens(c, s, pe.partner, std::nullopt, -kPi / 4, prot);
    live.push_back(pe.partner);
  }
  c.n_params = static_cast<unsigned>(states.size() - 1);
  return c;
}

Circuit ansatz_n4_baryon_general() {
  const auto sb = singlet_basis_n4_b1();
  std::vector<std::uint64_t> prim;
  for (const auto& pr : sb.pairing) prim.push_back(pr.first);

  Circuit c;
  c.n_qubits = 8;
  for (unsigned q = 0; q < 8; ++q)
    if (bit(prim[0], q)) c.append(make_x(q));

  std::vector<std::uint64_t> live{prim[0]};
  for (std::size_t n = 1; n < prim.size(); ++n) {
    std::vector<std::uint64_t> prot(live.begin(), live.end() - 1);
    emit_givens(c, prim[n - 1], prim[n], static_cast<unsigned>(n - 1), 0.0,
                prot);
    live.push_back(prim[n]);
  }
  for (const auto& [s, sp] : sb.pairing) {
    if (sp == s) continue;  // unpaired rows
    std::vector<std::uint64_t> prot;
    for (auto l : live)
      if (l != s) prot.push_back(l);
    emit_pair_block(c, s, sp, prot);
    live.push_back(sp);
  }
  c.n_params = 9;
  return c;
}

Circuit ansatz_n4_vacuum_family() {
  // Bare vacuum 0xCC = cells uu dd uu dd. For each adjacent
  // (occupied, empty) cell pair: the ud/du transfer (paired with its
  // color mirror) and the doubly transferred state.
  return ansatz_basis_superposition(
      8,
      {0xCC, 0xC6, 0xC3, 0xE4, 0xF0, 0x6C, 0x3C},
      {{1, 0xC9}, {3, 0xD8}, {5, 0x9C}});
}

Circuit ansatz_n2_singlet_family() {
  // |up up down down>, the antisymmetric (up down / down up) pair and
  // |down down up up>; spans the whole N=2 singlet B=0 sector.
  return ansatz_basis_superposition(4, {0b1100, 0b0110, 0b0011},
                                    {{1, 0b1001}});
}

Circuit ansatz_brickwork(unsigned n_sites, unsigned layers) {
  if (n_sites < 2 || n_sites % 2 != 0)
    throw parameter_error("n_sites must be even and >= 2");
  if (layers < 1) throw parameter_error("layers must be >= 1");
  Circuit c;
  c.n_qubits = 2 * n_sites;
  unsigned slot = 0;
  for (unsigned k = 0; k < layers; ++k)
    for (unsigned j = 0; j + 1 < c.n_qubits; ++j)
      c.append(make_pswap(j, j + 1, GateParam::slot_index(slot++)));
  return c;
}

}  // namespace su2lgt
