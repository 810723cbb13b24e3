#include "su2lgt/circuit.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "su2lgt/conjugation.hpp"

namespace su2lgt {

namespace {

const char* kind_name(GateKind k) {
  switch (k) {
    case GateKind::X: return "x";
    case GateKind::RY: return "ry";
    case GateKind::CRY: return "cry";
    case GateKind::CNOT: return "cnot";
    case GateKind::SWAP: return "swap";
    case GateKind::TOFFOLI: return "toffoli";
    case GateKind::PSWAP: return "pswap";
  }
  throw std::logic_error("bad gate kind");
}

GateKind kind_from_name(const std::string& s) {
  if (s == "x") return GateKind::X;
  if (s == "ry") return GateKind::RY;
  if (s == "cry") return GateKind::CRY;
  if (s == "cnot") return GateKind::CNOT;
  if (s == "swap") return GateKind::SWAP;
  if (s == "toffoli") return GateKind::TOFFOLI;
  if (s == "pswap") return GateKind::PSWAP;
  throw std::invalid_argument("unknown gate kind: " + s);
}

}  // namespace

void Circuit::append(Gate g) {
  g.validate();
  for (unsigned q : g.qubits)
    if (q >= n_qubits) throw std::out_of_range("gate qubit out of range");
  if (g.param && g.param->symbolic)
    n_params = std::max(n_params, g.param->slot + 1);
  gates.push_back(std::move(g));
}

void Circuit::append(const Circuit& other) {
  if (other.n_qubits != n_qubits)
    throw std::invalid_argument("circuit width mismatch");
  for (const auto& g : other.gates) append(g);
}

void Circuit::validate() const {
  for (const auto& g : gates) {
    g.validate();
    for (unsigned q : g.qubits)
      if (q >= n_qubits) throw std::out_of_range("gate qubit out of range");
    if (g.param && g.param->symbolic && g.param->slot >= n_params)
      throw std::out_of_range("parameter slot out of range");
  }
}

std::string Circuit::to_json() const {
  nlohmann::json j;
  j["n_qubits"] = n_qubits;
  j["n_params"] = n_params;
  j["gates"] = nlohmann::json::array();
  for (const auto& g : gates) {
    nlohmann::json gj;
    gj["kind"] = kind_name(g.kind);
    gj["qubits"] = g.qubits;
    gj["polarity"] = std::vector<bool>(g.control_polarity);
    if (g.param) {
      if (g.param->symbolic)
        gj["param"] = {{"slot", g.param->slot},
                       {"negated", g.param->negated},
                       {"scale", g.param->scale}};
      else
        gj["param"] = {{"fixed", g.param->fixed}};
    }
    j["gates"].push_back(std::move(gj));
  }
  return j.dump(2);
}

Circuit Circuit::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  Circuit c;
  c.n_qubits = j.at("n_qubits").get<unsigned>();
  for (const auto& gj : j.at("gates")) {
    Gate g;
    g.kind = kind_from_name(gj.at("kind").get<std::string>());
    g.qubits = gj.at("qubits").get<std::vector<unsigned>>();
    if (gj.contains("polarity"))
      g.control_polarity = gj["polarity"].get<std::vector<bool>>();
    if (gj.contains("param")) {
      const auto& pj = gj["param"];
      GateParam p;
      if (pj.contains("slot")) {
        p.symbolic = true;
        p.slot = pj.at("slot").get<unsigned>();
        p.negated = pj.value("negated", false);
        p.scale = pj.value("scale", 1.0);
      } else {
        p.fixed = pj.at("fixed").get<double>();
      }
      g.param = p;
    }
    c.append(std::move(g));
  }
  if (j.contains("n_params") &&
      j["n_params"].get<unsigned>() != c.n_params)
    throw std::invalid_argument("n_params does not match gate slots");
  return c;
}

Circuit inverse(const Circuit& c) {
  Circuit out;
  out.n_qubits = c.n_qubits;
  out.n_params = c.n_params;
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    Gate g = *it;
    if (g.param) {
      if (g.param->symbolic)
        g.param->negated = !g.param->negated;
      else
        g.param->fixed = -g.param->fixed;
    }
    out.gates.push_back(std::move(g));
  }
  return out;
}

SplitCircuit split_static_tail(const Circuit& c) {
  std::size_t cut = c.gates.size();
  while (cut > 0 && !c.gates[cut - 1].is_parameterized()) --cut;
  SplitCircuit s;
  s.variational.n_qubits = s.static_tail.n_qubits = c.n_qubits;
  for (std::size_t i = 0; i < cut; ++i) s.variational.append(c.gates[i]);
  for (std::size_t i = cut; i < c.gates.size(); ++i)
    s.static_tail.append(c.gates[i]);
  s.variational.n_params = c.n_params;
  return s;
}

ReducedProblem reduce_inactive_qubits(const Circuit& variational,
                                      const PauliSum& h_effective,
                                      std::uint64_t input_state) {
  if (h_effective.n_qubits() != variational.n_qubits)
    throw std::invalid_argument("hamiltonian width mismatch");
  std::vector<bool> touched(variational.n_qubits, false);
  for (const auto& g : variational.gates)
    for (unsigned q : g.qubits) touched[q] = true;

  ReducedProblem r;
  std::vector<unsigned> new_index(variational.n_qubits);
  for (unsigned q = 0; q < variational.n_qubits; ++q) {
    if (touched[q]) {
      new_index[q] = static_cast<unsigned>(r.active.size());
      if ((input_state >> q) & 1)
        r.input_state |= 1ull << r.active.size();
      r.active.push_back(q);
    } else {
      r.fixed[q] = !((input_state >> q) & 1);  // bit set = down
    }
  }

  r.hamiltonian = h_effective.project_fixed_qubits(r.fixed);
  r.circuit.n_qubits = static_cast<unsigned>(r.active.size());
  for (Gate g : variational.gates) {
    for (auto& q : g.qubits) q = new_index[q];
    r.circuit.append(std::move(g));
  }
  r.circuit.n_params = variational.n_params;
  return r;
}

PauliSum conjugate_hamiltonian_by_tail(const PauliSum& h, const Circuit& tail,
                                       std::size_t term_cap) {
  for (const auto& g : tail.gates)
    if (g.is_parameterized())
      throw std::invalid_argument("tail must be parameter-free");
  // U_s = g_k ... g_1 (first gate rightmost), so U_s^dag h U_s folds the
  // last gate first.
  PauliSum out = h;
  for (auto it = tail.gates.rbegin(); it != tail.gates.rend(); ++it) {
    if (is_supported_clifford(*it)) {
      PauliSum next(out.n_qubits());
      for (const auto& [s, c] : out.terms()) {
        const auto t = conjugate_clifford({s, c}, *it);
        next.add(t.string, t.coefficient);
      }
      next.canonicalize();
      out = std::move(next);
    } else {
      out = conjugate_general(out, *it, term_cap);
    }
    if (out.size() > term_cap)
      throw std::runtime_error("conjugation term cap exceeded");
  }
  return out;
}

void apply_noiseless(const Circuit& c, const ParamVector& theta,
                     StateVector& psi) {
  if (psi.n_qubits() != c.n_qubits)
    throw std::invalid_argument("state width mismatch");
  if (theta.size() != c.n_params)
    throw std::invalid_argument("parameter count mismatch");
  for (const auto& g : c.gates) psi.apply(g, theta);
}

StateVector run_noiseless(const Circuit& c, const ParamVector& theta,
                          std::uint64_t input_state) {
  StateVector psi = StateVector::basis_state(c.n_qubits, input_state);
  apply_noiseless(c, theta, psi);
  return psi;
}

}  // namespace su2lgt
