// Command-line driver: named experiments over the core library with
// deterministic CSV/JSON artifacts and a re-run manifest per output.
#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <su2lgt/ansatz.hpp>
#include <su2lgt/exact.hpp>
#include <su2lgt/protocols.hpp>

using namespace su2lgt;
using nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "0.1.0";

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

/// "a:b:step" inclusive range or comma-separated values.
std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    double a, b, step;
    char c1, c2;
    std::istringstream is(text);
    if (!(is >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':' ||
        step <= 0)
      throw CLI::ValidationError("grid", "expected start:stop:step");
    for (double v = a; v <= b + 1e-12 * step; v += step) out.push_back(v);
  } else {
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) out.push_back(std::stod(item));
  }
  if (out.empty()) throw CLI::ValidationError("grid", "empty grid");
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw CLI::ValidationError("file", "cannot read " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

/// CSV + JSON mirror + manifest, written together only on success.
class Artifact {
 public:
  Artifact(std::string out_path, ordered_json config)
      : path_(std::move(out_path)), config_(std::move(config)) {}

  void header(const std::vector<std::string>& columns) {
    columns_ = columns;
    for (std::size_t i = 0; i < columns.size(); ++i)
      csv_ << (i ? "," : "") << columns[i];
    csv_ << '\n';
  }

  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i)
      csv_ << (i ? "," : "") << cells[i];
    csv_ << '\n';
    ordered_json r;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      // Mirror numerics as JSON numbers, everything else as strings.
      bool numeric = false;
      try {
        std::size_t used = 0;
        const double v = std::stod(cells[i], &used);
        if (used == cells[i].size()) {
          r[columns_[i]] = v;
          numeric = true;
        }
      } catch (const std::exception&) {
      }
      if (!numeric) r[columns_[i]] = cells[i];
    }
    rows_.push_back(std::move(r));
  }

  void write() const {
    const std::string base =
        path_.size() > 4 && path_.substr(path_.size() - 4) == ".csv"
            ? path_.substr(0, path_.size() - 4)
            : path_;
    {
      std::ofstream f(path_);
      if (!f) throw std::runtime_error("cannot write " + path_);
      f << csv_.str();
    }
    {
      ordered_json mirror;
      mirror["columns"] = columns_;
      mirror["rows"] = rows_;
      std::ofstream f(base + ".json");
      f << mirror.dump(2) << '\n';
    }
    {
      ordered_json manifest;
      manifest["version"] = kVersion;
      manifest["config"] = config_;
      std::ofstream f(base + ".manifest.json");
      f << manifest.dump(2) << '\n';
    }
  }

 private:
  std::string path_;
  ordered_json config_;
  std::vector<std::string> columns_;
  std::ostringstream csv_;
  std::vector<ordered_json> rows_;
};

struct CommonOpts {
  std::string mode = "exact";
  std::size_t shots = 8024;
  std::uint64_t seed = 0;
  bool seed_set = false;

  Estimator estimator() const {
    Estimator est;
    if (mode == "sampled") {
      if (!seed_set)
        throw CLI::ValidationError("--seed", "required in sampled mode");
      est.mode = EstimatorMode::Sampled;
      est.shots = shots;
      est.seed = seed;
    }
    return est;
  }

  ordered_json echo() const {
    return {{"mode", mode}, {"shots", shots}, {"seed", seed}};
  }
};

/// Expand every `--config <file>` (flat key=value lines, `#` comments)
/// in place into `--key=value` tokens; later command-line flags override.
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> out;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    std::string path;
    if (a == "--config" && i + 1 < argc)
      path = argv[++i];
    else if (a.rfind("--config=", 0) == 0)
      path = a.substr(9);
    else {
      out.push_back(std::move(a));
      continue;
    }
    std::istringstream is(read_file(path));
    std::string line;
    while (std::getline(is, line)) {
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      const auto strip = [](std::string s) {
        const auto b = s.find_first_not_of(" \t");
        const auto e = s.find_last_not_of(" \t");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
      };
      const auto eq = line.find('=');
      if (eq == std::string::npos) {
        if (!strip(line).empty())
          throw CLI::ValidationError("--config", "expected key=value: " + line);
        continue;
      }
      out.push_back("--" + strip(line.substr(0, eq)) + "=" +
                    strip(line.substr(eq + 1)));
    }
  }
  return out;
}

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--mode", o.mode, "exact | sampled")
      ->check(CLI::IsMember({"exact", "sampled"}));
  cmd->add_option("--shots", o.shots, "shots per measurement setting");
  cmd->add_option("--seed", o.seed, "sampling seed")
      ->each([&o](const std::string&) { o.seed_set = true; });
}

void mass_table(Artifact& art, const std::vector<MassRow>& rows) {
  art.header({"x", "E_v", "E_b_or_m", "mass", "overlap_final", "evals_used"});
  for (const auto& r : rows)
    art.row({fmt(r.x), fmt(r.e_v), fmt(r.e_x), fmt(r.mass),
             fmt(r.overlap_final), std::to_string(r.evals)});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SU(2) lattice gauge theory toolkit"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  // model dump | count
  auto* model = app.add_subcommand("model", "Hamiltonian inspection");
  model->require_subcommand(1);
  unsigned n_sites = 4;
  double m_tilde = 1.0, x = 1.0;
  auto* dump = model->add_subcommand("dump", "canonical Pauli text");
  dump->add_option("--n", n_sites, "spatial sites (even)");
  dump->add_option("--mtilde", m_tilde, "fermion mass");
  dump->add_option("--x", x, "inverse coupling");
  dump->callback([&] {
    std::fputs(build_hamiltonian({n_sites, m_tilde, x}).to_text().c_str(),
               stdout);
  });
  auto* count = model->add_subcommand("count", "term count vs formula");
  count->add_option("--n", n_sites, "spatial sites (even)");
  count->callback([&] {
    const auto tc = pauli_term_count(n_sites);
    std::printf("{\"actual\":%zu,\"formula\":%zu}\n", tc.actual, tc.formula);
  });

  // ed [scan]
  auto* ed = app.add_subcommand("ed", "exact diagonalization");
  std::string sector = "B=0";
  std::size_t k_low = 1;
  bool singlet = false, qz_zero = false;
  ed->add_option("--n", n_sites, "spatial sites (even)");
  ed->add_option("--mtilde", m_tilde, "fermion mass");
  ed->add_option("--x", x, "inverse coupling");
  ed->add_option("--sector", sector, "baryon sector, e.g. B=1");
  ed->add_option("--k", k_low, "number of lowest levels");
  ed->add_flag("--singlet", singlet, "restrict to the color-singlet subspace");
  ed->add_flag("--qz-zero", qz_zero, "restrict to Qz = 0");
  std::string out_path = "results.csv";
  std::string m_grid_text = "1", x_grid_text = "1";
  auto* ed_scan = ed->add_subcommand("scan", "hadron-mass table over a grid");
  ed->callback([&] {
    if (ed_scan->parsed()) return;  // parent callback still fires on `ed scan`
    if (sector.rfind("B=", 0) != 0)
      throw CLI::ValidationError("--sector", "expected B=<integer>");
    const int b = std::stoi(sector.substr(2));
    const auto r = eigensolve_sector({n_sites, m_tilde, x},
                                     {b, qz_zero, singlet}, k_low);
    ordered_json out;
    out["energies"] = r.energies;
    out["sector_dim"] = r.basis.size();
    std::printf("%s\n", out.dump().c_str());
  });

  std::string n_list_text = "2,4";
  ed_scan->add_option("--n-list", n_list_text, "lattice sizes");
  ed_scan->add_option("--mtilde-grid", m_grid_text, "mass grid");
  ed_scan->add_option("--x-grid", x_grid_text, "coupling grid");
  ed_scan->add_option("--out", out_path, "CSV output path");
  ed_scan->callback([&] {
    std::vector<unsigned> n_list;
    for (double v : parse_grid(n_list_text))
      n_list.push_back(static_cast<unsigned>(v));
    Artifact art(out_path, {{"experiment", "ed_scan"},
                            {"n_list", n_list_text},
                            {"mtilde_grid", m_grid_text},
                            {"x_grid", x_grid_text}});
    art.header({"N", "m_tilde", "x", "E_v", "E_b", "E_m", "M_b", "M_m", "r"});
    for (const auto& r : run_ratio_scan(n_list, parse_grid(m_grid_text),
                                        parse_grid(x_grid_text)))
      art.row({std::to_string(r.n_sites), fmt(r.m_tilde), fmt(r.x),
               fmt(r.e_v), fmt(r.e_b), fmt(r.e_m), fmt(r.m_b), fmt(r.m_m),
               r.ratio_valid ? fmt(r.ratio) : "nan"});
    art.write();
  });

  // vqe baryon | meson | brickwork
  auto* vqe = app.add_subcommand("vqe", "variational experiments");
  vqe->require_subcommand(1);
  CommonOpts common;
  std::string x_grid_vqe = "0.5:5:0.5";

  auto* baryon = vqe->add_subcommand("baryon", "B=1 vs B=0 ground VQE");
  baryon->add_option("--n", n_sites, "2 or 4");
  baryon->add_option("--mtilde", m_tilde, "fermion mass");
  baryon->add_option("--x-grid", x_grid_vqe, "coupling grid");
  baryon->add_option("--out", out_path, "CSV output path");
  add_common(baryon, common);
  baryon->callback([&] {
    Artifact art(out_path, {{"experiment", "baryon_mass"},
                            {"n", n_sites},
                            {"mtilde", m_tilde},
                            {"x_grid", x_grid_vqe},
                            {"estimator", common.echo()}});
    mass_table(art, run_baryon_mass(n_sites, m_tilde, parse_grid(x_grid_vqe),
                                    common.estimator()));
    art.write();
  });

  std::string method = "penalty";
  auto* meson = vqe->add_subcommand("meson", "excited-state VQE, N=2");
  meson->add_option("--mtilde", m_tilde, "fermion mass");
  meson->add_option("--x-grid", x_grid_vqe, "coupling grid");
  meson->add_option("--method", method, "penalty | gs")
      ->check(CLI::IsMember({"penalty", "gs"}));
  meson->add_option("--out", out_path, "CSV output path");
  add_common(meson, common);
  meson->callback([&] {
    Artifact art(out_path, {{"experiment", "meson_mass"},
                            {"mtilde", m_tilde},
                            {"x_grid", x_grid_vqe},
                            {"method", method},
                            {"estimator", common.echo()}});
    mass_table(art,
               run_meson_mass(m_tilde, parse_grid(x_grid_vqe),
                              method == "gs" ? ExcitedMethod::GramSchmidt
                                             : ExcitedMethod::Penalty,
                              common.estimator()));
    art.write();
  });

  int baryon_number = 0;
  unsigned layers = 10;
  auto* brick = vqe->add_subcommand("brickwork", "N=6 brickwork VQE vs ED");
  brick->add_option("--b", baryon_number, "baryon sector (0 or 1)");
  brick->add_option("--layers", layers, "brickwork layers");
  brick->add_option("--mtilde-grid", m_grid_text, "mass grid");
  brick->add_option("--x-grid", x_grid_text, "coupling grid");
  brick->add_option("--out", out_path, "CSV output path");
  brick->callback([&] {
    Artifact art(out_path, {{"experiment", "n6_brickwork"},
                            {"b", baryon_number},
                            {"layers", layers},
                            {"mtilde_grid", m_grid_text},
                            {"x_grid", x_grid_text}});
    art.header({"m_tilde", "x", "B", "layers", "E_vqe", "E_ed",
                "magnetization", "evals_used"});
    for (const auto& r :
         run_n6_brickwork(parse_grid(m_grid_text), parse_grid(x_grid_text),
                          baryon_number, layers))
      art.row({fmt(r.m_tilde), fmt(r.x), std::to_string(r.baryon_number),
               std::to_string(r.layers), fmt(r.e_vqe), fmt(r.e_ed),
               fmt(r.magnetization), std::to_string(r.evals)});
    art.write();
  });

  // scan ratio
  auto* scan = app.add_subcommand("scan", "parameter-space scans");
  scan->require_subcommand(1);
  auto* ratio = scan->add_subcommand("ratio", "mass-ratio contour grid (ED)");
  ratio->add_option("--n-list", n_list_text, "lattice sizes");
  ratio->add_option("--mtilde-grid", m_grid_text, "mass grid");
  ratio->add_option("--x-grid", x_grid_text, "coupling grid");
  ratio->add_option("--out", out_path, "CSV output path");
  ratio->callback([&] {
    std::vector<unsigned> n_list;
    for (double v : parse_grid(n_list_text))
      n_list.push_back(static_cast<unsigned>(v));
    Artifact art(out_path, {{"experiment", "ratio_contour"},
                            {"n_list", n_list_text},
                            {"mtilde_grid", m_grid_text},
                            {"x_grid", x_grid_text}});
    art.header({"N", "m_tilde", "x", "r"});
    for (const auto& r : run_ratio_scan(n_list, parse_grid(m_grid_text),
                                        parse_grid(x_grid_text)))
      art.row({std::to_string(r.n_sites), fmt(r.m_tilde), fmt(r.x),
               r.ratio_valid ? fmt(r.ratio) : "nan"});
    art.write();
  });

  // noise study
  auto* noise = app.add_subcommand("noise", "error-mitigation experiments");
  noise->require_subcommand(1);
  double depol_p = 0.01, readout_p = 0.05;
  auto* study = noise->add_subcommand("study", "ZNE + readout mitigation, N=2");
  study->add_option("--mtilde", m_tilde, "fermion mass");
  study->add_option("--x", x, "inverse coupling");
  study->add_option("--depol", depol_p, "two-qubit depolarizing probability");
  study->add_option("--readout", readout_p, "per-qubit readout flip");
  study->add_option("--out", out_path, "CSV output path");
  add_common(study, common);
  study->callback([&] {
    if (!common.seed_set)
      throw CLI::ValidationError("--seed", "required for the noise study");
    Artifact art(out_path, {{"experiment", "noise_study"},
                            {"mtilde", m_tilde},
                            {"x", x},
                            {"depol", depol_p},
                            {"readout", readout_p},
                            {"estimator", common.echo()}});
    const auto r = run_noise_study(m_tilde, x, depol_p, readout_p,
                                   common.shots, common.seed);
    art.header({"x", "m_tilde", "ideal", "unmitigated", "fold3", "fold5",
                "extrapolated", "readout_raw", "readout_mitigated"});
    art.row({fmt(r.x), fmt(r.m_tilde), fmt(r.ideal), fmt(r.unmitigated),
             fmt(r.fold3), fmt(r.fold5), fmt(r.extrapolated),
             fmt(r.readout_raw), fmt(r.readout_mitigated)});
    art.write();
  });

  // simulate expectation
  auto* simulate = app.add_subcommand("simulate", "direct circuit simulation");
  simulate->require_subcommand(1);
  std::string circuit_path, observable_path, theta_text;
  double sim_noise_p = 0.0;
  auto* expectation =
      simulate->add_subcommand("expectation", "measure an observable");
  expectation->add_option("--circuit", circuit_path, "circuit JSON file")
      ->required();
  expectation
      ->add_option("--observable", observable_path, "Pauli-sum text file")
      ->required();
  expectation->add_option("--theta", theta_text, "comma-separated angles");
  expectation->add_option("--noise", sim_noise_p, "depolarizing probability");
  add_common(expectation, common);
  expectation->callback([&] {
    const Circuit c = Circuit::from_json(read_file(circuit_path));
    const PauliSum h = PauliSum::from_text(read_file(observable_path));
    ParamVector theta;
    if (!theta_text.empty())
      for (double v : parse_grid(theta_text)) theta.push_back(v);
    if (theta.size() != c.n_params)
      throw CLI::ValidationError("--theta", "angle count mismatch");

    if (common.mode == "exact") {
      const double e = run_noiseless(c, theta, 0).expectation(h);
      std::printf("{\"energy\":%s}\n", fmt(e).c_str());
      return;
    }
    if (!common.seed_set)
      throw CLI::ValidationError("--seed", "required in sampled mode");
    NoiseModel nm;
    nm.two_qubit_depolarizing_p = sim_noise_p;
    nm.seed = common.seed;
    const StateVector psi = apply_circuit(
        c, theta, 0, sim_noise_p > 0 ? &nm : nullptr, /*trajectory=*/0);
    const auto groups = group_for_measurement(h);
    const auto records =
        sample_groups(psi, groups, common.shots, nullptr, common.seed);
    for (std::size_t i = 0; i < records.size(); ++i) {
      ordered_json line;
      line["group"] = i;
      line["basis"] = records[i].group.basis_assignment;
      line["shots"] = records[i].shots;
      ordered_json counts;
      for (const auto& [bits, cnt] : records[i].counts)
        counts[std::to_string(bits)] = cnt;
      line["counts"] = counts;
      std::printf("%s\n", line.dump().c_str());
    }
    const auto est = estimate_expectations(records, h);
    std::printf("{\"energy\":%s,\"std_error\":%s}\n", fmt(est.energy).c_str(),
                fmt(est.std_error).c_str());
  });

  try {
    auto args = expand_config(argc, argv);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  return 0;
}
