// Copyright 2026 The qdla Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdla_cli/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <new>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qdla/ansatz.hpp"
#include "qdla/error.hpp"
#include "qdla/experiments.hpp"
#include "qdla/gradients.hpp"
#include "qdla/io.hpp"
#include "qdla/lie.hpp"
#include "qdla/random.hpp"
#include "qdla/stabilizer.hpp"
#include "qdla/verify.hpp"
#include "qdla_cli/dla_cache.hpp"

namespace qdla::cli {
namespace {

using nlohmann::json;

struct Globals {
  std::optional<std::string> config;
  std::optional<std::uint64_t> seed;
  unsigned jobs = 1;
  std::optional<std::string> output;
};

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <typename T>
std::vector<T> parse_list(const std::string& flag, const std::string& text) {
  std::vector<T> out;
  for (const auto& item : split(text)) {
    T value{};
    const auto* end = item.data() + item.size();
    const auto [ptr, ec] = std::from_chars(item.data(), end, value);
    if (ec != std::errc() || ptr != end) {
      throw InvalidInput(flag + ": cannot parse \"" + item + "\"");
    }
    out.push_back(value);
  }
  if (out.empty()) throw InvalidInput(flag + ": empty list");
  return out;
}

std::vector<PauliString> parse_paulis(const std::string& flag, const std::string& text) {
  std::vector<PauliString> out;
  for (const auto& label : split(text)) {
    try {
      out.push_back(PauliString::from_label(label));
    } catch (const InvalidInput& e) {
      throw ParseError(flag + ": " + e.what());
    }
  }
  if (out.empty()) throw InvalidInput(flag + ": empty list");
  return out;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const auto num = parse_list<std::int64_t>("--feff", text.substr(0, slash));
  std::int64_t den = 1;
  if (slash != std::string::npos) den = parse_list<std::int64_t>("--feff", text.substr(slash + 1))[0];
  if (num.size() != 1 || den <= 0 || num[0] <= 0) {
    throw InvalidInput("--feff: expected a positive rational such as 4 or 3/2");
  }
  return Rational{num[0], den};
}

/// Writes `content` to <output>/<name> or to `out`.
void emit(const Globals& g, const std::string& name, const std::string& content, std::ostream& out) {
  if (!g.output) {
    out << content;
    return;
  }
  const std::filesystem::path dir(*g.output);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ResourceError("cannot create output directory " + dir.string());
  const auto path = dir / name;
  atomic_write(path, content);
  out << "wrote " << path.string() << '\n';
}

// ---------------------------------------------------------------- dla

struct DlaArgs {
  std::string ansatz = "sa";
  int n = 4;
  std::optional<std::string> generators;
  std::optional<std::string> observable;
  std::optional<std::size_t> cap;
  std::optional<std::string> feff;
};

int run_dla(const Globals& g, const DlaArgs& a, std::ostream& out) {
  std::vector<PauliString> gens;
  PauliString observable;
  if (a.generators) {
    gens = parse_paulis("--generators", *a.generators);
    if (!a.observable) throw InvalidInput("--observable is required with --generators");
  } else {
    const auto kind = parse_ansatz_kind(a.ansatz);
    gens = build_ansatz(kind, a.n, 1).generators();
    observable = default_observable(kind, a.n);
  }
  if (a.observable) observable = parse_paulis("--observable", *a.observable).front();
  DlaBasis basis = a.cap ? lie_closure(gens, a.cap) : cached_lie_closure(gens, cache_dir_from_env());
  DlaGraph graph(std::move(basis));
  const auto dec = decompose_dla(graph, observable);
  std::optional<Rational> f;
  if (a.feff) f = parse_rational(*a.feff);
  emit(g, "dla.json", dla_report_json(gens, graph, dec, f).dump(2) + "\n", out);
  return kExitOk;
}

// ---------------------------------------------------------------- feff

struct FeffArgs {
  std::string ansatz = "slpa";
  int n = 4;
  std::string l_list = "48,96,192";
  int samples = 3;
  std::size_t max_exact = 60;
};

int run_feff(const Globals& g, const FeffArgs& a, std::ostream& out) {
  const auto kind = parse_ansatz_kind(a.ansatz);
  const auto ls = parse_list<std::size_t>("--L", a.l_list);
  const auto points = f_eff_curve(kind, a.n, ls, a.samples, g.seed.value_or(0), a.max_exact);
  emit(g, "feff.csv", feff_csv(kind, a.n, points), out);
  return kExitOk;
}

// ---------------------------------------------------------------- build-slpa

struct SlpaArgs {
  int n = 4;
  std::optional<std::string> stabilizers;
  std::optional<std::string> logicals;
  int layers = 1;
  std::string schedule = "in-order";
};

int run_build_slpa(const Globals& g, const SlpaArgs& a, std::ostream& out) {
  StabilizerGroup group = a.stabilizers
                              ? stabilizer_closure(a.n, parse_paulis("--stabilizers", *a.stabilizers))
                              : parity_group(a.n);
  std::vector<PauliString> logicals;
  if (a.logicals) {
    logicals = parse_paulis("--logicals", *a.logicals);
  } else if (!a.stabilizers) {
    logicals = sa_layer(a.n);
  } else {
    logicals = logical_operators(group);
  }
  const auto circuit = build_slpa(group, logicals, a.layers, parse_logical_schedule(a.schedule));
  json doc = circuit_to_json(circuit);
  doc["stabilizers"] = json::array();
  for (const auto& s : group.generators) doc["stabilizers"].push_back(s.label());
  doc["cbc_valid"] = cbc_validate(circuit).valid;
  emit(g, "slpa.json", doc.dump(2) + "\n", out);
  return kExitOk;
}

// ---------------------------------------------------------------- grad-check

struct GradArgs {
  std::string ansatz = "slpa";
  int n = 4;
  std::size_t num_params = 48;
  std::uint64_t shots = 0;
  int trials = 5;
};

int run_grad_check(const Globals& g, const GradArgs& a, std::ostream& out) {
  const auto kind = parse_ansatz_kind(a.ansatz);
  if (a.trials < 1) throw InvalidInput("--trials must be positive");
  const auto circuit = build_ansatz_gates(kind, a.n, a.num_params);
  const auto o = default_observable(kind, a.n);
  const bool blocked = circuit.has_blocks() && cbc_validate(circuit).valid;
  const std::uint64_t seed = g.seed.value_or(0);
  double fd_err = 0.0, lcu_err = 0.0, ps_shot_sq = 0.0, lcu_shot_sq = 0.0;
  std::size_t count = 0;
  std::uint64_t task = 0;
  for (int t = 0; t < a.trials; ++t) {
    Rng rng(derive_seed(seed, ++task));
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    std::vector<double> theta(circuit.num_params());
    for (auto& x : theta) x = angle(rng);
    const auto input = haar_product_state(a.n, derive_seed(seed, ++task));
    const auto ps = parameter_shift_gradient(circuit, theta, input, o, 0, 0).gradient;
    const auto fd = finite_difference_gradient(circuit, theta, input, o);
    std::vector<double> lcu;
    if (blocked) lcu = lcu_gradient(circuit, theta, input, o, 0, 0).gradient;
    std::vector<double> ps_shot, lcu_shot;
    if (a.shots > 0) {
      ps_shot = parameter_shift_gradient(circuit, theta, input, o, a.shots, derive_seed(seed, ++task))
                    .gradient;
      if (blocked) {
        lcu_shot = lcu_gradient(circuit, theta, input, o, a.shots, derive_seed(seed, ++task)).gradient;
      }
    }
    for (std::size_t j = 0; j < ps.size(); ++j) {
      fd_err = std::max(fd_err, std::abs(ps[j] - fd[j]) / std::max(1.0, std::abs(ps[j])));
      if (blocked) lcu_err = std::max(lcu_err, std::abs(ps[j] - lcu[j]));
      if (!ps_shot.empty()) ps_shot_sq += (ps_shot[j] - ps[j]) * (ps_shot[j] - ps[j]);
      if (!lcu_shot.empty()) lcu_shot_sq += (lcu_shot[j] - ps[j]) * (lcu_shot[j] - ps[j]);
      ++count;
    }
  }
  const bool consistent = fd_err < 1e-6 && (!blocked || lcu_err < 1e-10);
  json doc;
  doc["ansatz"] = to_string(kind);
  doc["n"] = a.n;
  doc["L"] = circuit.num_params();
  doc["trials"] = a.trials;
  doc["parameter_shift_vs_finite_difference"] = fd_err;
  if (blocked) doc["lcu_vs_parameter_shift"] = lcu_err;
  doc["budget"] = {{"parameter_shift", measurement_budget(circuit, GradientMethod::kParameterShift, o)}};
  if (blocked) doc["budget"]["lcu"] = measurement_budget(circuit, GradientMethod::kLcuBlocks, o);
  if (a.shots > 0) {
    doc["shots"] = a.shots;
    doc["parameter_shift_rms_shot_error"] = std::sqrt(ps_shot_sq / static_cast<double>(count));
    if (blocked) doc["lcu_rms_shot_error"] = std::sqrt(lcu_shot_sq / static_cast<double>(count));
  }
  doc["consistent"] = consistent;
  emit(g, "grad_check.json", doc.dump(2) + "\n", out);
  return consistent ? kExitOk : kExitInvalid;
}

// ---------------------------------------------------------------- train / qpr

struct TrainArgs {
  std::optional<std::string> ansatz;
  std::optional<int> n;
  std::optional<std::size_t> layers;
  std::optional<std::size_t> num_params;
  std::optional<std::uint64_t> shots;
  std::optional<std::string> method;
  std::optional<std::size_t> max_steps;
  std::optional<std::uint64_t> shot_budget;
  std::optional<std::size_t> eval_every;
  std::optional<double> init_range;
  std::optional<double> lr;
  std::optional<std::size_t> train_size;
  std::optional<std::size_t> test_size;
  std::optional<std::string> order;
  std::optional<std::string> seeds;
};

json read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open config file " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("config file " + path + ": " + e.what());
  }
}

RunSpec train_spec(const Globals& g, const TrainArgs& a, const std::string& experiment) {
  json doc = g.config ? read_config(*g.config) : json::object();
  if (!doc.is_object()) throw ParseError("config key \"<root>\": expected an object");
  if (doc.contains("experiment") && doc["experiment"] != experiment) {
    throw ParseError("config key \"experiment\": this subcommand runs \"" + experiment + "\"");
  }
  doc["experiment"] = experiment;
  const auto set = [&](const char* key, const auto& v) {
    if (v) doc[key] = *v;
  };
  set("ansatz", a.ansatz);
  set("n", a.n);
  if (a.layers) {
    doc.erase("num_params");
    doc["layers"] = *a.layers;
  }
  if (a.num_params) {
    doc.erase("layers");
    doc["num_params"] = *a.num_params;
  }
  set("shots", a.shots);
  set("method", a.method);
  set("max_steps", a.max_steps);
  set("shot_budget", a.shot_budget);
  set("eval_every", a.eval_every);
  set("init_range", a.init_range);
  if (a.lr) doc["optimizer"]["lr"] = *a.lr;
  if (a.train_size) doc["dataset"]["train_size"] = *a.train_size;
  if (a.test_size) doc["dataset"]["test_size"] = *a.test_size;
  if (a.order) doc["dataset"]["order"] = *a.order;
  if (a.seeds) doc["seeds"] = parse_list<std::uint64_t>("--seeds", *a.seeds);
  if (g.seed) doc["seeds"] = json::array({*g.seed});
  return parse_run_spec(doc);
}

int run_training(const Globals& g, const TrainArgs& a, const std::string& experiment,
                 std::ostream& out) {
  const RunSpec spec = train_spec(g, a, experiment);
  const bool qpr = experiment == "qpr";
  std::vector<std::vector<TrainRecord>> results(spec.seeds.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    for (std::size_t i = next++; i < spec.seeds.size(); i = next++) {
      try {
        results[i] = qpr ? run_qpr(spec.config, spec.seeds[i])
                         : run_symmetric_learning(spec.config, spec.seeds[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(g.jobs, spec.seeds.size()));
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);

  Globals target = g;
  if (!target.output && !spec.output_path.empty()) target.output = spec.output_path;
  if (!target.output) {
    // One stream: the per-run tables gain a leading seed column.
    std::string csv;
    for (std::size_t i = 0; i < results.size(); ++i) {
      csv += train_csv(results[i], qpr, spec.seeds[i], i == 0);
    }
    out << csv;
    return kExitOk;
  }
  for (std::size_t i = 0; i < results.size(); ++i) {
    const std::string name = experiment + "_" + to_string(spec.config.ansatz) + "_seed" +
                             std::to_string(spec.seeds[i]) + ".csv";
    emit(target, name, train_csv(results[i], qpr), out);
  }
  json manifest = to_json(spec);
  manifest["version"] = version_string();
  emit(target, "manifest.json", manifest.dump(2) + "\n", out);
  return kExitOk;
}

// ---------------------------------------------------------------- bp-scan

struct ScanArgs {
  std::string ansatz = "sa,slpa,nsa";
  std::string n_list = "4,6";
  std::string l_list = "12,24,48,96";
  std::size_t samples = 2000;
};

int run_bp_scan(const Globals& g, const ScanArgs& a, std::ostream& out) {
  std::vector<AnsatzKind> kinds;
  for (const auto& name : split(a.ansatz)) kinds.push_back(parse_ansatz_kind(name));
  if (kinds.empty()) throw InvalidInput("--ansatz: empty list");
  const auto ns = parse_list<int>("--n", a.n_list);
  const auto ls = parse_list<std::size_t>("--L", a.l_list);
  const auto records = bp_variance_scan(kinds, ns, ls, a.samples, g.seed.value_or(0));
  emit(g, "bp_scan.csv", scan_csv(records), out);
  return kExitOk;
}

// ---------------------------------------------------------------- verify

int run_verify(const Globals& g, bool thorough, std::ostream& out) {
  VerifyOptions opt;
  opt.seed = g.seed.value_or(0);
  opt.thorough = thorough;
  const auto results = run_invariant_suite(opt);
  emit(g, "verify.txt", format_check_table(results), out);
  return all_passed(results) ? kExitOk : kExitInvalid;
}

}  // namespace

int dispatch(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lie-algebraic analysis and training of stabilizer-symmetric variational circuits",
               "qdla"};
  app.set_version_flag("--version", version_string());
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--config", g.config, "JSON run configuration")->check(CLI::ExistingFile);
  app.add_option("--seed", g.seed, "Master seed");
  app.add_option("--jobs", g.jobs, "Parallel runs")->check(CLI::Range(1u, 1024u));
  app.add_option("--output", g.output, "Output directory (default: stdout)");

  DlaArgs dla;
  auto* dla_cmd = app.add_subcommand("dla", "Lie closure, DLA graph and decomposition as JSON");
  dla_cmd->add_option("--ansatz", dla.ansatz, "sa, slpa, nsa or de");
  dla_cmd->add_option("--n", dla.n, "Qubits");
  dla_cmd->add_option("--generators", dla.generators, "Comma-separated Pauli labels");
  dla_cmd->add_option("--observable", dla.observable, "Observable Pauli label");
  dla_cmd->add_option("--cap", dla.cap, "Abort once the basis exceeds this size");
  dla_cmd->add_option("--feff", dla.feff, "Efficiency for the trade-off verdict, e.g. 4 or 3/2");

  FeffArgs feff;
  auto* feff_cmd = app.add_subcommand("feff", "Gradient measurement efficiency curve as CSV");
  feff_cmd->add_option("--ansatz", feff.ansatz, "sa, slpa, nsa or de");
  feff_cmd->add_option("--n", feff.n, "Qubits");
  feff_cmd->add_option("--L", feff.l_list, "Comma-separated gate counts");
  feff_cmd->add_option("--samples", feff.samples, "Random parameter samples");
  feff_cmd->add_option("--max-exact", feff.max_exact, "Largest L partitioned exactly");

  SlpaArgs slpa;
  auto* slpa_cmd = app.add_subcommand("build-slpa", "Stabilizer-logical product circuit as JSON");
  slpa_cmd->add_option("--n", slpa.n, "Qubits");
  slpa_cmd->add_option("--stabilizers", slpa.stabilizers, "Stabilizer generators");
  slpa_cmd->add_option("--logicals", slpa.logicals, "Logical operators");
  slpa_cmd->add_option("--layers", slpa.layers, "Layers");
  slpa_cmd->add_option("--schedule", slpa.schedule, "in-order or weight");

  GradArgs grad;
  auto* grad_cmd = app.add_subcommand("grad-check", "Gradient estimator consistency report");
  grad_cmd->add_option("--ansatz", grad.ansatz, "sa, slpa, nsa or de");
  grad_cmd->add_option("--n", grad.n, "Qubits");
  grad_cmd->add_option("--L", grad.num_params, "Gate count");
  grad_cmd->add_option("--shots", grad.shots, "Shots per circuit (0: exact only)");
  grad_cmd->add_option("--trials", grad.trials, "Random parameter draws");

  TrainArgs train;
  const auto add_train_flags = [&](CLI::App* cmd) {
    cmd->add_option("--ansatz", train.ansatz, "sa, slpa, nsa or de");
    cmd->add_option("--n", train.n, "Qubits");
    cmd->add_option("--layers", train.layers, "Layers");
    cmd->add_option("--L", train.num_params, "Gate count");
    cmd->add_option("--shots", train.shots, "Shots per circuit");
    cmd->add_option("--method", train.method, "parameter-shift or lcu");
    cmd->add_option("--max-steps", train.max_steps, "Step limit");
    cmd->add_option("--shot-budget", train.shot_budget, "Cumulative shot limit");
    cmd->add_option("--eval-every", train.eval_every, "Steps between records");
    cmd->add_option("--init-range", train.init_range, "Initial angles in [-r, r]");
    cmd->add_option("--lr", train.lr, "Adam learning rate");
    cmd->add_option("--train-size", train.train_size, "Training examples");
    cmd->add_option("--test-size", train.test_size, "Test examples");
    cmd->add_option("--order", train.order, "uniform or cyclic");
    cmd->add_option("--seeds", train.seeds, "Comma-separated run seeds");
  };
  auto* train_cmd = app.add_subcommand("train", "Symmetric-function regression runs as CSV");
  add_train_flags(train_cmd);
  auto* qpr_cmd = app.add_subcommand("qpr", "Phase-recognition runs as CSV");
  add_train_flags(qpr_cmd);

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("bp-scan", "Cost variance scan as CSV");
  scan_cmd->add_option("--ansatz", scan.ansatz, "Comma-separated ansatz kinds");
  scan_cmd->add_option("--n", scan.n_list, "Comma-separated qubit counts");
  scan_cmd->add_option("--L", scan.l_list, "Comma-separated gate counts");
  scan_cmd->add_option("--samples", scan.samples, "Parameter samples per point");

  bool thorough = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite");
  verify_cmd->add_flag("--thorough", thorough, "Include the slower checks");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInvalid;
  }

  try {
    if (dla_cmd->parsed()) return run_dla(g, dla, out);
    if (feff_cmd->parsed()) return run_feff(g, feff, out);
    if (slpa_cmd->parsed()) return run_build_slpa(g, slpa, out);
    if (grad_cmd->parsed()) return run_grad_check(g, grad, out);
    if (train_cmd->parsed()) return run_training(g, train, "symmetric", out);
    if (qpr_cmd->parsed()) return run_training(g, train, "qpr", out);
    if (scan_cmd->parsed()) return run_bp_scan(g, scan, out);
    if (verify_cmd->parsed()) return run_verify(g, thorough, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::bad_alloc&) {
    err << "resource error: out of memory\n";
    return kExitResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  }
  err << app.help();
  return kExitInvalid;
}

}  // namespace qdla::cli
