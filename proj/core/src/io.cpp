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

#include "qdla/io.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <system_error>

#include "qdla/ansatz.hpp"
#include "qdla/error.hpp"

#ifndef QDLA_VERSION
#define QDLA_VERSION "0.0.0"
#endif

namespace qdla {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError("config key \"" + path + "\": " + what);
}

void check_keys(const json& obj, const std::string& prefix,
                std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) fail(prefix.empty() ? "<root>" : prefix, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) fail(prefix.empty() ? key : prefix + "." + key, "unknown key");
  }
}

std::string join(const std::string& prefix, std::string_view key) {
  return prefix.empty() ? std::string(key) : prefix + "." + std::string(key);
}

std::uint64_t get_uint(const json& v, const std::string& path) {
  if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
    fail(path, "expected a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

double get_double(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  return v.get<double>();
}

std::string get_string(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

template <typename F>
auto with_path(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidInput& e) {
    fail(path, e.what());
  }
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

std::string rational_str(const Rational& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

}  // namespace

std::string version_string() { return QDLA_VERSION; }

RunSpec parse_run_spec(const json& doc) {
  check_keys(doc, "",
             {"experiment", "ansatz", "n", "layers", "num_params", "shots", "method", "max_steps",
              "shot_budget", "eval_every", "init_range", "optimizer", "dataset", "seeds",
              "output_path"});
  RunSpec spec;
  TrainConfig& c = spec.config;
  if (doc.contains("experiment")) {
    spec.experiment = get_string(doc["experiment"], "experiment");
    if (spec.experiment != "symmetric" && spec.experiment != "qpr") {
      fail("experiment", "expected \"symmetric\" or \"qpr\"");
    }
  }
  if (doc.contains("ansatz")) {
    const auto name = get_string(doc["ansatz"], "ansatz");
    c.ansatz = with_path("ansatz", [&] { return parse_ansatz_kind(name); });
  }
  if (doc.contains("n")) c.n = static_cast<int>(get_uint(doc["n"], "n"));
  if (doc.contains("layers") && doc.contains("num_params")) {
    fail("layers", "give either layers or num_params, not both");
  }
  if (doc.contains("layers")) {
    const auto layers = get_uint(doc["layers"], "layers");
    c.num_params = with_path("layers", [&] {
      return static_cast<std::size_t>(layers) * gates_per_layer(c.ansatz, c.n);
    });
  }
  if (doc.contains("num_params")) c.num_params = get_uint(doc["num_params"], "num_params");
  if (doc.contains("shots")) c.shots = get_uint(doc["shots"], "shots");
  if (doc.contains("method")) {
    const auto name = get_string(doc["method"], "method");
    c.method = with_path("method", [&] { return parse_gradient_method(name); });
  }
  if (doc.contains("max_steps")) c.max_steps = get_uint(doc["max_steps"], "max_steps");
  if (doc.contains("shot_budget")) c.shot_budget = get_uint(doc["shot_budget"], "shot_budget");
  if (doc.contains("eval_every")) c.eval_every = get_uint(doc["eval_every"], "eval_every");
  if (doc.contains("init_range")) c.init_range = get_double(doc["init_range"], "init_range");

  if (doc.contains("optimizer")) {
    const json& o = doc["optimizer"];
    check_keys(o, "optimizer", {"lr", "beta1", "beta2", "epsilon"});
    if (o.contains("lr")) c.optimizer.lr = get_double(o["lr"], "optimizer.lr");
    if (o.contains("beta1")) c.optimizer.beta1 = get_double(o["beta1"], "optimizer.beta1");
    if (o.contains("beta2")) c.optimizer.beta2 = get_double(o["beta2"], "optimizer.beta2");
    if (o.contains("epsilon")) c.optimizer.epsilon = get_double(o["epsilon"], "optimizer.epsilon");
  }
  if (doc.contains("dataset")) {
    const json& d = doc["dataset"];
    const std::string p = "dataset";
    check_keys(d, p,
               {"train_size", "test_size", "order", "delta", "j_max", "j_critical", "noise_std",
                "gamma"});
    if (d.contains("train_size")) c.train_size = get_uint(d["train_size"], join(p, "train_size"));
    if (d.contains("test_size")) c.test_size = get_uint(d["test_size"], join(p, "test_size"));
    if (d.contains("order")) {
      const auto name = get_string(d["order"], join(p, "order"));
      c.order = with_path(join(p, "order"), [&] { return parse_sample_order(name); });
    }
    if (d.contains("delta")) c.delta = get_double(d["delta"], join(p, "delta"));
    if (d.contains("j_max")) c.j_max = get_double(d["j_max"], join(p, "j_max"));
    if (d.contains("j_critical")) c.j_critical = get_double(d["j_critical"], join(p, "j_critical"));
    if (d.contains("noise_std")) c.noise_std = get_double(d["noise_std"], join(p, "noise_std"));
    if (d.contains("gamma")) c.gamma = get_double(d["gamma"], join(p, "gamma"));
  }
  if (doc.contains("seeds")) {
    const json& s = doc["seeds"];
    if (!s.is_array() || s.empty()) fail("seeds", "expected a non-empty array of integers");
    spec.seeds.clear();
    for (std::size_t i = 0; i < s.size(); ++i) {
      spec.seeds.push_back(get_uint(s[i], "seeds[" + std::to_string(i) + "]"));
    }
  }
  if (doc.contains("output_path")) spec.output_path = get_string(doc["output_path"], "output_path");
  validate(c);
  return spec;
}

RunSpec load_run_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open config file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("config file " + path.string() + ": " + e.what());
  }
  return parse_run_spec(doc);
}

json to_json(const TrainConfig& c) {
  json j;
  j["ansatz"] = to_string(c.ansatz);
  j["n"] = c.n;
  j["num_params"] = c.num_params;
  j["shots"] = c.shots;
  j["method"] = to_string(effective_method(c));
  j["max_steps"] = c.max_steps;
  j["shot_budget"] = c.shot_budget;
  j["eval_every"] = c.eval_every;
  j["init_range"] = c.init_range;
  j["optimizer"] = {{"lr", c.optimizer.lr},
                    {"beta1", c.optimizer.beta1},
                    {"beta2", c.optimizer.beta2},
                    {"epsilon", c.optimizer.epsilon}};
  j["dataset"] = {{"train_size", c.train_size}, {"test_size", c.test_size},
                  {"order", to_string(c.order)},  {"delta", c.delta},
                  {"j_max", c.j_max},             {"j_critical", c.j_critical},
                  {"noise_std", c.noise_std},     {"gamma", c.gamma}};
  return j;
}

json to_json(const RunSpec& spec) {
  json j = to_json(spec.config);
  j["experiment"] = spec.experiment;
  j["seeds"] = spec.seeds;
  if (!spec.output_path.empty()) j["output_path"] = spec.output_path;
  return j;
}

json circuit_to_json(const Circuit& circuit) {
  json j;
  j["n"] = circuit.num_qubits();
  j["ansatz"] = to_string(circuit.kind());
  j["num_params"] = circuit.num_params();
  json gates = json::array();
  for (std::size_t j = 0; j < circuit.num_params(); ++j) {
    json gate = {{"label", circuit.gate(j).generator.label()}, {"param_index", circuit.gate(j).param}};
    if (circuit.has_blocks()) gate["block"] = circuit.block_of(j);
    gates.push_back(std::move(gate));
  }
  j["gates"] = std::move(gates);
  if (circuit.has_blocks()) {
    json blocks = json::array();
    for (const auto& b : circuit.blocks()) blocks.push_back({b.begin, b.end});
    j["blocks"] = std::move(blocks);
  }
  return j;
}

json dla_report_json(const std::vector<PauliString>& generators, const DlaGraph& graph,
                     const DlaDecomposition& dec, std::optional<Rational> f_eff) {
  json j;
  const int n = graph.basis().n;
  j["n"] = n;
  json gens = json::array();
  for (const auto& g : generators) gens.push_back(g.label());
  j["generators"] = std::move(gens);
  j["dim"] = graph.size();
  json basis = json::array();
  for (const auto& p : graph.basis().sorted()) basis.push_back(p.label());
  j["basis"] = std::move(basis);
  j["edges"] = graph.edge_count();
  j["p"] = dec.p;
  j["q"] = dec.q;
  j["r"] = dec.r;
  j["v"] = dec.v;
  j["w"] = dec.w;
  const auto label = [&](std::size_t i) { return graph.node(i).label(); };
  json singles = json::array();
  for (auto i : dec.singletons) singles.push_back(label(i));
  j["singletons"] = std::move(singles);
  json comps = json::array();
  for (const auto& comp : dec.multi) {
    json classes = json::array();
    for (const auto& cls : comp.classes) {
      json c;
      c["commuting"] = json::array();
      c["anticommuting"] = json::array();
      for (auto i : cls.commuting) c["commuting"].push_back(label(i));
      for (auto i : cls.anticommuting) c["anticommuting"].push_back(label(i));
      classes.push_back(std::move(c));
    }
    comps.push_back({{"size", comp.nodes.size()}, {"classes", std::move(classes)}});
  }
  j["components"] = std::move(comps);
  if (f_eff) {
    const auto verdict = tradeoff_verdict(static_cast<std::int64_t>(graph.size()), *f_eff, n);
    j["f_eff"] = rational_str(*f_eff);
    j["tradeoff"] = {{"upper_ok", verdict.upper_ok},
                     {"lower_ok", verdict.lower_ok},
                     {"saturated", verdict.saturated},
                     {"upper_bound", verdict.upper_bound}};
  }
  return j;
}

std::string train_csv(std::span<const TrainRecord> records, bool with_accuracy,
                      std::optional<std::uint64_t> seed, bool header) {
  std::ostringstream os;
  if (header) {
    if (seed) os << "seed,";
    os << "step,cumulative_shots,train_loss,test_loss";
    if (with_accuracy) os << ",test_accuracy";
    os << '\n';
  }
  for (const auto& r : records) {
    if (seed) os << *seed << ',';
    os << r.step << ',' << r.cumulative_shots << ',' << fmt(r.train_loss) << ','
       << fmt(r.test_loss);
    if (with_accuracy) os << ',' << (r.test_accuracy ? fmt(*r.test_accuracy) : "");
    os << '\n';
  }
  return os.str();
}

std::string scan_csv(std::span<const ScanRecord> records) {
  std::ostringstream os;
  os << "ansatz,n,L,variance,variance_se,mean,samples\n";
  for (const auto& r : records) {
    os << to_string(r.kind) << ',' << r.n << ',' << r.num_params << ',' << fmt(r.variance) << ','
       << fmt(r.variance_se) << ',' << fmt(r.mean) << ',' << r.samples << '\n';
  }
  return os.str();
}

std::string feff_csv(AnsatzKind kind, int n, std::span<const FeffPoint> points) {
  const auto deep = deep_limit_estimates(points);
  std::ostringstream os;
  os << "ansatz,n,L,min_M,f_eff,mode,samples,f_eff_finite,estimator\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    const Rational shown = deep[i] ? *deep[i] : p.f_eff;
    os << to_string(kind) << ',' << n << ',' << p.num_params << ',' << p.min_m << ','
       << fmt(shown.value()) << ',' << to_string(p.mode) << ',' << p.samples << ','
       << fmt(p.f_eff.value()) << ',' << (deep[i] ? "slope" : "ratio") << '\n';
  }
  return os.str();
}

void atomic_write(const std::filesystem::path& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ResourceError("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw ResourceError("write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw ResourceError("cannot move output into place at " + path.string());
  }
}

}  // namespace qdla
