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


#include "qdla_cli/dla_cache.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <system_error>

#include <nlohmann/json.hpp>

#include "qdla/error.hpp"
#include "qdla/io.hpp"

namespace qdla::cli {

std::string generator_key(std::span<const PauliString> generators) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  bool first = true;
  for (const auto& g : generators) {
    std::string label = (first ? "" : ",") + g.label();
    first = false;
    for (unsigned char c : label) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::optional<std::filesystem::path> cache_dir_from_env() {
  const char* dir = std::getenv("QDLA_CACHE");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::filesystem::path(dir);
}

namespace {

std::optional<DlaBasis> load_entry(const std::filesystem::path& file,
                                   std::span<const PauliString> generators) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    const auto doc = nlohmann::json::parse(in);
    const auto& gens = doc.at("generators");
    if (gens.size() != generators.size()) return std::nullopt;
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (gens[i].get<std::string>() != generators[i].label()) return std::nullopt;
    }
    DlaBasis basis;
    basis.n = doc.at("n").get<int>();
    for (const auto& label : doc.at("basis")) {
      basis.elements.push_back(PauliString::from_label(label.get<std::string>()));
    }
    return basis;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

DlaBasis cached_lie_closure(std::span<const PauliString> generators,
                            const std::optional<std::filesystem::path>& cache_dir) {
  if (!cache_dir) return lie_closure(generators);
  const auto file = *cache_dir / ("dla-" + generator_key(generators) + ".json");
  if (auto hit = load_entry(file, generators)) return *hit;

  DlaBasis basis = lie_closure(generators);
  std::error_code ec;
  std::filesystem::create_directories(*cache_dir, ec);
  nlohmann::json doc;
  doc["n"] = basis.n;
  doc["generators"] = nlohmann::json::array();
  for (const auto& g : generators) doc["generators"].push_back(g.label());
  doc["basis"] = nlohmann::json::array();
  for (const auto& p : basis.elements) doc["basis"].push_back(p.label());
  try {
    atomic_write(file, doc.dump());
  } catch (const Error&) {
    // A read-only cache only costs recomputation.
  }
  return basis;
}

}  // namespace qdla::cli
