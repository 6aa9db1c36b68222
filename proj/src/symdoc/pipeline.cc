// Copyright 2026 The symdoc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "symdoc/pipeline.h"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "symdoc/errors.h"
#include "symdoc/file_io.h"
#include "symdoc/ingest.h"
#include "symdoc/search_index.h"

namespace symdoc {
namespace {

class StageClock {
 public:
  explicit StageClock(std::vector<StageTiming>* out) : out_(out) {}

  void Lap(std::string stage) {
    auto now = std::chrono::steady_clock::now();
    std::chrono::duration<double, std::milli> ms = now - last_;
    out_->push_back({std::move(stage), ms.count()});
    last_ = now;
  }

 private:
  std::vector<StageTiming>* out_;
  std::chrono::steady_clock::time_point last_ =
      std::chrono::steady_clock::now();
};

bool SameDirectory(const std::filesystem::path& a,
                   const std::filesystem::path& b) {
  std::error_code ec;
  auto ca = std::filesystem::weakly_canonical(a, ec);
  if (ec) return false;
  auto cb = std::filesystem::weakly_canonical(b, ec);
  if (ec) return false;
  return ca == cb;
}

}  // namespace

void ValidateBuildConfig(const BuildConfig& config) {
  if (config.jobs == 0) throw ConfigError("jobs must be at least 1");
  if (config.input_dir.empty()) throw ConfigError("input directory not set");
  if (config.output_dir.empty()) throw ConfigError("output directory not set");
  if (SameDirectory(config.input_dir, config.output_dir)) {
    throw ConfigError("input and output directories must differ");
  }
}

std::string DumpGraphJson(const CrossRefGraph& graph) {
  nlohmann::json symbols = nlohmann::json::array();
  nlohmann::json edges = nlohmann::json::array();
  nlohmann::json external = nlohmann::json::array();
  for (const auto& [id, r] : graph.symbols()) {
    symbols.push_back({{"id", id.str()},
                       {"name", r.name},
                       {"kind", std::string(KindCode(r.kind))},
                       {"article", r.article}});
    for (const auto& dst : r.out_refs) edges.push_back({id.str(), dst.str()});
    for (const auto& ext : r.external_refs) {
      external.push_back({id.str(), ext.Canonical()});
    }
  }
  nlohmann::json doc;
  doc["symbols"] = std::move(symbols);
  doc["edges"] = std::move(edges);
  doc["external"] = std::move(external);
  return doc.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

BuildResult RunBuild(const BuildConfig& config) {
  ValidateBuildConfig(config);
  SiteConfig site{config.output_dir, config.external_base_url,
                  config.site_title};
  ValidateSiteConfig(site);

  BuildResult result;
  StageClock clock(&result.timings);

  CorpusScan scan = ScanCorpus(config.input_dir, {config.recursive, config.jobs});
  result.articles = scan.documents.size();
  result.warnings = std::move(scan.warnings);
  for (const auto& doc : scan.documents) {
    for (const auto& w : doc.warnings) {
      result.warnings.push_back(doc.article + ".html:" +
                                std::to_string(w.offset) + ": " + w.message);
    }
  }
  clock.Lap("ingest");

  CrossRefGraph graph = BuildGraph(scan.documents);
  scan.documents.clear();
  result.stats = GraphStats(graph);
  clock.Lap("xref");

  SearchTable table = BuildSearchTable(graph);
  clock.Lap("searchindex");

  SiteManifest manifest = RenderSite(graph, table, site, config.jobs);
  if (config.dump_graph) {
    WriteFile(config.output_dir / std::string(kGraphDumpFileName),
              DumpGraphJson(graph));
  }
  for (auto& w : manifest.warnings) result.warnings.push_back(std::move(w));
  result.files_written = manifest.files.size();
  result.manifest_path = config.output_dir / std::string(kManifestFileName);
  clock.Lap("sitegen");
  return result;
}

std::string SummaryText(const BuildResult& r) {
  std::ostringstream os;
  const StatsReport& s = r.stats;
  os << "articles:      " << r.articles << "\n";
  os << "symbols:       " << s.symbols << "\n";
  for (SymbolKind k : kAllSymbolKinds) {
    os << "  " << KindLabel(k) << ": " << s.per_kind[KindIndex(k)] << "\n";
  }
  os << "edges:         " << s.edges << "\n";
  os << "external refs: " << s.external_refs << "\n";
  char mean[32];
  std::snprintf(mean, sizeof mean, "%.3f", s.mean_referrers);
  os << "referrers:     max " << s.max_referrers << ", mean " << mean << "\n";
  os << "links:         " << s.links.total << " (internal " << s.links.internal
     << ", external " << s.links.external << ", self " << s.links.self
     << ", outside definitions " << s.links.outside_definitions << ")\n";
  os << "warnings:      " << r.warnings.size() << "\n";
  os << "files:         " << r.files_written << "\n";
  double total = 0;
  for (const auto& t : r.timings) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.1f", t.milliseconds);
    os << "time " << t.stage << ": " << ms << " ms\n";
    total += t.milliseconds;
  }
  char ms[32];
  std::snprintf(ms, sizeof ms, "%.1f", total);
  os << "time total: " << ms << " ms\n";
  os << "manifest:      " << r.manifest_path.string() << "\n";
  return os.str();
}

std::string SummaryJson(const BuildResult& r) {
  const StatsReport& s = r.stats;
  nlohmann::ordered_json per_kind;
  for (SymbolKind k : kAllSymbolKinds) {
    per_kind[std::string(KindCode(k))] = s.per_kind[KindIndex(k)];
  }
  nlohmann::ordered_json timings;
  for (const auto& t : r.timings) timings[t.stage] = t.milliseconds;
  nlohmann::ordered_json doc;
  doc["articles"] = r.articles;
  doc["symbols"] = s.symbols;
  doc["per_kind"] = per_kind;
  doc["edges"] = s.edges;
  doc["external_refs"] = s.external_refs;
  doc["max_referrers"] = s.max_referrers;
  doc["mean_referrers"] = s.mean_referrers;
  doc["links"] = {{"total", s.links.total},
                  {"internal", s.links.internal},
                  {"external", s.links.external},
                  {"self", s.links.self},
                  {"outside_definitions", s.links.outside_definitions}};
  doc["warnings"] = r.warnings;
  doc["files"] = r.files_written;
  doc["timings_ms"] = timings;
  doc["manifest"] = r.manifest_path.string();
  return doc.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) +
         "\n";
}

}  // namespace symdoc
