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

#ifndef SYMDOC_PIPELINE_H_
#define SYMDOC_PIPELINE_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "symdoc/parallel.h"
#include "symdoc/sitegen.h"
#include "symdoc/xref.h"

namespace symdoc {

struct BuildConfig {
  std::filesystem::path input_dir;
  std::filesystem::path output_dir;
  std::string external_base_url{kDefaultExternalBaseUrl};
  std::string site_title = "Symbol Reference";
  unsigned jobs = DefaultJobs();
  bool recursive = false;
  bool dump_graph = false;
};

// Throws ConfigError: jobs must be positive and the input and output
// directories must differ.
void ValidateBuildConfig(const BuildConfig& config);

struct StageTiming {
  std::string stage;  // ingest, xref, searchindex, sitegen
  double milliseconds = 0.0;
};

struct BuildResult {
  StatsReport stats;
  std::size_t articles = 0;
  std::size_t files_written = 0;
  std::vector<std::string> warnings;
  std::vector<StageTiming> timings;
  std::filesystem::path manifest_path;
};

// Debug dump written by --dump-graph, next to the site but outside its
// manifest.
inline constexpr std::string_view kGraphDumpFileName = "graph.json";

// {"edges":[[src,dst],...],"external":[[src,anchor],...],"symbols":[...]}
// with object keys sorted.
std::string DumpGraphJson(const CrossRefGraph& graph);

// ingest -> xref -> searchindex -> sitegen. Throws ConfigError,
// CorpusEmptyError, IoWriteError or DuplicateSymbolError.
BuildResult RunBuild(const BuildConfig& config);

std::string SummaryText(const BuildResult& result);
std::string SummaryJson(const BuildResult& result);

}  // namespace symdoc

#endif  // SYMDOC_PIPELINE_H_
