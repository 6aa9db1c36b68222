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

// symdoc command-line driver.
//
//   symdoc build --input DIR --output DIR [--base-url URL] [--jobs N]
//                [--recursive] [--dump-graph] [--json-summary]
//   symdoc synth --articles N --symbols N --density F --external F --seed S
//                --output DIR
//   symdoc query --table FILE -- QUERY...
//
// Exit status: 0 success, 1 empty corpus, 2 any other failure.

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symdoc/symdoc.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCorpusEmpty = 1;
constexpr int kExitFailure = 2;

int ReportFailure(const char* command, symdoc_status status) {
  std::fprintf(stderr, "symdoc %s: %s: %s\n", command,
               symdoc_status_name(status), symdoc_last_error());
  return status == SYMDOC_ERR_CORPUS_EMPTY ? kExitCorpusEmpty : kExitFailure;
}

struct BuildArgs {
  std::string input;
  std::string output;
  std::string base_url;
  unsigned jobs = 0;
  bool recursive = false;
  bool dump_graph = false;
  bool json_summary = false;
};

int RunBuild(const BuildArgs& args) {
  symdoc_build_options options;
  symdoc_build_options_init(&options);
  options.input_dir = args.input.c_str();
  options.output_dir = args.output.c_str();
  if (!args.base_url.empty()) options.base_url = args.base_url.c_str();
  options.jobs = args.jobs;
  options.recursive = args.recursive;
  options.dump_graph = args.dump_graph;

  symdoc_build_report* report = nullptr;
  symdoc_status status = symdoc_build(&options, &report);
  if (status != SYMDOC_OK) return ReportFailure("build", status);
  std::size_t warnings = symdoc_build_report_warning_count(report);
  for (std::size_t i = 0; i < warnings; ++i) {
    std::fprintf(stderr, "warning: %s\n", symdoc_build_report_warning(report, i));
  }
  std::fputs(args.json_summary ? symdoc_build_report_summary_json(report)
                               : symdoc_build_report_summary_text(report),
             stdout);
  symdoc_build_report_free(report);
  return kExitOk;
}

struct SynthArgs {
  std::uint32_t articles = 0;
  std::uint32_t symbols = 0;
  double density = 0.0;
  double external = 0.0;
  std::uint64_t seed = 0;
  std::string output;
};

int RunSynth(const SynthArgs& args) {
  symdoc_synth_options options{args.articles, args.symbols,  args.density,
                               args.external, args.seed,     args.output.c_str()};
  symdoc_synth_totals totals{};
  symdoc_status status = symdoc_synthesize(&options, &totals);
  if (status != SYMDOC_OK) return ReportFailure("synth", status);
  std::printf("symbols: %zu\n", totals.symbols);
  for (int k = 0; k < SYMDOC_KIND_COUNT; ++k) {
    std::printf("  %s: %zu\n", symdoc_kind_code(static_cast<symdoc_kind>(k)),
                totals.per_kind[k]);
  }
  std::printf("edges: %zu\nexternal refs: %zu\n", totals.edges,
              totals.external_refs);
  return kExitOk;
}

int RunQuery(const std::string& table_path,
             const std::vector<std::string>& words) {
  std::string query;
  for (const auto& w : words) {
    if (!query.empty()) query += ' ';
    query += w;
  }
  symdoc_table* table = nullptr;
  symdoc_status status = symdoc_table_load(table_path.c_str(), &table);
  if (status != SYMDOC_OK) return ReportFailure("query", status);
  symdoc_matches* matches = nullptr;
  status = symdoc_table_query(table, query.c_str(), &matches);
  if (status != SYMDOC_OK) {
    symdoc_table_free(table);
    return ReportFailure("query", status);
  }
  std::size_t n = symdoc_matches_size(matches);
  for (std::size_t i = 0; i < n; ++i) {
    symdoc_entry_view e;
    symdoc_matches_entry(matches, i, &e);
    std::printf("%s\t%s\t%s\n", e.id, e.name, e.kind);
  }
  symdoc_matches_free(matches);
  symdoc_table_free(table);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symdoc: symbol reference site generator"};
  app.set_version_flag("--version", std::string(symdoc_version()));
  app.require_subcommand(1);

  BuildArgs build;
  CLI::App* build_cmd = app.add_subcommand("build", "Generate the site");
  build_cmd->add_option("--input", build.input, "Corpus directory")->required();
  build_cmd->add_option("--output", build.output, "Site directory")->required();
  build_cmd->add_option("--base-url", build.base_url,
                        "Base URL for links outside the corpus");
  build_cmd->add_option("--jobs", build.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  build_cmd->add_flag("--recursive", build.recursive,
                      "Descend into subdirectories");
  build_cmd->add_flag("--dump-graph", build.dump_graph,
                      "Also write graph.json");
  build_cmd->add_flag("--json-summary", build.json_summary,
                      "Print the summary as JSON");

  SynthArgs synth;
  CLI::App* synth_cmd = app.add_subcommand("synth", "Generate a test corpus");
  synth_cmd->add_option("--articles", synth.articles)->required();
  synth_cmd->add_option("--symbols", synth.symbols)->required();
  synth_cmd->add_option("--density", synth.density)->required();
  synth_cmd->add_option("--external", synth.external)->required();
  synth_cmd->add_option("--seed", synth.seed)->required();
  synth_cmd->add_option("--output", synth.output)->required();

  std::string table_path;
  std::vector<std::string> words;
  CLI::App* query_cmd = app.add_subcommand("query", "Search a search table");
  query_cmd->add_option("--table", table_path, "search-table.json")->required();
  query_cmd->add_option("query", words, "Query words");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitFailure;
  }

  if (*build_cmd) return RunBuild(build);
  if (*synth_cmd) return RunSynth(synth);
  return RunQuery(table_path, words);
}
