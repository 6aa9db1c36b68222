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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "symdoc/errors.h"
#include "symdoc/ingest.h"
#include "symdoc/pipeline.h"
#include "symdoc/search_index.h"
#include "symdoc/synth.h"
#include "test_support.h"

namespace {

namespace fs = std::filesystem;
using namespace symdoc;
using symdoc::testing::GroundTruth;
using symdoc::testing::TempDir;

constexpr double kBudgetSeconds = 60.0;
constexpr char kBaseUrl[] = "http://example.org/mml/";

struct Outcome {
  bool pass = true;
  std::string detail;

  void Fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

int failures = 0;

void Report(const char* name, const Outcome& o) {
  std::printf("%s %s%s%s\n", o.pass ? "PASS" : "FAIL", name,
              o.detail.empty() ? "" : ": ", o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

// Runs `name` and turns stray exceptions into a FAIL line.
void Criterion(const char* name, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.Fail(std::string("exception: ") + e.what());
  }
  Report(name, o);
}

int RunCli(const std::string& args) {
  std::string cmd = std::string("'") + SYMDOC_CLI_PATH + "' " + args +
                    " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string StatsMismatch(const StatsReport& s, const GroundTruth& t) {
  if (s.symbols != t.symbols.size()) {
    return "symbols " + std::to_string(s.symbols) + " vs " +
           std::to_string(t.symbols.size());
  }
  for (SymbolKind k : kAllSymbolKinds) {
    std::string code(KindCode(k));
    std::size_t want = t.per_kind.count(code) ? t.per_kind.at(code) : 0;
    if (s.per_kind[KindIndex(k)] != want) return "per-kind count " + code;
  }
  if (s.edges != t.edges.size()) {
    return "edges " + std::to_string(s.edges) + " vs " +
           std::to_string(t.edges.size());
  }
  if (s.external_refs != t.external.size()) {
    return "external refs " + std::to_string(s.external_refs) + " vs " +
           std::to_string(t.external.size());
  }
  return "";
}

// Rendered referrer lists of every symbol against the reverse-scan oracle.
std::string ReferrerMismatch(const fs::path& site, const GroundTruth& t) {
  auto list = nlohmann::json::parse(
      testing::ReadText(site / "data/symbol-list.json"));
  std::map<std::string, std::string> page_of;
  for (const auto& e : list.at("entries")) page_of[e.at("id")] = e.at("page");
  auto oracle = testing::BruteForceReferrers(t);
  for (const auto& [id, refs] : oracle) {
    auto it = page_of.find(id);
    if (it == page_of.end()) return "no page for " + id;
    auto rendered = testing::RenderedReferrers(testing::ReadText(site / it->second));
    if (rendered != refs) return "referrers of " + id;
  }
  return "";
}

struct ScaleCorpus {
  TempDir root;
  fs::path corpus = root / "corpus";
  fs::path site = root / "site";
  GroundTruth truth;
};

}  // namespace

int main() {
  std::printf("symdoc acceptance run\n");
  ScaleCorpus scale;
  SynthesisSpec scale_spec{1000, 9000, 0.3, 0.1, 20260101};
  SynthesizeCorpus(scale_spec, scale.corpus);
  scale.truth = testing::LoadGroundTruth(scale.corpus / "synth-manifest.json");

  Criterion("scale-and-timing (1000 articles, 9000 symbols, density 0.3)", [&] {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    int code = RunCli("build --input '" + scale.corpus.string() +
                      "' --output '" + scale.site.string() + "' --base-url " +
                      kBaseUrl);
    std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;
    if (code != 0) o.Fail("exit code " + std::to_string(code));
    if (elapsed.count() > kBudgetSeconds) {
      o.Fail("took " + std::to_string(elapsed.count()) + " s");
    }
    BuildConfig cfg;
    cfg.input_dir = scale.corpus;
    cfg.output_dir = scale.root / "site-check";
    cfg.external_base_url = kBaseUrl;
    std::string mismatch = StatsMismatch(RunBuild(cfg).stats, scale.truth);
    if (!mismatch.empty()) o.Fail(mismatch);
    if (o.pass) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.2f s end to end", elapsed.count());
      o.detail = buf;
    }
    return o;
  });

  TempDir seeded;
  std::vector<std::pair<fs::path, GroundTruth>> sites;
  Criterion("end-to-end oracle equality (20 seeded corpora)", [&] {
    Outcome o;
    for (int i = 0; i < 20; ++i) {
      SynthesisSpec spec{static_cast<std::uint32_t>(5 + i * 3),
                         static_cast<std::uint32_t>(40 + i * 25),
                         0.8 * i / 19.0, 0.5 * ((i * 7) % 20) / 19.0,
                         static_cast<std::uint64_t>(1000 + i)};
      fs::path corpus = seeded / ("c" + std::to_string(i));
      fs::path site = seeded / ("s" + std::to_string(i));
      SynthesizeCorpus(spec, corpus);
      GroundTruth t = testing::LoadGroundTruth(corpus / "synth-manifest.json");
      BuildConfig cfg;
      cfg.input_dir = corpus;
      cfg.output_dir = site;
      cfg.external_base_url = kBaseUrl;
      std::string mismatch = StatsMismatch(RunBuild(cfg).stats, t);
      if (!mismatch.empty()) o.Fail("corpus " + std::to_string(i) + ": " + mismatch);
      sites.emplace_back(site, std::move(t));
    }
    return o;
  });

  Criterion("referrer inversion (20 seeded corpora, rendered pages)", [&] {
    Outcome o;
    if (sites.size() != 20) o.Fail("seeded corpora unavailable");
    for (std::size_t i = 0; i < sites.size(); ++i) {
      std::string mismatch = ReferrerMismatch(sites[i].first, sites[i].second);
      if (!mismatch.empty()) o.Fail("corpus " + std::to_string(i) + ": " + mismatch);
    }
    return o;
  });

  Criterion("search oracle (1000 queries, 9000 entries)", [&] {
    Outcome o;
    SearchTable table = LoadSearchTable(scale.site / "data/search-table.json");
    if (table.entries.size() != 9000) {
      o.Fail("table has " + std::to_string(table.entries.size()) + " entries");
    }
    std::vector<std::string> names;
    for (const auto& e : table.entries) names.push_back(e.display_name);
    std::mt19937_64 rng(77);
    for (int i = 0; i < 1000 && o.pass; ++i) {
      std::string q = testing::RandomQuery(rng, names);
      std::vector<SearchEntry> got = Query(table, q);
      std::vector<SearchEntry> oracle;
      for (const auto& e : table.entries) {
        if (testing::BruteForceMatch(e.display_name, q)) oracle.push_back(e);
      }
      if (got != oracle) o.Fail("oracle mismatch for \"" + q + "\"");
      if (Query(table, testing::AsciiUpper(q)) != got) {
        o.Fail("case sensitivity for \"" + q + "\"");
      }
      std::string longer = q + " " + testing::RandomQuery(rng, names);
      for (const auto& e : Query(table, longer)) {
        if (std::find(got.begin(), got.end(), e) == got.end()) {
          o.Fail("monotonicity for \"" + longer + "\"");
          break;
        }
      }
    }
    return o;
  });

  Criterion("link integrity (9000-symbol site)", [&] {
    Outcome o;
    testing::LinkWalk walk = testing::WalkSiteLinks(scale.site, kBaseUrl);
    if (walk.internal_dangling) {
      o.Fail(std::to_string(walk.internal_dangling) + " dangling: " +
             walk.problems.front());
    }
    if (walk.external_bad_base) {
      o.Fail(std::to_string(walk.external_bad_base) + " bad base: " +
             walk.problems.front());
    }
    if (walk.internal == 0 || walk.external == 0) o.Fail("no links walked");
    if (o.pass) {
      o.detail = std::to_string(walk.internal) + " int, " +
                 std::to_string(walk.external) + " ext hrefs";
    }
    return o;
  });

  Criterion("determinism (repeat build, jobs=1 vs jobs=8)", [&] {
    Outcome o;
    auto build = [&](const std::string& dir, unsigned jobs) {
      BuildConfig cfg;
      cfg.input_dir = scale.corpus;
      cfg.output_dir = scale.root / dir;
      cfg.external_base_url = kBaseUrl;
      cfg.jobs = jobs;
      RunBuild(cfg);
      return testing::ReadTree(cfg.output_dir);
    };
    auto first = build("det-a", DefaultJobs());
    auto second = build("det-b", DefaultJobs());
    auto serial = build("det-1", 1);
    auto wide = build("det-8", 8);
    auto digest = [](const std::map<std::string, std::string>& tree) {
      std::map<std::string, std::string> d;
      for (const auto& [p, bytes] : tree) d[p] = testing::OracleSha256(bytes);
      return d;
    };
    if (digest(first) != digest(second)) o.Fail("repeat builds differ");
    if (digest(serial) != digest(wide)) o.Fail("jobs=1 and jobs=8 differ");
    if (first.size() < 9000) o.Fail("tree too small");
    return o;
  });

  Criterion("robustness (100000 random inputs to the article parser)", [&] {
    Outcome o;
    std::mt19937_64 rng(4242);
    const std::string pieces[] = {
        "<a id=\"F\" data-sym-kind=\"pred\" data-sym-name=\"p\">",
        "<a id=\"G\" data-sym-kind=\"func\" data-sym-name=\"&lt;\">",
        "<div class=\"def\">", "<div>", "</div>", "<a href=\"#F\">", "</a>",
        "<a href=\"x.html#G\">", "<a href=\"bad\">", "<script>", "</script>",
        "<!--", "-->", "<!DOCTYPE html>", "\xFF", "\xE2\x82", "<", ">", "&",
        "&#x", "=\"", "'", " ", "text", "<p", "<textarea>", std::string(1, '\0')};
    std::size_t decode_errors = 0;
    for (int i = 0; i < 100000; ++i) {
      std::string bytes;
      int n = static_cast<int>(rng() % 40);
      bool structured = rng() % 2 == 0;
      for (int k = 0; k < n; ++k) {
        if (structured) {
          bytes += pieces[rng() % std::size(pieces)];
        } else {
          bytes += static_cast<char>(rng() % 256);
        }
      }
      try {
        ArticleDocument doc = ParseArticle("fuzz", bytes);
        std::size_t last = 0;
        for (const auto& d : doc.definitions) {
          if (!(d.byte_span.begin < d.byte_span.end &&
                d.byte_span.end <= bytes.size() && d.byte_span.begin >= last)) {
            o.Fail("bad definition span at input " + std::to_string(i));
          }
          last = d.byte_span.begin;
          if (d.name.empty()) o.Fail("empty name at input " + std::to_string(i));
        }
        for (const auto& l : doc.links) {
          if (l.source_span.end > bytes.size()) {
            o.Fail("bad link span at input " + std::to_string(i));
          }
          if (l.enclosing_definition &&
              std::none_of(doc.definitions.begin(), doc.definitions.end(),
                           [&](const DefinitionSite& d) {
                             return d.anchor == *l.enclosing_definition;
                           })) {
            o.Fail("dangling enclosing definition at input " + std::to_string(i));
          }
        }
      } catch (const IoDecodeError&) {
        if (!bytes.empty()) o.Fail("decode error on non-empty input");
        ++decode_errors;
      }
    }
    if (o.pass) {
      o.detail = std::to_string(decode_errors) + " empty inputs rejected";
    }
    return o;
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
