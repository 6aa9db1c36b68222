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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "symdoc/errors.h"
#include "symdoc/ingest.h"
#include "symdoc/search_index.h"
#include "symdoc/synth.h"
#include "symdoc/xref.h"
#include "test_support.h"

namespace symdoc {
namespace {

SearchEntry Entry(const std::string& id, const std::string& name,
                  const std::string& norm, SymbolKind kind) {
  return {SymbolId(id), name, norm, kind, id.substr(0, id.find('#'))};
}

CrossRefGraph GraphOfNames(const std::vector<std::string>& names,
                           const std::string& article = "t") {
  std::string html;
  for (std::size_t i = 0; i < names.size(); ++i) {
    html += "<a id=\"F" + std::to_string(i) +
            "\" data-sym-kind=\"pred\" data-sym-name=\"" + names[i] + "\">x</a>";
  }
  std::vector<ArticleDocument> docs = {ParseArticle(article, html)};
  return BuildGraph(docs);
}

std::vector<std::string> Names(const std::vector<SearchEntry>& entries) {
  std::vector<std::string> out;
  for (const auto& e : entries) out.push_back(e.display_name);
  return out;
}

TEST(BuildSearchTable, EmptyGraph) {
  EXPECT_TRUE(BuildSearchTable(BuildGraph({})).entries.empty());
}

TEST(BuildSearchTable, OrderedByNormalizedName) {
  SearchTable t = BuildSearchTable(GraphOfNames({"Closure", "closed", "open"}));
  EXPECT_EQ(Names(t.entries),
            (std::vector<std::string>{"closed", "Closure", "open"}));
  EXPECT_EQ(t.entries[1].normalized_name, "closure");
}

TEST(BuildSearchTable, HomonymsKeepDistinctIds) {
  std::vector<ArticleDocument> docs = {
      ParseArticle("a", "<a id=\"K1\" data-sym-kind=\"func\" "
                        "data-sym-name=\"id\">x</a>"),
      ParseArticle("b", "<a id=\"K1\" data-sym-kind=\"func\" "
                        "data-sym-name=\"id\">x</a>")};
  SearchTable t = BuildSearchTable(BuildGraph(docs));
  ASSERT_EQ(t.entries.size(), 2u);
  EXPECT_EQ(t.entries[0].id.str(), "a#K1");
  EXPECT_EQ(t.entries[1].id.str(), "b#K1");
}

TEST(BuildSearchTable, TiesBrokenByKindThenId) {
  std::vector<ArticleDocument> docs = {ParseArticle(
      "a",
      "<a id=\"Z\" data-sym-kind=\"mode\" data-sym-name=\"x\">x</a>"
      "<a id=\"B\" data-sym-kind=\"pred\" data-sym-name=\"X\">x</a>"
      "<a id=\"A\" data-sym-kind=\"pred\" data-sym-name=\"x\">x</a>")};
  SearchTable t = BuildSearchTable(BuildGraph(docs));
  ASSERT_EQ(t.entries.size(), 3u);
  EXPECT_EQ(t.entries[0].id.str(), "a#A");
  EXPECT_EQ(t.entries[1].id.str(), "a#B");
  EXPECT_EQ(t.entries[2].id.str(), "a#Z");
}

TEST(Query, MultiWordAnd) {
  SearchTable t = BuildSearchTable(GraphOfNames({"closed", "open", "Closure"}));
  EXPECT_EQ(Names(Query(t, "clo sed")), std::vector<std::string>{"closed"});
  EXPECT_EQ(Names(Query(t, "CLO")),
            (std::vector<std::string>{"closed", "Closure"}));
  EXPECT_EQ(Names(Query(t, "")), Names(t.entries));
  EXPECT_EQ(Names(Query(t, " \t\n ")), Names(t.entries));
  EXPECT_TRUE(Query(t, "zzzzqq").empty());
}

TEST(QueryWords, SplitsOnBlankRunsAndFolds) {
  EXPECT_EQ(QueryWords("  Clo \t SED\n"),
            (std::vector<std::string>{"clo", "sed"}));
  EXPECT_TRUE(QueryWords("").empty());
}

TEST(SerializeSearchTable, EmptyTable) {
  EXPECT_EQ(SerializeSearchTable({}), "{\"version\":1,\"entries\":[]}");
}

TEST(SerializeSearchTable, OneEntryGolden) {
  SearchTable t{{Entry("xboole_0#K1", "\\/", "\\/", SymbolKind::kFunctor)}};
  EXPECT_EQ(SerializeSearchTable(t),
            "{\"version\":1,\"entries\":[{\"id\":\"xboole_0#K1\","
            "\"name\":\"\\\\/\",\"norm\":\"\\\\/\",\"kind\":\"func\","
            "\"article\":\"xboole_0\"}]}");
}

TEST(SerializeSearchTable, RoundTripsAndIsStable) {
  testing::TempDir dir;
  SearchTable t = BuildSearchTable(GraphOfNames({"B\"q", "a<b", "\xC3\x89t\xC3\xA9"}));
  EmitSearchTable(t, dir / "one.json");
  EmitSearchTable(t, dir / "two.json");
  EXPECT_EQ(testing::ReadText(dir / "one.json"),
            testing::ReadText(dir / "two.json"));
  SearchTable back = LoadSearchTable(dir / "one.json");
  EXPECT_EQ(back.entries, t.entries);
}

TEST(LoadSearchTable, RejectsMissingOrMalformedFiles) {
  testing::TempDir dir;
  EXPECT_THROW(LoadSearchTable(dir / "missing.json"), InvalidTableError);
  for (const char* bad :
       {"", "[]", "{\"version\":2,\"entries\":[]}", "{\"version\":1}",
        "{\"version\":1,\"entries\":[{\"id\":\"a#b\"}]}",
        "{\"version\":1,\"entries\":[{\"id\":\"a#b\",\"name\":\"x\","
        "\"norm\":\"x\",\"kind\":\"lemma\",\"article\":\"a\"}]}",
        "{not json"}) {
    EXPECT_THROW(ParseSearchTable(bad), InvalidTableError) << bad;
  }
}

TEST(Query, MatchesBruteForceOnSynthesizedTable) {
  testing::TempDir dir;
  SynthesizeCorpus({20, 600, 0.0, 0.0, 99}, dir.path());
  SearchTable t = BuildSearchTable(BuildGraph(ScanCorpus(dir.path()).documents));
  std::vector<std::string> names;
  for (const auto& e : t.entries) names.push_back(e.display_name);

  std::mt19937_64 rng(12345);
  for (int i = 0; i < 300; ++i) {
    std::string q = testing::RandomQuery(rng, names);
    std::vector<SearchEntry> got = Query(t, q);
    std::vector<SearchEntry> oracle;
    for (const auto& e : t.entries) {
      if (testing::BruteForceMatch(e.display_name, q)) oracle.push_back(e);
    }
    ASSERT_EQ(got, oracle) << "query: " << q;
    EXPECT_EQ(Query(t, testing::AsciiUpper(q)), got) << q;
    std::string extra = q + " " + testing::RandomQuery(rng, names);
    for (const auto& e : Query(t, extra)) {
      EXPECT_NE(std::find(got.begin(), got.end(), e), got.end()) << extra;
    }
  }
}

}  // namespace
}  // namespace symdoc
