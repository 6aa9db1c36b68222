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

// Shared fixtures and independent oracles for the test suites. Nothing here
// calls into the library under test except where noted.

#ifndef SYMDOC_TESTS_SUPPORT_TEST_SUPPORT_H_
#define SYMDOC_TESTS_SUPPORT_TEST_SUPPORT_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace symdoc::testing {

// Unique scratch directory removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& rel) const {
    return path_ / rel;
  }

 private:
  std::filesystem::path path_;
};

std::string ReadText(const std::filesystem::path& path);
void WriteText(const std::filesystem::path& path, const std::string& text);

// Every regular file under `root`, keyed by generic relative path.
std::map<std::string, std::string> ReadTree(const std::filesystem::path& root);

// One `<a ...>` start tag found by a regular-expression scan.
struct AnchorTag {
  std::size_t offset = 0;
  std::string raw;
  std::map<std::string, std::string> attrs;  // entity-decoded values
};

// Independent scan for anchor start tags; quoted attribute values only.
std::vector<AnchorTag> ScanAnchorTags(const std::string& html);

// Ground truth written by the corpus synthesizer, read with a generic JSON
// parser.
struct GroundSymbol {
  std::string id;
  std::string name;
  std::string kind;
  std::string article;
};

struct GroundTruth {
  std::size_t articles = 0;
  std::vector<GroundSymbol> symbols;
  std::map<std::string, std::size_t> per_kind;
  std::set<std::pair<std::string, std::string>> edges;
  std::set<std::pair<std::string, std::string>> external;
};

GroundTruth LoadGroundTruth(const std::filesystem::path& manifest_path);

// Reverse scan: for every symbol, all sources with an edge into it, ordered
// by (article, name, id).
std::map<std::string, std::vector<std::string>> BruteForceReferrers(
    const GroundTruth& truth);

// Referrer ids in page order, read from the data-id attributes of the
// rendered referrer list.
std::vector<std::string> RenderedReferrers(const std::string& page_html);

struct LinkWalk {
  std::size_t internal = 0;
  std::size_t internal_dangling = 0;
  std::size_t external = 0;
  std::size_t external_bad_base = 0;
  std::vector<std::string> problems;
};

// Follows every class="int" / class="ext" href in every HTML file of a
// rendered site.
LinkWalk WalkSiteLinks(const std::filesystem::path& site_root,
                       const std::string& base_url);

// Reference search semantics: split on blanks, lowercase, all words must be
// substrings. Works on ASCII names.
bool BruteForceMatch(const std::string& name, const std::string& query);

std::string AsciiUpper(std::string s);

// Random query of 0..4 words drawn from fragments of `names`.
std::string RandomQuery(std::mt19937_64& rng,
                        const std::vector<std::string>& names);

// Hex SHA-256 from OpenSSL's one-shot API.
std::string OracleSha256(const std::string& bytes);

}  // namespace symdoc::testing

#endif  // SYMDOC_TESTS_SUPPORT_TEST_SUPPORT_H_
