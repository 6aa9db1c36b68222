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

#include "test_support.h"

#include <openssl/sha.h>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace symdoc::testing {
namespace fs = std::filesystem;

TempDir::TempDir() {
  static std::atomic<unsigned> counter{0};
  std::random_device rd;
  path_ = fs::temp_directory_path() /
          ("symdoc-test-" + std::to_string(rd()) + "-" +
           std::to_string(counter++));
  fs::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::permissions(path_, fs::perms::owner_all, fs::perm_options::add, ec);
  fs::remove_all(path_, ec);
}

std::string ReadText(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteText(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

std::map<std::string, std::string> ReadTree(const fs::path& root) {
  std::map<std::string, std::string> tree;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (!e.is_regular_file()) continue;
    tree[fs::relative(e.path(), root).generic_string()] = ReadText(e.path());
  }
  return tree;
}

namespace {

std::string DecodeBasicEntities(std::string s) {
  static const std::pair<const char*, const char*> kMap[] = {
      {"&lt;", "<"}, {"&gt;", ">"}, {"&quot;", "\""}, {"&#39;", "'"},
      {"&amp;", "&"}};
  for (const auto& [from, to] : kMap) {
    std::string out;
    std::size_t pos = 0, hit;
    std::string f = from;
    while ((hit = s.find(f, pos)) != std::string::npos) {
      out.append(s, pos, hit - pos);
      out += to;
      pos = hit + f.size();
    }
    out.append(s, pos);
    s = std::move(out);
  }
  return s;
}

}  // namespace

std::vector<AnchorTag> ScanAnchorTags(const std::string& html) {
  static const std::regex kTag(R"(<a(\s+[^<>]*)?>)", std::regex::icase);
  static const std::regex kAttr(
      R"re(([A-Za-z_:][-A-Za-z0-9_:.]*)\s*=\s*"([^"]*)")re");
  std::vector<AnchorTag> tags;
  for (auto it = std::sregex_iterator(html.begin(), html.end(), kTag);
       it != std::sregex_iterator(); ++it) {
    AnchorTag tag;
    tag.offset = static_cast<std::size_t>(it->position(0));
    tag.raw = it->str(0);
    std::string attrs = it->str(1);
    for (auto a = std::sregex_iterator(attrs.begin(), attrs.end(), kAttr);
         a != std::sregex_iterator(); ++a) {
      std::string name = a->str(1);
      std::transform(name.begin(), name.end(), name.begin(),
                     [](unsigned char c) { return std::tolower(c); });
      tag.attrs.emplace(name, DecodeBasicEntities(a->str(2)));
    }
    tags.push_back(std::move(tag));
  }
  return tags;
}

GroundTruth LoadGroundTruth(const fs::path& manifest_path) {
  auto doc = nlohmann::json::parse(ReadText(manifest_path));
  GroundTruth t;
  t.articles = doc.at("articles").size();
  for (const auto& s : doc.at("symbols")) {
    t.symbols.push_back({s.at("id"), s.at("name"), s.at("kind"),
                         s.at("article")});
  }
  for (const auto& [k, v] : doc.at("totals").at("per_kind").items()) {
    t.per_kind[k] = v.get<std::size_t>();
  }
  for (const auto& e : doc.at("edges")) t.edges.emplace(e.at(0), e.at(1));
  for (const auto& e : doc.at("external")) t.external.emplace(e.at(0), e.at(1));
  return t;
}

std::map<std::string, std::vector<std::string>> BruteForceReferrers(
    const GroundTruth& truth) {
  std::map<std::string, const GroundSymbol*> by_id;
  for (const auto& s : truth.symbols) by_id[s.id] = &s;
  std::map<std::string, std::vector<std::string>> out;
  for (const auto& target : truth.symbols) {
    std::vector<std::string> refs;
    for (const auto& source : truth.symbols) {
      if (truth.edges.count({source.id, target.id})) refs.push_back(source.id);
    }
    std::sort(refs.begin(), refs.end(), [&](const auto& a, const auto& b) {
      const GroundSymbol& x = *by_id.at(a);
      const GroundSymbol& y = *by_id.at(b);
      return std::tie(x.article, x.name, x.id) <
             std::tie(y.article, y.name, y.id);
    });
    out[target.id] = std::move(refs);
  }
  return out;
}

std::vector<std::string> RenderedReferrers(const std::string& page_html) {
  std::size_t section = page_html.find("<section class=\"referrers\">");
  if (section == std::string::npos) return {};
  std::size_t end = page_html.find("</section>", section);
  std::string body = page_html.substr(section, end - section);
  std::vector<std::string> ids;
  for (const auto& tag : ScanAnchorTags(body)) {
    auto it = tag.attrs.find("data-id");
    if (it != tag.attrs.end()) ids.push_back(it->second);
  }
  return ids;
}

LinkWalk WalkSiteLinks(const fs::path& site_root, const std::string& base_url) {
  LinkWalk walk;
  for (const auto& e : fs::recursive_directory_iterator(site_root)) {
    if (!e.is_regular_file() || e.path().extension() != ".html") continue;
    std::string html = ReadText(e.path());
    for (const auto& tag : ScanAnchorTags(html)) {
      auto cls = tag.attrs.find("class");
      auto href = tag.attrs.find("href");
      if (cls == tag.attrs.end() || href == tag.attrs.end()) continue;
      if (cls->second == "int") {
        ++walk.internal;
        std::string target = href->second.substr(0, href->second.find('#'));
        fs::path resolved = (e.path().parent_path() / target).lexically_normal();
        bool inside = !fs::relative(resolved, site_root).string().starts_with("..");
        if (target.empty() || !inside || !fs::is_regular_file(resolved)) {
          ++walk.internal_dangling;
          walk.problems.push_back(e.path().string() + ": " + href->second);
        }
      } else if (cls->second == "ext") {
        ++walk.external;
        if (!href->second.starts_with(base_url)) {
          ++walk.external_bad_base;
          walk.problems.push_back(e.path().string() + ": " + href->second);
        }
      }
    }
  }
  return walk;
}

bool BruteForceMatch(const std::string& name, const std::string& query) {
  auto lower = [](std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
  };
  std::string hay = lower(name);
  std::istringstream words(lower(query));
  std::string w;
  while (words >> w) {
    if (hay.find(w) == std::string::npos) return false;
  }
  return true;
}

std::string AsciiUpper(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

std::string RandomQuery(std::mt19937_64& rng,
                        const std::vector<std::string>& names) {
  static const std::string kAlphabet = "abcdefghijklmnopqrstuvwxyz_";
  std::uniform_int_distribution<int> word_count(0, 4);
  int n = word_count(rng);
  std::string q;
  if (rng() % 8 == 0) q += "  ";
  for (int i = 0; i < n; ++i) {
    std::string w;
    if (!names.empty() && rng() % 4 != 0) {
      const std::string& name = names[rng() % names.size()];
      std::size_t start = rng() % name.size();
      std::size_t len = 1 + rng() % 4;
      w = name.substr(start, len);
    } else {
      std::size_t len = 1 + rng() % 3;
      for (std::size_t k = 0; k < len; ++k) w += kAlphabet[rng() % kAlphabet.size()];
    }
    if (rng() % 3 == 0) w = AsciiUpper(w);
    bool blank = false;
    for (char c : w) blank |= (c == ' ' || c == '\t');
    if (blank || w.empty()) continue;
    if (!q.empty()) q += rng() % 5 == 0 ? "\t " : " ";
    q += w;
  }
  return q;
}

std::string OracleSha256(const std::string& bytes) {
  unsigned char md[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size(), md);
  static const char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned char b : md) {
    out += kHex[b >> 4];
    out += kHex[b & 15];
  }
  return out;
}

}  // namespace symdoc::testing
