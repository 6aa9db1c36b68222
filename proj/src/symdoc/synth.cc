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

#include "symdoc/synth.h"

#include <algorithm>
#include <limits>
#include <random>
#include <set>

#include "json.hpp"
#include "symdoc/errors.h"
#include "symdoc/file_io.h"
#include "symdoc/text.h"

namespace symdoc {
namespace {

// std::uniform_*_distribution differ between standard libraries; these
// mappings keep corpora identical everywhere for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Below(std::uint64_t n) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % n;
  }

  double Unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool Chance(double p) { return Unit() < p; }

 private:
  std::mt19937_64 engine_;
};

constexpr std::array<std::string_view, 48> kWords = {
    "closed",   "open",     "Closure",  "Element",  "Subset",   "union",
    "Function", "compact",  "Relation", "Nat",      "Real",     "Point",
    "Segment",  "convex",   "empty",    "finite",   "Matrix",   "Group",
    "Ring",     "Field",    "Vector",   "Space",    "continuous", "bounded",
    "dense",    "prime",    "even",     "odd",      "Sequence", "Interval",
    "Ordinal",  "Cardinal", "Tree",     "Graph",    "Lattice",  "Ideal",
    "Filter",   "Morphism", "Category", "Functor",  "Topology", "metric",
    "Norm",     "Complex",  "Integer",  "Rational", "Polynomial", "Module"};

constexpr std::array<std::string_view, 12> kOperators = {
    "<=", "[:", ":]", "+", "*", "-->", "\\/", "/\\", "c=", "meets", "&", "\""};

constexpr std::array<char, kSymbolKindCount> kFragmentPrefix = {'R', 'M', 'L',
                                                                'K', 'V'};

constexpr std::array<std::string_view, 6> kFiller = {
    "let x be set;",  "assume x in X;", "thus thesis;",
    "for y holds y c= x;", "means :Def1:", "coherence;"};

struct Symbol {
  std::string article;
  std::string fragment;
  std::string name;
  SymbolKind kind;
  std::string id;
};

struct Link {
  std::string article;  // target article as written (before lowercasing)
  std::string fragment;
  std::string text;
};

std::string ArticleStem(std::uint32_t index, std::uint32_t count) {
  std::string digits = std::to_string(index + 1);
  std::size_t width = std::max<std::size_t>(4, std::to_string(count).size());
  return "art" + std::string(width - digits.size(), '0') + digits;
}

std::string MakeName(Rng& rng) {
  std::uint64_t roll = rng.Below(10);
  if (roll == 0) return std::string(kOperators[rng.Below(kOperators.size())]);
  std::string name(kWords[rng.Below(kWords.size())]);
  if (roll <= 3) {
    name += "_";
    name += kWords[rng.Below(kWords.size())];
  }
  return name;
}

std::string Href(const Link& link, const std::string& current) {
  if (link.article == current) return "#" + link.fragment;
  return link.article + ".html#" + link.fragment;
}

}  // namespace

void ValidateSynthesisSpec(const SynthesisSpec& spec) {
  if (spec.articles == 0) throw ConfigError("articles must be positive");
  if (spec.symbols_total < spec.articles) {
    throw ConfigError("symbols must be at least the number of articles");
  }
  auto fraction = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!fraction(spec.edge_density)) {
    throw ConfigError("edge density must lie in [0, 1]");
  }
  if (!fraction(spec.external_fraction)) {
    throw ConfigError("external fraction must lie in [0, 1]");
  }
}

std::string SerializeSynthesisManifest(const SynthesisManifest& m) {
  nlohmann::json doc;
  doc["version"] = 1;
  doc["spec"] = {{"articles", m.spec.articles},
                 {"symbols", m.spec.symbols_total},
                 {"density", m.spec.edge_density},
                 {"external", m.spec.external_fraction},
                 {"seed", m.spec.seed}};
  nlohmann::json per_kind = nlohmann::json::object();
  for (SymbolKind k : kAllSymbolKinds) {
    per_kind[std::string(KindCode(k))] = m.per_kind[KindIndex(k)];
  }
  doc["totals"] = {{"symbols", m.symbols.size()},
                   {"per_kind", per_kind},
                   {"edges", m.edges.size()},
                   {"external_refs", m.external.size()}};
  doc["articles"] = m.articles;
  nlohmann::json symbols = nlohmann::json::array();
  for (const auto& s : m.symbols) {
    symbols.push_back({{"id", s.id},
                       {"name", s.name},
                       {"kind", std::string(KindCode(s.kind))},
                       {"article", s.article}});
  }
  doc["symbols"] = std::move(symbols);
  doc["edges"] = m.edges;
  doc["external"] = m.external;
  return doc.dump(1, ' ', false, nlohmann::json::error_handler_t::replace) +
         "\n";
}

SynthesisManifest SynthesizeCorpus(const SynthesisSpec& spec,
                                   const std::filesystem::path& out_dir) {
  ValidateSynthesisSpec(spec);
  Rng rng(spec.seed);

  std::vector<std::string> stems;
  stems.reserve(spec.articles);
  for (std::uint32_t a = 0; a < spec.articles; ++a) {
    stems.push_back(ArticleStem(a, spec.articles));
  }
  std::vector<std::uint32_t> counts(spec.articles, 1);
  for (std::uint32_t r = spec.articles; r < spec.symbols_total; ++r) {
    ++counts[rng.Below(spec.articles)];
  }

  std::vector<Symbol> symbols;
  std::vector<std::size_t> first_of_article;
  symbols.reserve(spec.symbols_total);
  for (std::uint32_t a = 0; a < spec.articles; ++a) {
    first_of_article.push_back(symbols.size());
    std::array<int, kSymbolKindCount> per_kind_counter{};
    for (std::uint32_t j = 0; j < counts[a]; ++j) {
      SymbolKind kind = kAllSymbolKinds[rng.Below(kSymbolKindCount)];
      std::size_t k = KindIndex(kind);
      std::string fragment =
          kFragmentPrefix[k] + std::to_string(++per_kind_counter[k]);
      std::string name = MakeName(rng);
      std::string id = stems[a] + "#" + fragment;
      symbols.push_back({stems[a], std::move(fragment), std::move(name), kind,
                         std::move(id)});
    }
  }
  first_of_article.push_back(symbols.size());

  SynthesisManifest manifest;
  manifest.spec = spec;
  manifest.articles = stems;
  std::set<std::pair<std::string, std::string>> edges;
  std::set<std::pair<std::string, std::string>> external;

  // Article names in hrefs are case-insensitive; exercise that.
  auto spell = [&](std::string article) {
    if (rng.Chance(0.1)) article[0] = static_cast<char>(article[0] - 'a' + 'A');
    return article;
  };

  std::vector<std::vector<Link>> links(symbols.size());
  for (std::size_t s = 0; s < symbols.size(); ++s) {
    for (int slot = 0; slot < kLinkSlotsPerSymbol; ++slot) {
      if (!rng.Chance(spec.edge_density)) continue;
      if (rng.Chance(spec.external_fraction)) {
        Link link;
        if (rng.Chance(0.5)) {
          link.article = stems[rng.Below(stems.size())];
          link.fragment = "X" + std::to_string(rng.Below(50) + 1);
        } else {
          link.article = "ext" + std::to_string(rng.Below(100) + 1);
          link.fragment = "K" + std::to_string(rng.Below(50) + 1);
        }
        link.text = "ext";
        external.emplace(symbols[s].id, link.article + "#" + link.fragment);
        if (link.article != symbols[s].article) {
          link.article = spell(link.article);
        }
        links[s].push_back(std::move(link));
        continue;
      }
      const Symbol& target = symbols[rng.Below(symbols.size())];
      if (target.id != symbols[s].id) edges.emplace(symbols[s].id, target.id);
      Link link{target.article, target.fragment, target.name};
      if (link.article != symbols[s].article) {
        link.article = spell(link.article);
      }
      links[s].push_back(std::move(link));
    }
  }

  CreateDirectories(out_dir);
  for (std::uint32_t a = 0; a < spec.articles; ++a) {
    const std::string& stem = stems[a];
    std::string html;
    html += "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n";
    html += "<title>" + stem + "</title>\n</head>\n<body>\n";
    html += "<h1>" + stem + "</h1>\n";
    for (std::size_t s = first_of_article[a]; s < first_of_article[a + 1];
         ++s) {
      const Symbol& sym = symbols[s];
      std::string name = EscapeHtml(sym.name);
      html += "<div class=\"def\">\n<p class=\"kw\">definition</p>\n";
      html += "<a id=\"" + sym.fragment + "\" data-sym-kind=\"" +
              std::string(KindCode(sym.kind)) + "\" data-sym-name=\"" + name +
              "\">" + name + "</a>\n<pre>";
      html += kFiller[rng.Below(kFiller.size())];
      for (const auto& link : links[s]) {
        html += " <a href=\"" + Href(link, stem) + "\">" +
                EscapeHtml(link.text) + "</a>";
      }
      html += "\n";
      html += kFiller[rng.Below(kFiller.size())];
      html += "</pre>\n</div>\n";
      if (spec.edge_density > 0.0 && rng.Chance(spec.edge_density)) {
        const Symbol& target = symbols[rng.Below(symbols.size())];
        Link link{target.article, target.fragment, target.name};
        html += "<div class=\"thm\"><p>theorem</p><pre>" +
                std::string(kFiller[rng.Below(kFiller.size())]) +
                " <a href=\"" + Href(link, stem) + "\">" +
                EscapeHtml(link.text) + "</a></pre></div>\n";
      }
    }
    html += "</body>\n</html>\n";
    WriteFile(out_dir / (stem + ".html"), html);
  }

  for (const auto& s : symbols) {
    manifest.symbols.push_back({s.id, s.name, s.kind, s.article});
    ++manifest.per_kind[KindIndex(s.kind)];
  }
  std::sort(manifest.symbols.begin(), manifest.symbols.end(),
            [](const SynthSymbol& a, const SynthSymbol& b) {
              return a.id < b.id;
            });
  manifest.edges.assign(edges.begin(), edges.end());
  manifest.external.assign(external.begin(), external.end());
  WriteFile(out_dir / std::string(kSynthManifestFileName),
            SerializeSynthesisManifest(manifest));
  return manifest;
}

}  // namespace symdoc
