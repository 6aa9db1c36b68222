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

// Static site rendering.
//
// Output layout (paths relative to the output directory):
//
//   index.html               two-pane shell: symbol list + search, main frame
//   symbols/<slug>.html      one page per symbol
//   data/search-table.json   see search_index.h
//   data/symbol-list.json    search-table entries plus "page", by article
//   assets/...               stylesheet, script, kind icons, 404 stub
//   site-manifest.json       {"version":1,"files":[{path,bytes,sha256}]}
//
// Every byte depends only on the graph and the config, never on timing or
// the number of jobs.

#ifndef SYMDOC_SITEGEN_H_
#define SYMDOC_SITEGEN_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "symdoc/ingest.h"
#include "symdoc/search_index.h"
#include "symdoc/xref.h"

namespace symdoc {

enum class LinkClass { kInternal, kExternal };

// Internal iff the target is a symbol of the graph.
LinkClass ClassifyLink(const CrossRefGraph& graph, const AnchorId& target);

inline constexpr std::string_view kDefaultExternalBaseUrl =
    "http://mizar.org/version/current/html/";

struct SiteConfig {
  std::filesystem::path output_dir;
  std::string external_base_url{kDefaultExternalBaseUrl};
  std::string site_title = "Symbol Reference";
};

// Throws ConfigError unless external_base_url is non-empty and ends in '/'.
void ValidateSiteConfig(const SiteConfig& config);

// `<article>.<fragment>` with the fragment lowercased and every byte outside
// [a-z0-9_] replaced by '_'. Collisions get -2, -3, ... in SymbolId order.
std::map<SymbolId, std::string> AssignSlugs(const CrossRefGraph& graph);

struct RenderedPage {
  SymbolId symbol;
  std::string relative_path;  // symbols/<slug>.html
  std::string html;
};

class SiteRenderer {
 public:
  // Keeps a reference to `graph`, which must outlive the renderer.
  SiteRenderer(const CrossRefGraph& graph, SiteConfig config);

  // Throws UnknownSymbolError.
  const std::string& SlugOf(const SymbolId& id) const;
  std::string PagePath(const SymbolId& id) const;

  // Rewrites every link in a sanitized snippet owned by `article`: internal
  // targets point at ../symbols/<slug>.html with class "int", the rest at the
  // external base URL with class "ext"; both are wrapped in <b>. Links with
  // any other href are left alone and reported through `warnings`.
  std::string RewriteSnippet(std::string_view snippet,
                             std::string_view article,
                             std::vector<std::string>* warnings = nullptr) const;

  // Throws UnknownSymbolError.
  RenderedPage RenderSymbolPage(const SymbolId& id,
                                std::vector<std::string>* warnings = nullptr) const;

  std::string RenderIndex() const;
  std::string SymbolListJson() const;

  const CrossRefGraph& graph() const { return graph_; }
  const SiteConfig& config() const { return config_; }

 private:
  const CrossRefGraph& graph_;
  SiteConfig config_;
  std::map<SymbolId, std::string> slugs_;
};

struct ManifestEntry {
  std::string path;
  std::uint64_t bytes = 0;
  std::string sha256;

  friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

struct SiteManifest {
  std::vector<ManifestEntry> files;  // sorted by path
  std::vector<std::string> warnings;
};

inline constexpr std::string_view kManifestFileName = "site-manifest.json";

std::string SerializeManifest(const SiteManifest& manifest);

// Writes the whole site under config.output_dir, rendering pages on up to
// `jobs` threads. Files listed by a previous manifest that the new site no
// longer contains are removed. The manifest is written last, atomically.
// Throws IoWriteError or ConfigError.
SiteManifest RenderSite(const CrossRefGraph& graph, const SearchTable& table,
                        const SiteConfig& config, unsigned jobs = 1);

}  // namespace symdoc

#endif  // SYMDOC_SITEGEN_H_
