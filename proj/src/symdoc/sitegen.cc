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

#include "symdoc/sitegen.h"

#include <algorithm>
#include <set>
#include <tuple>
#include <unordered_set>

#include "json.hpp"
#include "symdoc/assets.h"
#include "symdoc/case_fold.h"
#include "symdoc/digest.h"
#include "symdoc/errors.h"
#include "symdoc/file_io.h"
#include "symdoc/html_lexer.h"
#include "symdoc/parallel.h"
#include "symdoc/text.h"

namespace symdoc {
namespace {

// Leaves room for the "-N" suffix and ".html" under common NAME_MAX limits.
constexpr std::size_t kMaxSlugBytes = 200;

std::string BaseSlug(const SymbolRecord& record) {
  std::string slug = record.article + ".";
  for (char c : AsciiLower(record.fragment)) {
    bool keep = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    slug.push_back(keep ? c : '_');
  }
  if (slug.size() > kMaxSlugBytes) slug.resize(kMaxSlugBytes);
  return slug;
}

ManifestEntry MakeEntry(std::string path, std::string_view bytes) {
  return {std::move(path), bytes.size(), Sha256Hex(bytes)};
}

bool IsSafeRelative(const std::string& path) {
  std::filesystem::path p(path);
  if (p.empty() || p.is_absolute()) return false;
  return std::none_of(p.begin(), p.end(),
                      [](const auto& part) { return part == ".."; });
}

// Deletes files a previous build listed that the new site does not produce,
// so repeated builds into one directory leave identical trees.
void RemoveStaleFiles(const std::filesystem::path& output_dir,
                      const std::set<std::string>& keep) {
  std::optional<std::string> text =
      ReadWholeFile(output_dir / std::string(kManifestFileName));
  if (!text) return;
  nlohmann::json old = nlohmann::json::parse(*text, nullptr, false);
  if (old.is_discarded() || !old.is_object()) return;
  auto files = old.find("files");
  if (files == old.end() || !files->is_array()) return;
  for (const auto& f : *files) {
    if (!f.is_object() || !f.contains("path") || !f["path"].is_string()) {
      continue;
    }
    std::string path = f["path"].get<std::string>();
    if (keep.contains(path) || !IsSafeRelative(path)) continue;
    std::error_code ec;
    std::filesystem::remove(output_dir / path, ec);
  }
}

}  // namespace

LinkClass ClassifyLink(const CrossRefGraph& graph, const AnchorId& target) {
  return graph.Contains(SymbolId(target)) ? LinkClass::kInternal
                                          : LinkClass::kExternal;
}

void ValidateSiteConfig(const SiteConfig& config) {
  if (config.external_base_url.empty() ||
      config.external_base_url.back() != '/') {
    throw ConfigError("external base URL must end with '/': \"" +
                      config.external_base_url + "\"");
  }
}

std::map<SymbolId, std::string> AssignSlugs(const CrossRefGraph& graph) {
  std::map<SymbolId, std::string> slugs;
  std::map<std::string, int> used;
  for (const auto& [id, record] : graph.symbols()) {
    std::string base = BaseSlug(record);
    int n = ++used[base];
    slugs.emplace(id, n == 1 ? base : base + "-" + std::to_string(n));
  }
  return slugs;
}

SiteRenderer::SiteRenderer(const CrossRefGraph& graph, SiteConfig config)
    : graph_(graph), config_(std::move(config)), slugs_(AssignSlugs(graph)) {
  ValidateSiteConfig(config_);
}

const std::string& SiteRenderer::SlugOf(const SymbolId& id) const {
  auto it = slugs_.find(id);
  if (it == slugs_.end()) {
    throw UnknownSymbolError("unknown symbol \"" + id.str() + "\"");
  }
  return it->second;
}

std::string SiteRenderer::PagePath(const SymbolId& id) const {
  return "symbols/" + SlugOf(id) + ".html";
}

std::string SiteRenderer::RewriteSnippet(
    std::string_view snippet, std::string_view article,
    std::vector<std::string>* warnings) const {
  std::vector<HtmlToken> tokens = TokenizeHtml(snippet, nullptr);
  std::string out;
  out.reserve(snippet.size() + snippet.size() / 4);
  std::vector<bool> rewritten_anchors;
  for (const auto& t : tokens) {
    std::string_view raw = snippet.substr(t.span.begin, t.span.size());
    if (t.kind == HtmlTokenKind::kStartTag && t.name == "a") {
      const HtmlAttribute* href = t.Find("href");
      std::optional<AnchorId> target;
      if (href != nullptr) {
        target = ResolveLinkTarget(href->value, article);
        if (!target && warnings != nullptr) {
          warnings->push_back("left href \"" + href->value + "\" in " +
                              std::string(article) + " untouched");
        }
      }
      if (!target) {
        out.append(raw);
        rewritten_anchors.push_back(false);
        continue;
      }
      std::string url;
      std::string_view cls;
      if (ClassifyLink(graph_, *target) == LinkClass::kInternal) {
        url = "../" + PagePath(SymbolId(*target));
        cls = "int";
      } else {
        url = config_.external_base_url + target->article() + ".html#" +
              target->fragment();
        cls = "ext";
      }
      out += "<b><a class=\"";
      out += cls;
      out += "\" href=\"";
      out += EscapeHtml(url);
      out += "\">";
      rewritten_anchors.push_back(true);
      continue;
    }
    if (t.kind == HtmlTokenKind::kEndTag && t.name == "a" &&
        !rewritten_anchors.empty()) {
      bool rewritten = rewritten_anchors.back();
      rewritten_anchors.pop_back();
      out += rewritten ? std::string_view("</a></b>") : raw;
      continue;
    }
    out.append(raw);
  }
  return out;
}

RenderedPage SiteRenderer::RenderSymbolPage(
    const SymbolId& id, std::vector<std::string>* warnings) const {
  const SymbolRecord& record = graph_.At(id);
  std::string name = EscapeHtml(record.name);
  std::string_view label = KindLabel(record.kind);

  std::string html;
  html.reserve(record.snippet.size() * 2 + 1024);
  html += "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n";
  html += "<title>" + name + " (" + std::string(label) + ") - " +
          EscapeHtml(config_.site_title) + "</title>\n";
  html += "<link rel=\"stylesheet\" href=\"../assets/app.css\">\n";
  html += "</head>\n<body class=\"symbol-page\">\n<header>\n";
  html += "<h1><img class=\"kind-icon\" src=\"../" +
          std::string(KindIconPath(record.kind)) + "\" alt=\"" +
          std::string(label) + "\"><span class=\"sym-name\">" + name +
          "</span></h1>\n";
  html += "<p class=\"sym-meta\"><span class=\"kind-label\">" +
          std::string(label) + "</span> defined in <span class=\"sym-article\">" +
          EscapeHtml(record.article) + "</span></p>\n</header>\n";
  html += "<section class=\"definition\">\n<h2>Definition</h2>\n";
  html += "<div class=\"snippet\">";
  html += RewriteSnippet(record.snippet, record.article, warnings);
  html += "</div>\n</section>\n";
  html += "<section class=\"referrers\">\n<h2>Referrers</h2>\n";
  const std::vector<SymbolId>& referrers = ReferrersOf(graph_, id);
  if (referrers.empty()) {
    html += "<p class=\"no-referrers\">No referrers.</p>\n";
  } else {
    html += "<ul class=\"referrer-list\">\n";
    for (const auto& ref : referrers) {
      const SymbolRecord& r = graph_.At(ref);
      html += "<li><a class=\"int\" href=\"../" + EscapeHtml(PagePath(ref)) +
              "\" data-id=\"" + EscapeHtml(ref.str()) + "\">" +
              EscapeHtml(r.name) + " (" + EscapeHtml(r.article) + ")</a></li>\n";
    }
    html += "</ul>\n";
  }
  html += "</section>\n</body>\n</html>\n";
  return {id, PagePath(id), std::move(html)};
}

std::string SiteRenderer::RenderIndex() const {
  std::string title = EscapeHtml(config_.site_title);
  std::string html;
  html += "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n";
  html += "<title>" + title + "</title>\n";
  html += "<link rel=\"stylesheet\" href=\"assets/app.css\">\n";
  html += "</head>\n<body class=\"site\">\n";
  html += "<nav id=\"side-pane\">\n";
  html += "<h1 class=\"site-title\">" + title + "</h1>\n";
  html += "<input id=\"search\" type=\"search\" placeholder=\"Search symbols\" "
          "autocomplete=\"off\" aria-label=\"Search symbols\">\n";
  html += "<ul id=\"symbol-list\" role=\"listbox\"></ul>\n";
  html += "</nav>\n";
  html += "<main id=\"main-pane\">\n";
  html += "<iframe id=\"main-frame\" name=\"main\" title=\"Symbol page\" "
          "src=\"about:blank\"></iframe>\n";
  html += "</main>\n";
  html += "<script src=\"assets/app.js\"></script>\n";
  html += "</body>\n</html>\n";
  return html;
}

std::string SiteRenderer::SymbolListJson() const {
  std::vector<const SymbolRecord*> records;
  records.reserve(graph_.symbols().size());
  for (const auto& [id, record] : graph_.symbols()) records.push_back(&record);
  std::sort(records.begin(), records.end(),
            [](const SymbolRecord* a, const SymbolRecord* b) {
              return std::tie(a->article, a->name, a->id) <
                     std::tie(b->article, b->name, b->id);
            });
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const SymbolRecord* r : records) {
    nlohmann::ordered_json obj;
    obj["id"] = r->id.str();
    obj["name"] = r->name;
    obj["norm"] = SimpleCaseFold(r->name);
    obj["kind"] = std::string(KindCode(r->kind));
    obj["article"] = r->article;
    obj["page"] = PagePath(r->id);
    entries.push_back(std::move(obj));
  }
  nlohmann::ordered_json doc;
  doc["version"] = 1;
  doc["entries"] = std::move(entries);
  return doc.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

std::string SerializeManifest(const SiteManifest& manifest) {
  nlohmann::ordered_json files = nlohmann::ordered_json::array();
  for (const auto& f : manifest.files) {
    nlohmann::ordered_json obj;
    obj["path"] = f.path;
    obj["bytes"] = f.bytes;
    obj["sha256"] = f.sha256;
    files.push_back(std::move(obj));
  }
  nlohmann::ordered_json doc;
  doc["version"] = 1;
  doc["files"] = std::move(files);
  return doc.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

SiteManifest RenderSite(const CrossRefGraph& graph, const SearchTable& table,
                        const SiteConfig& config, unsigned jobs) {
  namespace fs = std::filesystem;
  if (config.output_dir.empty()) throw ConfigError("output directory not set");
  SiteRenderer renderer(graph, config);
  const fs::path& root = config.output_dir;

  std::vector<SymbolId> ids;
  ids.reserve(graph.symbols().size());
  for (const auto& [id, record] : graph.symbols()) ids.push_back(id);

  std::set<std::string> planned = {"index.html", "data/search-table.json",
                                   "data/symbol-list.json"};
  for (const auto& asset : FrontendAssets()) planned.emplace(asset.path);
  for (const auto& id : ids) planned.insert(renderer.PagePath(id));

  CreateDirectories(root);
  CreateDirectories(root / "symbols");
  CreateDirectories(root / "data");
  CreateDirectories(root / "assets" / "icons");
  RemoveStaleFiles(root, planned);

  SiteManifest manifest;
  std::vector<ManifestEntry> page_entries(ids.size());
  std::vector<std::vector<std::string>> page_warnings(ids.size());
  ParallelFor(ids.size(), jobs, [&](std::size_t i) {
    RenderedPage page = renderer.RenderSymbolPage(ids[i], &page_warnings[i]);
    WriteFile(root / page.relative_path, page.html);
    page_entries[i] = MakeEntry(std::move(page.relative_path), page.html);
  });
  for (auto& w : page_warnings) {
    for (auto& msg : w) manifest.warnings.push_back(std::move(msg));
  }

  auto emit = [&](std::string path, std::string_view bytes) {
    WriteFile(root / path, bytes);
    manifest.files.push_back(MakeEntry(std::move(path), bytes));
  };
  emit("index.html", renderer.RenderIndex());
  emit("data/search-table.json", SerializeSearchTable(table));
  emit("data/symbol-list.json", renderer.SymbolListJson());
  for (const auto& asset : FrontendAssets()) {
    emit(std::string(asset.path), asset.content);
  }
  for (auto& e : page_entries) manifest.files.push_back(std::move(e));
  std::sort(manifest.files.begin(), manifest.files.end(),
            [](const ManifestEntry& a, const ManifestEntry& b) {
              return a.path < b.path;
            });
  WriteFileAtomically(root / std::string(kManifestFileName),
                      SerializeManifest(manifest));
  return manifest;
}

}  // namespace symdoc
