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

#include "symdoc/ingest.h"

#include <algorithm>
#include <array>
#include <iterator>
#include <set>
#include <stdexcept>
#include <system_error>
#include <unordered_map>

#include "symdoc/errors.h"
#include "symdoc/file_io.h"
#include "symdoc/parallel.h"
#include "symdoc/sanitize.h"
#include "symdoc/text.h"

namespace symdoc {
namespace {

// Elements whose end tag HTML lets authors omit; leaving them open is not
// worth a warning.
constexpr std::array<std::string_view, 19> kOptionalEndTags = {
    "html",  "head", "body",  "p",     "li",       "dt",      "dd",
    "tr",    "td",   "th",    "thead", "tbody",    "tfoot",   "option",
    "optgroup", "colgroup", "caption", "rt", "rp"};

bool HasOptionalEndTag(std::string_view name) {
  return std::find(kOptionalEndTags.begin(), kOptionalEndTags.end(), name) !=
         kOptionalEndTags.end();
}

bool HasClassToken(const HtmlToken& tag, std::string_view token) {
  const HtmlAttribute* cls = tag.Find("class");
  if (cls == nullptr) return false;
  std::string_view v = cls->value;
  std::size_t i = 0;
  while (i < v.size()) {
    while (i < v.size() && IsAsciiSpace(v[i])) ++i;
    std::size_t j = i;
    while (j < v.size() && !IsAsciiSpace(v[j])) ++j;
    if (j > i && v.substr(i, j - i) == token) return true;
    i = j;
  }
  return false;
}

std::string_view TrimAscii(std::string_view s) {
  while (!s.empty() && IsAsciiSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsAsciiSpace(s.back())) s.remove_suffix(1);
  return s;
}

bool IsHrefStemChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

}  // namespace

std::optional<AnchorId> ResolveLinkTarget(std::string_view href,
                                          std::string_view current_article) {
  href = TrimAscii(href);
  if (!href.empty() && href.front() == '#') {
    if (href.size() == 1) return std::nullopt;
    return AnchorId(current_article, href.substr(1));
  }
  std::size_t pos = href.find(".html#");
  if (pos == std::string_view::npos || pos == 0) return std::nullopt;
  std::string_view stem = href.substr(0, pos);
  std::string_view fragment = href.substr(pos + 6);
  if (fragment.empty()) return std::nullopt;
  if (!std::all_of(stem.begin(), stem.end(), IsHrefStemChar)) {
    return std::nullopt;
  }
  return AnchorId(stem, fragment);
}

namespace {

struct Frame {
  std::string name;
  int block = -1;  // index into blocks when this is a div.def
};

struct Block {
  ByteSpan inner;
};

struct FoundDefinition {
  DefinitionSite site;
  int block = -1;
  ByteSpan region;
};

class ArticleParser {
 public:
  ArticleParser(std::string_view article, std::string_view bytes)
      : bytes_(bytes) {
    doc_.article = std::string(article);
  }

  ArticleDocument Run() {
    std::vector<LexDiagnostic> diagnostics;
    std::vector<HtmlToken> tokens = TokenizeHtml(bytes_, &diagnostics);
    for (auto& d : diagnostics) Warn(d.offset, std::move(d.message));
    for (const auto& t : tokens) {
      if (t.kind == HtmlTokenKind::kStartTag) {
        OnStartTag(t);
      } else if (t.kind == HtmlTokenKind::kEndTag) {
        OnEndTag(t);
      }
    }
    while (!stack_.empty()) PopFrame(bytes_.size(), /*warn=*/true);
    AssignRegions();
    AssignEnclosingDefinitions();
    BuildSnippets();
    for (auto& def : defs_) doc_.definitions.push_back(std::move(def.site));
    std::stable_sort(doc_.warnings.begin(), doc_.warnings.end(),
                     [](const ParseWarning& a, const ParseWarning& b) {
                       return a.offset < b.offset;
                     });
    return std::move(doc_);
  }

 private:
  void Warn(std::size_t offset, std::string message) {
    doc_.warnings.push_back({offset, std::move(message)});
  }

  void OnStartTag(const HtmlToken& t) {
    if (t.name == "a") OnAnchor(t);
    if (IsVoidElement(t.name)) return;
    Frame frame{t.name, -1};
    if (t.name == "div" && HasClassToken(t, "def")) {
      frame.block = static_cast<int>(blocks_.size());
      blocks_.push_back({{t.span.end, t.span.end}});
    }
    stack_.push_back(std::move(frame));
  }

  void OnEndTag(const HtmlToken& t) {
    auto it = std::find_if(stack_.rbegin(), stack_.rend(),
                           [&](const Frame& f) { return f.name == t.name; });
    if (it == stack_.rend()) {
      if (!HasOptionalEndTag(t.name)) {
        Warn(t.span.begin, "stray end tag </" + t.name + ">");
      }
      return;
    }
    std::size_t keep = static_cast<std::size_t>(stack_.rend() - it) - 1;
    while (stack_.size() > keep + 1) PopFrame(t.span.begin, /*warn=*/true);
    PopFrame(t.span.begin, /*warn=*/false);
  }

  void PopFrame(std::size_t inner_end, bool warn) {
    const Frame& f = stack_.back();
    if (warn && !HasOptionalEndTag(f.name)) {
      Warn(inner_end, "unclosed <" + f.name + ">");
    }
    if (f.block >= 0) blocks_[static_cast<std::size_t>(f.block)].inner.end =
        inner_end;
    stack_.pop_back();
  }

  int InnermostBlock() const {
    for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) {
      if (it->block >= 0) return it->block;
    }
    return -1;
  }

  void OnAnchor(const HtmlToken& t) {
    const HtmlAttribute* kind_attr = t.Find("data-sym-kind");
    const HtmlAttribute* name_attr = t.Find("data-sym-name");
    if (kind_attr != nullptr) {
      OnDefinitionAnchor(t, *kind_attr, name_attr);
    } else if (name_attr != nullptr) {
      Warn(t.span.begin, "data-sym-name without data-sym-kind");
    }
    if (const HtmlAttribute* href = t.Find("href")) {
      std::optional<AnchorId> target = ResolveLinkTarget(href->value, doc_.article);
      if (!target) {
        Warn(t.span.begin, "ignored href \"" + href->value + "\"");
      } else {
        links_.push_back({t.span, std::move(*target), std::nullopt});
      }
    }
  }

  void OnDefinitionAnchor(const HtmlToken& t, const HtmlAttribute& kind_attr,
                          const HtmlAttribute* name_attr) {
    std::optional<SymbolKind> kind = KindFromCode(kind_attr.value);
    if (!kind) {
      Warn(t.span.begin, "unknown symbol kind \"" + kind_attr.value + "\"");
      return;
    }
    const HtmlAttribute* id = t.Find("id");
    if (id == nullptr || id->value.empty()) {
      Warn(t.span.begin, "definition anchor without id");
      return;
    }
    if (name_attr == nullptr || name_attr->value.empty()) {
      Warn(t.span.begin, "definition anchor \"" + id->value + "\" without name");
      return;
    }
    if (!fragments_.insert(id->value).second) {
      Warn(t.span.begin, "duplicate definition anchor \"" + id->value + "\"");
      return;
    }
    FoundDefinition def;
    def.site.anchor = AnchorId(doc_.article, id->value);
    def.site.name = name_attr->value;
    def.site.kind = *kind;
    def.site.byte_span = t.span;
    def.block = InnermostBlock();
    defs_.push_back(std::move(def));
  }

  void AssignRegions() {
    for (auto& def : defs_) {
      if (def.block >= 0) {
        def.region = blocks_[static_cast<std::size_t>(def.block)].inner;
        continue;
      }
      std::size_t begin = def.site.byte_span.end;
      std::size_t end = std::min(begin + kFallbackSnippetBytes, bytes_.size());
      // Never cut a UTF-8 sequence in half.
      while (end > begin && end < bytes_.size() &&
             (static_cast<unsigned char>(bytes_[end]) & 0xC0) == 0x80) {
        --end;
      }
      def.region = {begin, end};
    }
  }

  // A link belongs to the definition whose snippet region most tightly
  // contains it; among definitions sharing that region, the last one whose
  // anchor precedes the link, else the first.
  void AssignEnclosingDefinitions() {
    for (auto& link : links_) {
      const FoundDefinition* best = nullptr;
      for (const auto& def : defs_) {
        if (!def.region.Contains(link.source_span)) continue;
        if (best == nullptr || def.region.size() < best->region.size()) {
          best = &def;
          continue;
        }
        if (def.region.size() == best->region.size() &&
            def.site.byte_span.begin <= link.source_span.begin) {
          best = &def;
        }
      }
      if (best != nullptr) link.enclosing_definition = best->site.anchor;
      doc_.links.push_back(std::move(link));
    }
  }

  void BuildSnippets() {
    std::unordered_map<int, std::string> block_snippets;
    for (auto& def : defs_) {
      std::string_view region =
          bytes_.substr(def.region.begin, def.region.size());
      if (def.block < 0) {
        def.site.snippet = SanitizeFragment(region);
        continue;
      }
      auto [it, inserted] = block_snippets.try_emplace(def.block);
      if (inserted) it->second = SanitizeFragment(region);
      def.site.snippet = it->second;
    }
  }

  std::string_view bytes_;
  ArticleDocument doc_;
  std::vector<Frame> stack_;
  std::vector<Block> blocks_;
  std::vector<FoundDefinition> defs_;
  std::vector<LinkOccurrence> links_;
  std::set<std::string> fragments_;
};

std::string DisplayPath(const std::filesystem::path& p) {
  return DecodeUtf8Lossy(p.generic_string());
}

}  // namespace

AnchorId::AnchorId(std::string_view article, std::string_view fragment)
    : article_(AsciiLower(article)), fragment_(fragment) {
  if (!IsValidStem(article_)) {
    throw std::invalid_argument("invalid article stem \"" +
                                DecodeUtf8Lossy(article_) + "\"");
  }
  if (fragment_.empty()) throw std::invalid_argument("empty anchor fragment");
}

std::string AnchorId::Canonical() const { return article_ + "#" + fragment_; }

ArticleDocument ParseArticle(std::string_view article_stem,
                             std::string_view html_bytes) {
  if (!IsValidStem(article_stem)) {
    throw IoDecodeError("invalid article stem \"" +
                        DecodeUtf8Lossy(article_stem) + "\"");
  }
  if (html_bytes.empty()) {
    throw IoDecodeError("article \"" + std::string(article_stem) +
                        "\" is empty");
  }
  return ArticleParser(article_stem, html_bytes).Run();
}

CorpusScan ScanCorpus(const std::filesystem::path& input_dir,
                      const ScanOptions& options) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(input_dir, ec)) {
    throw CorpusEmptyError("input directory " + DisplayPath(input_dir) +
                           " does not exist or is not a directory");
  }

  std::vector<fs::path> files;
  auto collect = [&](const fs::directory_entry& entry) {
    std::error_code entry_ec;
    if (entry.is_regular_file(entry_ec) && entry.path().extension() == ".html") {
      files.push_back(entry.path().lexically_relative(input_dir));
    }
  };
  if (options.recursive) {
    fs::recursive_directory_iterator it(
        input_dir, fs::directory_options::skip_permission_denied, ec);
    for (; !ec && it != fs::recursive_directory_iterator(); it.increment(ec)) {
      collect(*it);
    }
  } else {
    fs::directory_iterator it(input_dir, ec);
    for (; !ec && it != fs::directory_iterator(); it.increment(ec)) {
      collect(*it);
    }
  }
  if (ec) {
    throw CorpusEmptyError("cannot list " + DisplayPath(input_dir) + ": " +
                           ec.message());
  }
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) {
              return a.generic_string() < b.generic_string();
            });

  CorpusScan scan;
  struct Job {
    fs::path relative;
    std::string stem;
  };
  std::vector<Job> jobs;
  std::set<std::string> stems;
  for (const auto& rel : files) {
    std::string stem = rel.stem().string();
    if (!IsValidStem(stem)) {
      scan.warnings.push_back(DisplayPath(rel) +
                              ": skipped, file stem is not [a-z0-9_]+");
      continue;
    }
    if (!stems.insert(stem).second) {
      scan.warnings.push_back(DisplayPath(rel) + ": skipped, duplicate stem \"" +
                              stem + "\"");
      continue;
    }
    jobs.push_back({rel, std::move(stem)});
  }

  std::vector<std::optional<ArticleDocument>> parsed(jobs.size());
  std::vector<std::string> failures(jobs.size());
  ParallelFor(jobs.size(), options.jobs, [&](std::size_t i) {
    std::optional<std::string> bytes =
        ReadWholeFile(input_dir / jobs[i].relative);
    if (!bytes) {
      failures[i] = DisplayPath(jobs[i].relative) + ": skipped, unreadable";
      return;
    }
    try {
      parsed[i] = ParseArticle(jobs[i].stem, *bytes);
    } catch (const IoDecodeError& e) {
      failures[i] = DisplayPath(jobs[i].relative) + ": skipped, " + e.what();
    }
  });
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (parsed[i]) {
      scan.documents.push_back(std::move(*parsed[i]));
    } else {
      scan.warnings.push_back(std::move(failures[i]));
    }
  }
  if (scan.documents.empty()) {
    throw CorpusEmptyError("no parseable *.html articles in " +
                           DisplayPath(input_dir));
  }
  return scan;
}

}  // namespace symdoc
