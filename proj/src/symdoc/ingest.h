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

// Article ingestion: turns one hyperlinked HTML article into the definitions
// it declares and the links it contains.
//
// Input markup:
//
//   <div class="def"> ...
//     <a id="FRAG" data-sym-kind="KIND" data-sym-name="NAME">...</a>
//     ... <a href="other.html#FRAG2">...</a> ... <a href="#FRAG3">...</a>
//   </div>
//
// KIND is one of pred, mode, struct, func, attr. A definition's snippet is the
// inner HTML of its nearest enclosing `div.def`; without one it is the 512
// bytes after the anchor tag. Links are `name.html#FRAG` or `#FRAG`; every
// other href is ignored with a warning.

#ifndef SYMDOC_INGEST_H_
#define SYMDOC_INGEST_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symdoc/html_lexer.h"
#include "symdoc/kind.h"

namespace symdoc {

// File plus fragment naming a definition location.
class AnchorId {
 public:
  AnchorId() = default;
  // Lowercases `article`. Throws std::invalid_argument unless the lowercased
  // article is a valid stem and the fragment is non-empty.
  AnchorId(std::string_view article, std::string_view fragment);

  const std::string& article() const { return article_; }
  const std::string& fragment() const { return fragment_; }
  // `<article>#<fragment>`
  std::string Canonical() const;

  friend auto operator<=>(const AnchorId&, const AnchorId&) = default;

 private:
  std::string article_;
  std::string fragment_;
};

struct DefinitionSite {
  AnchorId anchor;
  std::string name;
  SymbolKind kind = SymbolKind::kPredicate;
  std::string snippet;  // sanitized HTML
  ByteSpan byte_span;   // the anchor start tag
};

struct LinkOccurrence {
  ByteSpan source_span;  // the `<a href=...>` start tag
  AnchorId target;
  std::optional<AnchorId> enclosing_definition;
};

struct ParseWarning {
  std::size_t offset = 0;
  std::string message;
};

struct ArticleDocument {
  std::string article;
  std::vector<DefinitionSite> definitions;
  std::vector<LinkOccurrence> links;
  std::vector<ParseWarning> warnings;
};

// Resolves `name.html#FRAG` (article lowercased) or `#FRAG` (relative to
// `current_article`); nullopt for every other href shape.
std::optional<AnchorId> ResolveLinkTarget(std::string_view href,
                                          std::string_view current_article);

// Bytes the fallback snippet takes after a definition anchor that has no
// enclosing definition block.
inline constexpr std::size_t kFallbackSnippetBytes = 512;

// Never fails on markup. Throws IoDecodeError when `html_bytes` is empty or
// `article_stem` does not match `[a-z0-9_]+`.
ArticleDocument ParseArticle(std::string_view article_stem,
                             std::string_view html_bytes);

struct ScanOptions {
  bool recursive = false;
  unsigned jobs = 1;
};

struct CorpusScan {
  std::vector<ArticleDocument> documents;  // lexicographic by file path
  std::vector<std::string> warnings;       // files that were skipped
};

// Parses every `*.html` under `input_dir`. Files whose name is not a valid
// stem, that are empty, unreadable, or repeat an earlier stem are skipped
// with a corpus warning. Throws CorpusEmptyError when nothing parses or the
// directory cannot be listed.
CorpusScan ScanCorpus(const std::filesystem::path& input_dir,
                      const ScanOptions& options = {});

}  // namespace symdoc

#endif  // SYMDOC_INGEST_H_
