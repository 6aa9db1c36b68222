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

#ifndef SYMDOC_HTML_LEXER_H_
#define SYMDOC_HTML_LEXER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace symdoc {

// Half-open byte range [begin, end) into an input buffer.
struct ByteSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool Contains(const ByteSpan& other) const {
    return begin <= other.begin && other.end <= end;
  }
  friend bool operator==(const ByteSpan&, const ByteSpan&) = default;
};

struct HtmlAttribute {
  std::string name;   // ASCII-lowercased
  std::string value;  // UTF-8, character references decoded
  ByteSpan span;      // raw `name="value"` bytes
};

enum class HtmlTokenKind {
  kText,
  kRawText,  // body of script, style, textarea, ...; `name` is the element
  kStartTag,
  kEndTag,
  kComment,
  kDoctype,
};

struct HtmlToken {
  HtmlTokenKind kind = HtmlTokenKind::kText;
  ByteSpan span;
  std::string name;
  std::vector<HtmlAttribute> attributes;
  bool self_closing = false;

  // First attribute with this (lowercase) name; duplicates after it are
  // ignored the way browsers ignore them.
  const HtmlAttribute* Find(std::string_view attr_name) const;
};

struct LexDiagnostic {
  std::size_t offset = 0;
  std::string message;
};

// Splits arbitrary bytes into HTML tokens without ever failing. Tag syntax is
// ASCII, so spans refer to the original bytes; only attribute values are
// decoded. A `<` inside an unfinished tag ends that tag early (with a
// diagnostic) so a following well-formed tag survives.
std::vector<HtmlToken> TokenizeHtml(std::string_view input,
                                    std::vector<LexDiagnostic>* diagnostics);

// Elements that never have content or an end tag.
bool IsVoidElement(std::string_view name);

}  // namespace symdoc

#endif  // SYMDOC_HTML_LEXER_H_
