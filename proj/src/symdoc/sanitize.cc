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

#include "symdoc/sanitize.h"

#include <algorithm>
#include <array>
#include <vector>

#include "symdoc/html_lexer.h"
#include "symdoc/text.h"

namespace symdoc {
namespace {

constexpr std::array<std::string_view, 50> kAllowedTags = {
    "a", "abbr", "b", "big", "blockquote", "br", "caption", "cite", "code",
    "dd", "del", "dfn", "div", "dl", "dt", "em", "font", "h1", "h2", "h3",
    "h4", "h5", "h6", "hr", "i", "ins", "kbd", "li", "ol", "p", "pre", "q",
    "s", "samp", "small", "span", "strong", "sub", "sup", "table", "tbody",
    "td", "tfoot", "th", "thead", "tr", "tt", "u", "ul", "var",
};

constexpr std::array<std::string_view, 12> kAllowedAttributes = {
    "id",    "class", "href",    "title",  "name", "lang",
    "dir",   "align", "colspan", "rowspan", "color", "valign"};

template <std::size_t N>
bool Contains(const std::array<std::string_view, N>& set,
              std::string_view value) {
  return std::find(set.begin(), set.end(), value) != set.end();
}

bool IsAllowedTag(std::string_view name) {
  return Contains(kAllowedTags, name);
}

bool IsAllowedAttribute(std::string_view name) {
  if (Contains(kAllowedAttributes, name)) return true;
  if (name.size() <= 5 || name.substr(0, 5) != "data-") return false;
  // data-* with a conservative name alphabet.
  return std::all_of(name.begin() + 5, name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' ||
           c == '_';
  });
}

bool HasScriptScheme(std::string_view url) {
  std::string compact;
  for (char c : url) {
    auto u = static_cast<unsigned char>(c);
    if (u <= 0x20) continue;  // browsers ignore these inside schemes
    compact.push_back(c);
    if (compact.size() > 16) break;
  }
  compact = AsciiLower(compact);
  for (std::string_view scheme : {"javascript:", "vbscript:", "data:"}) {
    if (compact.rfind(scheme, 0) == 0) return true;
  }
  return false;
}

bool IsTerminated(std::string_view html, const HtmlToken& t) {
  return t.span.size() > 0 && html[t.span.end - 1] == '>';
}

void AppendText(std::string& out, std::string_view raw) {
  std::string text = DecodeUtf8Lossy(raw);
  for (char c : text) {
    if (c == '<') {
      out += "&lt;";
    } else {
      out.push_back(c);
    }
  }
}

void AppendStartTag(std::string& out, const HtmlToken& t) {
  out.push_back('<');
  out += t.name;
  std::vector<std::string_view> seen;
  for (const auto& attr : t.attributes) {
    if (!IsAllowedAttribute(attr.name)) continue;
    if (std::find(seen.begin(), seen.end(), attr.name) != seen.end()) continue;
    seen.push_back(attr.name);
    if (attr.name == "href" && HasScriptScheme(attr.value)) continue;
    out.push_back(' ');
    out += attr.name;
    out += "=\"";
    out += EscapeHtml(attr.value);
    out.push_back('"');
  }
  out.push_back('>');
}

void CloseThrough(std::string& out, std::vector<std::string>& open,
                  std::size_t index) {
  while (open.size() > index) {
    out += "</";
    out += open.back();
    out.push_back('>');
    open.pop_back();
  }
}

}  // namespace

std::string SanitizeFragment(std::string_view html) {
  std::vector<HtmlToken> tokens = TokenizeHtml(html, nullptr);
  std::string out;
  out.reserve(html.size());
  std::vector<std::string> open;
  for (const auto& t : tokens) {
    std::string_view raw = html.substr(t.span.begin, t.span.size());
    switch (t.kind) {
      case HtmlTokenKind::kText:
        AppendText(out, raw);
        break;
      case HtmlTokenKind::kRawText:
      case HtmlTokenKind::kComment:
      case HtmlTokenKind::kDoctype:
        break;
      case HtmlTokenKind::kStartTag: {
        if (!IsTerminated(html, t) || !IsAllowedTag(t.name)) break;
        if (t.name == "a") {
          auto it = std::find(open.rbegin(), open.rend(), "a");
          if (it != open.rend()) {
            CloseThrough(out, open,
                         static_cast<std::size_t>(open.rend() - it) - 1);
          }
        }
        AppendStartTag(out, t);
        if (!IsVoidElement(t.name)) open.push_back(t.name);
        break;
      }
      case HtmlTokenKind::kEndTag: {
        if (!IsTerminated(html, t)) break;
        auto it = std::find(open.rbegin(), open.rend(), t.name);
        if (it == open.rend()) break;
        CloseThrough(out, open, static_cast<std::size_t>(open.rend() - it) - 1);
        break;
      }
    }
  }
  CloseThrough(out, open, 0);
  return out;
}

}  // namespace symdoc
