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

#include "symdoc/html_lexer.h"

#include <algorithm>
#include <array>

#include "symdoc/text.h"

namespace symdoc {
namespace {

constexpr std::array<std::string_view, 8> kRawTextElements = {
    "script", "style", "textarea", "title",
    "iframe", "noembed", "noframes", "xmp"};

constexpr std::array<std::string_view, 14> kVoidElements = {
    "area", "base", "br",   "col",   "embed",  "hr",    "img",
    "input", "link", "meta", "param", "source", "track", "wbr"};

bool IsRawTextElement(std::string_view name) {
  return std::find(kRawTextElements.begin(), kRawTextElements.end(), name) !=
         kRawTextElements.end();
}

bool IsNameBreak(char c) {
  return IsAsciiSpace(c) || c == '/' || c == '>' || c == '<';
}

// Case-insensitive search for `</name` starting at `from`.
std::size_t FindRawTextEnd(std::string_view input, std::size_t from,
                           std::string_view name) {
  std::size_t pos = from;
  while ((pos = input.find("</", pos)) != std::string_view::npos) {
    std::size_t n = pos + 2;
    if (n + name.size() <= input.size() &&
        AsciiLower(input.substr(n, name.size())) == name) {
      std::size_t after = n + name.size();
      if (after == input.size() || IsNameBreak(input[after])) return pos;
    }
    pos += 2;
  }
  return std::string_view::npos;
}

class Lexer {
 public:
  Lexer(std::string_view input, std::vector<LexDiagnostic>* diagnostics)
      : in_(input), diagnostics_(diagnostics) {}

  std::vector<HtmlToken> Run() {
    while (pos_ < in_.size()) {
      if (in_[pos_] == '<' && LexMarkup()) continue;
      LexText();
    }
    return std::move(tokens_);
  }

 private:
  void Warn(std::size_t offset, std::string message) {
    if (diagnostics_) diagnostics_->push_back({offset, std::move(message)});
  }

  // Text up to the next '<' (a lone '<' that starts no markup is text too).
  void LexText() {
    std::size_t start = pos_;
    std::size_t next = in_.find('<', pos_ + 1);
    pos_ = next == std::string_view::npos ? in_.size() : next;
    if (!tokens_.empty() && tokens_.back().kind == HtmlTokenKind::kText &&
        tokens_.back().span.end == start) {
      tokens_.back().span.end = pos_;
      return;
    }
    HtmlToken t;
    t.kind = HtmlTokenKind::kText;
    t.span = {start, pos_};
    tokens_.push_back(std::move(t));
  }

  bool LexMarkup() {
    std::size_t start = pos_;
    if (start + 1 >= in_.size()) return false;
    char c = in_[start + 1];
    if (c == '!') {
      if (in_.substr(start, 4) == "<!--") {
        std::size_t close = in_.find("-->", start + 4);
        if (close == std::string_view::npos) {
          Warn(start, "unterminated comment");
          Emit(HtmlTokenKind::kComment, start, in_.size());
        } else {
          Emit(HtmlTokenKind::kComment, start, close + 3);
        }
        return true;
      }
      LexBogus(HtmlTokenKind::kDoctype, start);
      return true;
    }
    if (c == '?') {
      LexBogus(HtmlTokenKind::kComment, start);
      return true;
    }
    if (c == '/') {
      if (start + 2 < in_.size() && IsAsciiAlpha(in_[start + 2])) {
        LexTag(start, /*end_tag=*/true);
        return true;
      }
      if (start + 2 < in_.size() && in_[start + 2] == '>') {
        Emit(HtmlTokenKind::kComment, start, start + 3);
        return true;
      }
      if (start + 2 < in_.size()) {
        LexBogus(HtmlTokenKind::kComment, start);
        return true;
      }
      return false;
    }
    if (IsAsciiAlpha(c)) {
      LexTag(start, /*end_tag=*/false);
      return true;
    }
    return false;
  }

  void LexBogus(HtmlTokenKind kind, std::size_t start) {
    std::size_t close = in_.find('>', start + 2);
    if (close == std::string_view::npos) {
      Warn(start, "unterminated markup declaration");
      Emit(kind, start, in_.size());
    } else {
      Emit(kind, start, close + 1);
    }
  }

  void Emit(HtmlTokenKind kind, std::size_t begin, std::size_t end) {
    HtmlToken t;
    t.kind = kind;
    t.span = {begin, end};
    tokens_.push_back(std::move(t));
    pos_ = end;
  }

  void LexTag(std::size_t start, bool end_tag) {
    HtmlToken t;
    t.kind = end_tag ? HtmlTokenKind::kEndTag : HtmlTokenKind::kStartTag;
    std::size_t p = start + (end_tag ? 2 : 1);
    std::size_t name_begin = p;
    while (p < in_.size() && !IsNameBreak(in_[p])) ++p;
    t.name = AsciiLower(DecodeUtf8Lossy(in_.substr(name_begin, p - name_begin)));

    bool closed = false;
    while (p < in_.size()) {
      char c = in_[p];
      if (IsAsciiSpace(c)) {
        ++p;
        continue;
      }
      if (c == '>') {
        ++p;
        closed = true;
        break;
      }
      if (c == '<') break;
      if (c == '/') {
        if (p + 1 < in_.size() && in_[p + 1] == '>') t.self_closing = true;
        ++p;
        continue;
      }
      bool stop = false;
      p = LexAttribute(p, &t, &stop);
      if (stop) break;
    }
    if (!closed) Warn(start, "unterminated tag <" + t.name + ">");
    t.span = {start, p};
    pos_ = p;
    if (end_tag) t.attributes.clear();
    std::string name = t.name;
    bool raw = !end_tag && !t.self_closing && IsRawTextElement(name);
    tokens_.push_back(std::move(t));
    if (raw && closed) LexRawText(name);
  }

  // Returns the position after the attribute. Sets *stop when the tag ended
  // inside the attribute (EOF or an unterminated quoted value).
  std::size_t LexAttribute(std::size_t p, HtmlToken* tag, bool* stop) {
    std::size_t begin = p;
    ++p;  // first char is never a break, so always consume it
    while (p < in_.size() && !IsNameBreak(in_[p]) && in_[p] != '=') ++p;
    HtmlAttribute attr;
    attr.name = AsciiLower(DecodeUtf8Lossy(in_.substr(begin, p - begin)));
    std::size_t q = p;
    while (q < in_.size() && IsAsciiSpace(in_[q])) ++q;
    if (q < in_.size() && in_[q] == '=') {
      ++q;
      while (q < in_.size() && IsAsciiSpace(in_[q])) ++q;
      if (q < in_.size() && (in_[q] == '"' || in_[q] == '\'')) {
        char quote = in_[q];
        std::size_t close = in_.find(quote, q + 1);
        if (close == std::string_view::npos) {
          Warn(begin, "unterminated attribute value");
          std::size_t gt = in_.find('>', q + 1);
          std::size_t value_end = gt == std::string_view::npos ? in_.size() : gt;
          attr.value = DecodeEntities(
              DecodeUtf8Lossy(in_.substr(q + 1, value_end - q - 1)));
          attr.span = {begin, value_end};
          tag->attributes.push_back(std::move(attr));
          *stop = true;
          return gt == std::string_view::npos ? in_.size() : gt + 1;
        }
        attr.value =
            DecodeEntities(DecodeUtf8Lossy(in_.substr(q + 1, close - q - 1)));
        p = close + 1;
      } else {
        std::size_t v = q;
        while (v < in_.size() && !IsAsciiSpace(in_[v]) && in_[v] != '>' &&
               in_[v] != '<') {
          ++v;
        }
        attr.value = DecodeEntities(DecodeUtf8Lossy(in_.substr(q, v - q)));
        p = v;
      }
    }
    attr.span = {begin, p};
    tag->attributes.push_back(std::move(attr));
    return p;
  }

  void LexRawText(const std::string& name) {
    std::size_t end = FindRawTextEnd(in_, pos_, name);
    if (end == std::string_view::npos) {
      Warn(pos_, "unterminated <" + name + "> element");
      end = in_.size();
    }
    if (end > pos_) {
      HtmlToken t;
      t.kind = HtmlTokenKind::kRawText;
      t.name = name;
      t.span = {pos_, end};
      tokens_.push_back(std::move(t));
    }
    pos_ = end;
  }

  std::string_view in_;
  std::vector<LexDiagnostic>* diagnostics_;
  std::size_t pos_ = 0;
  std::vector<HtmlToken> tokens_;
};

}  // namespace

const HtmlAttribute* HtmlToken::Find(std::string_view attr_name) const {
  for (const auto& attr : attributes) {
    if (attr.name == attr_name) return &attr;
  }
  return nullptr;
}

std::vector<HtmlToken> TokenizeHtml(std::string_view input,
                                    std::vector<LexDiagnostic>* diagnostics) {
  return Lexer(input, diagnostics).Run();
}

bool IsVoidElement(std::string_view name) {
  return std::find(kVoidElements.begin(), kVoidElements.end(), name) !=
         kVoidElements.end();
}

}  // namespace symdoc
