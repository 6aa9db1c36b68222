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

#ifndef SYMDOC_TEXT_H_
#define SYMDOC_TEXT_H_

#include <string>
#include <string_view>

namespace symdoc {

// Replaces every ill-formed UTF-8 subsequence with U+FFFD. NUL bytes are
// replaced too, since none of our outputs may carry them.
std::string DecodeUtf8Lossy(std::string_view bytes);

bool IsValidUtf8(std::string_view bytes);

// Decodes the character references that appear in attribute values and text:
// the five XML entities, &nbsp;, and numeric references. Unknown named
// references are left as written.
std::string DecodeEntities(std::string_view text);

// Escapes &, <, >, " and ' for use in both text and quoted attribute values.
std::string EscapeHtml(std::string_view text);

std::string AsciiLower(std::string_view text);

inline bool IsAsciiSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

inline bool IsAsciiAlpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

// True for strings matching `[a-z0-9_]+`.
bool IsValidStem(std::string_view stem);

}  // namespace symdoc

#endif  // SYMDOC_TEXT_H_
