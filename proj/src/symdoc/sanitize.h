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

#ifndef SYMDOC_SANITIZE_H_
#define SYMDOC_SANITIZE_H_

#include <string>
#include <string_view>

namespace symdoc {

// Reduces an HTML fragment to a balanced, script-free subset:
//  - only allowlisted presentational tags survive; others are unwrapped,
//  - script-like elements are dropped together with their content,
//  - only allowlisted attributes survive (never on*, style, src), and href
//    values with a javascript:/vbscript:/data: scheme are removed,
//  - comments and a trailing unfinished tag are dropped,
//  - every open element is closed at the end.
// Surviving tags are re-serialized as `<name attr="value">` with values
// escaped; text passes through except that a literal '<' becomes "&lt;".
// The result is valid UTF-8.
std::string SanitizeFragment(std::string_view html);

}  // namespace symdoc

#endif  // SYMDOC_SANITIZE_H_
