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

#include "symdoc/case_fold.h"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include "symdoc/text.h"

namespace symdoc {

std::string SimpleCaseFold(std::string_view utf8) {
  std::string clean;
  if (!IsValidUtf8(utf8)) {
    clean = DecodeUtf8Lossy(utf8);
    utf8 = clean;
  }
  std::string out;
  out.reserve(utf8.size());
  const auto* data = reinterpret_cast<const uint8_t*>(utf8.data());
  auto length = static_cast<int32_t>(utf8.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 c = 0;
    if (data[i] < 0x80) {
      // ASCII fast path.
      char ch = static_cast<char>(data[i++]);
      if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
      out.push_back(ch);
      continue;
    }
    U8_NEXT(data, i, length, c);
    if (c < 0) c = 0xFFFD;
    UChar32 folded = u_foldCase(c, U_FOLD_CASE_DEFAULT);
    char buf[U8_MAX_LENGTH];
    int32_t n = 0;
    U8_APPEND_UNSAFE(buf, n, folded);
    out.append(buf, static_cast<std::size_t>(n));
  }
  return out;
}

}  // namespace symdoc
