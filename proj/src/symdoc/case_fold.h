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

#ifndef SYMDOC_CASE_FOLD_H_
#define SYMDOC_CASE_FOLD_H_

#include <string>
#include <string_view>

namespace symdoc {

// Unicode simple case folding (one code point in, one code point out), so the
// folded string never changes length in code points. Ill-formed input is
// decoded lossily first.
std::string SimpleCaseFold(std::string_view utf8);

}  // namespace symdoc

#endif  // SYMDOC_CASE_FOLD_H_
