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

#include "symdoc/kind.h"

namespace symdoc {
namespace {

constexpr std::array<std::string_view, kSymbolKindCount> kCodes = {
    "pred", "mode", "struct", "func", "attr"};
constexpr std::array<std::string_view, kSymbolKindCount> kLabels = {
    "Predicate", "Mode", "Structure", "Functor", "Attribute"};

}  // namespace

std::string_view KindCode(SymbolKind kind) { return kCodes[KindIndex(kind)]; }

std::string_view KindLabel(SymbolKind kind) {
  return kLabels[KindIndex(kind)];
}

std::optional<SymbolKind> KindFromCode(std::string_view code) {
  for (std::size_t i = 0; i < kCodes.size(); ++i) {
    if (kCodes[i] == code) return kAllSymbolKinds[i];
  }
  return std::nullopt;
}

}  // namespace symdoc
