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

#ifndef SYMDOC_KIND_H_
#define SYMDOC_KIND_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace symdoc {

// The five kinds of definable symbol. Declaration order is the order of the
// `data-sym-kind` codes and is used wherever kinds are sorted.
enum class SymbolKind : unsigned char {
  kPredicate = 0,
  kMode = 1,
  kStructure = 2,
  kFunctor = 3,
  kAttribute = 4,
};

inline constexpr std::size_t kSymbolKindCount = 5;

inline constexpr std::array<SymbolKind, kSymbolKindCount> kAllSymbolKinds = {
    SymbolKind::kPredicate, SymbolKind::kMode, SymbolKind::kStructure,
    SymbolKind::kFunctor, SymbolKind::kAttribute};

// Wire code: "pred", "mode", "struct", "func" or "attr".
std::string_view KindCode(SymbolKind kind);

// Human label: "Predicate", "Mode", ...
std::string_view KindLabel(SymbolKind kind);

std::optional<SymbolKind> KindFromCode(std::string_view code);

inline constexpr std::size_t KindIndex(SymbolKind kind) {
  return static_cast<std::size_t>(kind);
}

}  // namespace symdoc

#endif  // SYMDOC_KIND_H_
