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

#ifndef SYMDOC_ASSETS_H_
#define SYMDOC_ASSETS_H_

#include <span>
#include <string_view>

#include "symdoc/kind.h"

namespace symdoc {

struct StaticAsset {
  std::string_view path;  // relative to the site root
  std::string_view content;
};

// Everything under assets/: stylesheet, client script, one icon per kind and
// the not-found stub.
std::span<const StaticAsset> FrontendAssets();

// "assets/icons/<code>.svg"
std::string_view KindIconPath(SymbolKind kind);

inline constexpr std::string_view kNotFoundPagePath = "assets/404.html";

}  // namespace symdoc

#endif  // SYMDOC_ASSETS_H_
