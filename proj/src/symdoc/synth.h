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

// Seeded generator of conforming article corpora together with the ground
// truth every later stage must reproduce.
//
// Each symbol gets kLinkSlotsPerSymbol link slots inside its definition block.
// A slot is filled with probability edge_density; a filled slot is external
// with probability external_fraction (an undefined fragment of a corpus
// article, or an article outside the corpus), otherwise it targets a symbol
// drawn uniformly from all definitions, itself included. Repeated targets and
// self-links are emitted into the HTML but collapse or vanish in the
// manifest, mirroring what the graph builder must do. Links in theorem blocks
// between definitions never count.

#ifndef SYMDOC_SYNTH_H_
#define SYMDOC_SYNTH_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symdoc/kind.h"

namespace symdoc {

struct SynthesisSpec {
  std::uint32_t articles = 1;
  std::uint32_t symbols_total = 1;
  double edge_density = 0.0;
  double external_fraction = 0.0;
  std::uint64_t seed = 0;
};

inline constexpr int kLinkSlotsPerSymbol = 10;
inline constexpr std::string_view kSynthManifestFileName =
    "synth-manifest.json";

// Throws ConfigError.
void ValidateSynthesisSpec(const SynthesisSpec& spec);

struct SynthSymbol {
  std::string id;
  std::string name;
  SymbolKind kind = SymbolKind::kPredicate;
  std::string article;
};

struct SynthesisManifest {
  SynthesisSpec spec;
  std::vector<std::string> articles;  // stems, sorted
  std::vector<SynthSymbol> symbols;   // sorted by id
  std::vector<std::pair<std::string, std::string>> edges;  // (src, dst) ids
  // (src id, canonical target anchor) for undefined targets.
  std::vector<std::pair<std::string, std::string>> external;
  std::array<std::size_t, kSymbolKindCount> per_kind{};
};

std::string SerializeSynthesisManifest(const SynthesisManifest& manifest);

// Deterministic for a given spec. Writes `<stem>.html` per article plus
// synth-manifest.json. Throws ConfigError or IoWriteError.
SynthesisManifest SynthesizeCorpus(const SynthesisSpec& spec,
                                   const std::filesystem::path& out_dir);

}  // namespace symdoc

#endif  // SYMDOC_SYNTH_H_
