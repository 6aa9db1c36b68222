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

#ifndef SYMDOC_XREF_H_
#define SYMDOC_XREF_H_

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "symdoc/ingest.h"
#include "symdoc/kind.h"

namespace symdoc {

// Corpus-wide identity of a symbol: the canonical `<article>#<fragment>`.
class SymbolId {
 public:
  SymbolId() = default;
  explicit SymbolId(const AnchorId& anchor) : value_(anchor.Canonical()) {}
  explicit SymbolId(std::string canonical) : value_(std::move(canonical)) {}

  const std::string& str() const { return value_; }

  friend auto operator<=>(const SymbolId&, const SymbolId&) = default;

 private:
  std::string value_;
};

struct SymbolRecord {
  SymbolId id;
  std::string name;
  SymbolKind kind = SymbolKind::kPredicate;
  std::string article;
  std::string fragment;
  std::string snippet;
  std::vector<SymbolId> out_refs;       // sorted, unique, never contains id
  std::vector<AnchorId> external_refs;  // sorted, unique, all undefined
  // Link occurrences behind each out_ref, parallel to out_refs. Kept for
  // diagnostics; pages list each referrer once.
  std::vector<std::size_t> out_ref_occurrences;
};

// Where every extracted link went. The four buckets always sum to `total`.
struct LinkTally {
  std::size_t total = 0;
  std::size_t internal = 0;
  std::size_t external = 0;
  std::size_t self = 0;
  std::size_t outside_definitions = 0;
};

class CrossRefGraph {
 public:
  const std::map<SymbolId, SymbolRecord>& symbols() const { return symbols_; }
  const std::map<SymbolId, std::vector<SymbolId>>& referrers() const {
    return referrers_;
  }
  const LinkTally& tally() const { return tally_; }

  bool Contains(const SymbolId& id) const { return symbols_.contains(id); }
  // Throws UnknownSymbolError.
  const SymbolRecord& At(const SymbolId& id) const;

 private:
  friend CrossRefGraph BuildGraph(std::span<const ArticleDocument> documents);

  std::map<SymbolId, SymbolRecord> symbols_;
  std::map<SymbolId, std::vector<SymbolId>> referrers_;
  LinkTally tally_;
};

// One record per definition; links inside a definition's snippet become
// out_refs (target defined) or external_refs (not defined). Duplicates
// collapse and self-links drop. Throws DuplicateSymbolError when two
// definitions share a SymbolId.
CrossRefGraph BuildGraph(std::span<const ArticleDocument> documents);

// Sorted by (article, name, id). Throws UnknownSymbolError.
const std::vector<SymbolId>& ReferrersOf(const CrossRefGraph& graph,
                                         const SymbolId& id);

struct StatsReport {
  std::size_t symbols = 0;
  std::array<std::size_t, kSymbolKindCount> per_kind{};
  std::size_t edges = 0;          // distinct internal (src, dst) pairs
  std::size_t external_refs = 0;  // distinct (src, external anchor) pairs
  std::size_t max_referrers = 0;
  double mean_referrers = 0.0;
  LinkTally links;
};

StatsReport GraphStats(const CrossRefGraph& graph);

}  // namespace symdoc

#endif  // SYMDOC_XREF_H_
