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

#include "symdoc/xref.h"

#include <algorithm>
#include <set>
#include <tuple>

#include "symdoc/errors.h"

namespace symdoc {

const SymbolRecord& CrossRefGraph::At(const SymbolId& id) const {
  auto it = symbols_.find(id);
  if (it == symbols_.end()) {
    throw UnknownSymbolError("unknown symbol \"" + id.str() + "\"");
  }
  return it->second;
}

CrossRefGraph BuildGraph(std::span<const ArticleDocument> documents) {
  CrossRefGraph graph;
  for (const auto& doc : documents) {
    for (const auto& def : doc.definitions) {
      SymbolRecord record;
      record.id = SymbolId(def.anchor);
      record.name = def.name;
      record.kind = def.kind;
      record.article = def.anchor.article();
      record.fragment = def.anchor.fragment();
      record.snippet = def.snippet;
      SymbolId id = record.id;
      if (!graph.symbols_.emplace(id, std::move(record)).second) {
        throw DuplicateSymbolError("symbol \"" + id.str() +
                                   "\" is defined twice");
      }
    }
  }

  std::map<SymbolId, std::map<SymbolId, std::size_t>> internal;
  std::map<SymbolId, std::set<AnchorId>> external;
  LinkTally& tally = graph.tally_;
  for (const auto& doc : documents) {
    for (const auto& link : doc.links) {
      ++tally.total;
      if (!link.enclosing_definition) {
        ++tally.outside_definitions;
        continue;
      }
      SymbolId src(*link.enclosing_definition);
      SymbolId dst(link.target);
      if (src == dst) {
        ++tally.self;
      } else if (graph.symbols_.contains(dst)) {
        ++tally.internal;
        ++internal[src][dst];
      } else {
        ++tally.external;
        external[src].insert(link.target);
      }
    }
  }

  for (auto& [id, record] : graph.symbols_) {
    graph.referrers_[id];
    if (auto it = internal.find(id); it != internal.end()) {
      for (const auto& [dst, count] : it->second) {
        record.out_refs.push_back(dst);
        record.out_ref_occurrences.push_back(count);
      }
    }
    if (auto it = external.find(id); it != external.end()) {
      record.external_refs.assign(it->second.begin(), it->second.end());
    }
  }
  for (const auto& [id, record] : graph.symbols_) {
    for (const auto& dst : record.out_refs) graph.referrers_[dst].push_back(id);
  }
  auto key = [&](const SymbolId& id) {
    const SymbolRecord& r = graph.symbols_.at(id);
    return std::tie(r.article, r.name, r.id);
  };
  for (auto& [id, list] : graph.referrers_) {
    std::sort(list.begin(), list.end(),
              [&](const SymbolId& a, const SymbolId& b) {
                return key(a) < key(b);
              });
  }
  return graph;
}

const std::vector<SymbolId>& ReferrersOf(const CrossRefGraph& graph,
                                         const SymbolId& id) {
  auto it = graph.referrers().find(id);
  if (it == graph.referrers().end()) {
    throw UnknownSymbolError("unknown symbol \"" + id.str() + "\"");
  }
  return it->second;
}

StatsReport GraphStats(const CrossRefGraph& graph) {
  StatsReport report;
  report.links = graph.tally();
  report.symbols = graph.symbols().size();
  for (const auto& [id, record] : graph.symbols()) {
    ++report.per_kind[KindIndex(record.kind)];
    report.edges += record.out_refs.size();
    report.external_refs += record.external_refs.size();
  }
  for (const auto& [id, list] : graph.referrers()) {
    report.max_referrers = std::max(report.max_referrers, list.size());
  }
  if (report.symbols > 0) {
    report.mean_referrers = static_cast<double>(report.edges) /
                            static_cast<double>(report.symbols);
  }
  return report;
}

}  // namespace symdoc
