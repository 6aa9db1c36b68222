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

#ifndef SYMDOC_SEARCH_INDEX_H_
#define SYMDOC_SEARCH_INDEX_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "symdoc/kind.h"
#include "symdoc/xref.h"

namespace symdoc {

struct SearchEntry {
  SymbolId id;
  std::string display_name;
  std::string normalized_name;  // simple case fold of display_name
  SymbolKind kind = SymbolKind::kPredicate;
  std::string article;

  friend bool operator==(const SearchEntry&, const SearchEntry&) = default;
};

// Entries sorted by (normalized_name, kind, id).
struct SearchTable {
  std::vector<SearchEntry> entries;
};

SearchTable BuildSearchTable(const CrossRefGraph& graph);

// Splits a query on runs of ASCII whitespace into case-folded words.
std::vector<std::string> QueryWords(std::string_view raw_query);

// Entries whose normalized name contains every query word, in table order.
// An empty query matches everything.
std::vector<SearchEntry> Query(const SearchTable& table,
                               std::string_view raw_query);

// Serialized table: {"version":1,"entries":[{"id","name","norm","kind",
// "article"}, ...]} without insignificant whitespace.
std::string SerializeSearchTable(const SearchTable& table);

// Throws IoWriteError.
void EmitSearchTable(const SearchTable& table,
                     const std::filesystem::path& out_path);

// Throws InvalidTableError on unreadable files or format violations.
SearchTable LoadSearchTable(const std::filesystem::path& path);
SearchTable ParseSearchTable(std::string_view json_text);

}  // namespace symdoc

#endif  // SYMDOC_SEARCH_INDEX_H_
