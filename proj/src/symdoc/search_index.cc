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

#include "symdoc/search_index.h"

#include <algorithm>
#include <tuple>

#include "json.hpp"
#include "symdoc/case_fold.h"
#include "symdoc/errors.h"
#include "symdoc/file_io.h"
#include "symdoc/text.h"

namespace symdoc {

SearchTable BuildSearchTable(const CrossRefGraph& graph) {
  SearchTable table;
  table.entries.reserve(graph.symbols().size());
  for (const auto& [id, record] : graph.symbols()) {
    SearchEntry entry;
    entry.id = id;
    entry.display_name = record.name;
    entry.normalized_name = SimpleCaseFold(record.name);
    entry.kind = record.kind;
    entry.article = record.article;
    table.entries.push_back(std::move(entry));
  }
  std::sort(table.entries.begin(), table.entries.end(),
            [](const SearchEntry& a, const SearchEntry& b) {
              return std::tie(a.normalized_name, a.kind, a.id) <
                     std::tie(b.normalized_name, b.kind, b.id);
            });
  return table;
}

std::vector<std::string> QueryWords(std::string_view raw_query) {
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < raw_query.size()) {
    while (i < raw_query.size() && IsAsciiSpace(raw_query[i])) ++i;
    std::size_t j = i;
    while (j < raw_query.size() && !IsAsciiSpace(raw_query[j])) ++j;
    if (j > i) words.push_back(SimpleCaseFold(raw_query.substr(i, j - i)));
    i = j;
  }
  return words;
}

std::vector<SearchEntry> Query(const SearchTable& table,
                               std::string_view raw_query) {
  std::vector<std::string> words = QueryWords(raw_query);
  std::vector<SearchEntry> out;
  for (const auto& entry : table.entries) {
    bool all = std::all_of(words.begin(), words.end(), [&](const auto& w) {
      return entry.normalized_name.find(w) != std::string::npos;
    });
    if (all) out.push_back(entry);
  }
  return out;
}

std::string SerializeSearchTable(const SearchTable& table) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& e : table.entries) {
    nlohmann::ordered_json obj;
    obj["id"] = e.id.str();
    obj["name"] = e.display_name;
    obj["norm"] = e.normalized_name;
    obj["kind"] = std::string(KindCode(e.kind));
    obj["article"] = e.article;
    entries.push_back(std::move(obj));
  }
  nlohmann::ordered_json doc;
  doc["version"] = 1;
  doc["entries"] = std::move(entries);
  return doc.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

void EmitSearchTable(const SearchTable& table,
                     const std::filesystem::path& out_path) {
  WriteFile(out_path, SerializeSearchTable(table));
}

SearchTable ParseSearchTable(std::string_view json_text) {
  nlohmann::json doc = nlohmann::json::parse(json_text, nullptr,
                                             /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw InvalidTableError("search table is not a JSON object");
  }
  auto version = doc.find("version");
  if (version == doc.end() || !version->is_number_integer() || *version != 1) {
    throw InvalidTableError("search table version must be 1");
  }
  auto entries = doc.find("entries");
  if (entries == doc.end() || !entries->is_array()) {
    throw InvalidTableError("search table has no entries array");
  }
  SearchTable table;
  table.entries.reserve(entries->size());
  for (const auto& obj : *entries) {
    auto field = [&](const char* key) -> std::string {
      if (!obj.is_object()) throw InvalidTableError("entry is not an object");
      auto it = obj.find(key);
      if (it == obj.end() || !it->is_string()) {
        throw InvalidTableError(std::string("entry lacks string \"") + key +
                                "\"");
      }
      return it->get<std::string>();
    };
    SearchEntry e;
    e.id = SymbolId(field("id"));
    e.display_name = field("name");
    e.normalized_name = field("norm");
    std::optional<SymbolKind> kind = KindFromCode(field("kind"));
    if (!kind) throw InvalidTableError("entry has unknown kind");
    e.kind = *kind;
    e.article = field("article");
    if (e.id.str().empty()) throw InvalidTableError("entry has empty id");
    table.entries.push_back(std::move(e));
  }
  return table;
}

SearchTable LoadSearchTable(const std::filesystem::path& path) {
  std::optional<std::string> text = ReadWholeFile(path);
  if (!text) throw InvalidTableError("cannot read " + path.string());
  return ParseSearchTable(*text);
}

}  // namespace symdoc
