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

#include "symdoc/symdoc.h"

#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "symdoc/errors.h"
#include "symdoc/ingest.h"
#include "symdoc/pipeline.h"
#include "symdoc/search_index.h"
#include "symdoc/synth.h"

#ifndef SYMDOC_VERSION
#define SYMDOC_VERSION "0.0.0"
#endif

struct symdoc_build_report {
  symdoc::BuildResult result;
  std::string manifest_path;
  std::string summary_text;
  std::string summary_json;
};

struct symdoc_article {
  symdoc::ArticleDocument doc;
  std::vector<std::string> ids;
};

struct symdoc_table {
  symdoc::SearchTable table;
};

struct symdoc_matches {
  std::vector<symdoc::SearchEntry> entries;
};

namespace {

thread_local std::string g_last_error;

symdoc_status Fail(symdoc_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Maps the exception in flight onto a status code.
symdoc_status TranslateException() {
  try {
    throw;
  } catch (const symdoc::IoDecodeError& e) {
    return Fail(SYMDOC_ERR_IO_DECODE, e.what());
  } catch (const symdoc::CorpusEmptyError& e) {
    return Fail(SYMDOC_ERR_CORPUS_EMPTY, e.what());
  } catch (const symdoc::IoWriteError& e) {
    return Fail(SYMDOC_ERR_IO_WRITE, e.what());
  } catch (const symdoc::UnknownSymbolError& e) {
    return Fail(SYMDOC_ERR_UNKNOWN_SYMBOL, e.what());
  } catch (const symdoc::DuplicateSymbolError& e) {
    return Fail(SYMDOC_ERR_DUPLICATE_SYMBOL, e.what());
  } catch (const symdoc::InvalidTableError& e) {
    return Fail(SYMDOC_ERR_INVALID_TABLE, e.what());
  } catch (const symdoc::ConfigError& e) {
    return Fail(SYMDOC_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(SYMDOC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(SYMDOC_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(SYMDOC_ERR_INTERNAL, "unknown error");
  }
}

symdoc_status Ok() {
  g_last_error.clear();
  return SYMDOC_OK;
}

}  // namespace

extern "C" {

const char* symdoc_version(void) { return SYMDOC_VERSION; }

const char* symdoc_status_name(symdoc_status status) {
  switch (status) {
    case SYMDOC_OK:
      return "ok";
    case SYMDOC_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case SYMDOC_ERR_IO_DECODE:
      return "decode error";
    case SYMDOC_ERR_CORPUS_EMPTY:
      return "corpus empty";
    case SYMDOC_ERR_IO_WRITE:
      return "write error";
    case SYMDOC_ERR_UNKNOWN_SYMBOL:
      return "unknown symbol";
    case SYMDOC_ERR_DUPLICATE_SYMBOL:
      return "duplicate symbol";
    case SYMDOC_ERR_INVALID_TABLE:
      return "invalid search table";
    case SYMDOC_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* symdoc_last_error(void) { return g_last_error.c_str(); }

const char* symdoc_kind_code(symdoc_kind kind) {
  if (kind < SYMDOC_KIND_PREDICATE || kind > SYMDOC_KIND_ATTRIBUTE) {
    return nullptr;
  }
  // Wire codes are static literals, so .data() is NUL-terminated.
  return symdoc::KindCode(static_cast<symdoc::SymbolKind>(kind)).data();
}

void symdoc_build_options_init(symdoc_build_options* options) {
  if (options == nullptr) return;
  *options = symdoc_build_options{};
}

symdoc_status symdoc_build(const symdoc_build_options* options,
                           symdoc_build_report** report) {
  if (options == nullptr || report == nullptr) {
    return Fail(SYMDOC_ERR_INVALID_ARGUMENT, "null argument");
  }
  if (options->input_dir == nullptr || options->output_dir == nullptr) {
    return Fail(SYMDOC_ERR_INVALID_ARGUMENT,
                "input_dir and output_dir are required");
  }
  try {
    symdoc::BuildConfig config;
    config.input_dir = options->input_dir;
    config.output_dir = options->output_dir;
    if (options->base_url != nullptr) {
      config.external_base_url = options->base_url;
    }
    if (options->site_title != nullptr) config.site_title = options->site_title;
    config.jobs = options->jobs == 0 ? symdoc::DefaultJobs() : options->jobs;
    config.recursive = options->recursive != 0;
    config.dump_graph = options->dump_graph != 0;
    auto out = std::make_unique<symdoc_build_report>();
    out->result = symdoc::RunBuild(config);
    out->manifest_path = out->result.manifest_path.string();
    out->summary_text = symdoc::SummaryText(out->result);
    out->summary_json = symdoc::SummaryJson(out->result);
    *report = out.release();
    return Ok();
  } catch (...) {
    return TranslateException();
  }
}

void symdoc_build_report_free(symdoc_build_report* report) { delete report; }

size_t symdoc_build_report_articles(const symdoc_build_report* r) {
  return r ? r->result.articles : 0;
}

size_t symdoc_build_report_symbols(const symdoc_build_report* r) {
  return r ? r->result.stats.symbols : 0;
}

size_t symdoc_build_report_kind_count(const symdoc_build_report* r,
                                      symdoc_kind kind) {
  if (r == nullptr || kind < 0 || kind >= SYMDOC_KIND_COUNT) return 0;
  return r->result.stats.per_kind[static_cast<std::size_t>(kind)];
}

size_t symdoc_build_report_edges(const symdoc_build_report* r) {
  return r ? r->result.stats.edges : 0;
}

size_t symdoc_build_report_external_refs(const symdoc_build_report* r) {
  return r ? r->result.stats.external_refs : 0;
}

size_t symdoc_build_report_warning_count(const symdoc_build_report* r) {
  return r ? r->result.warnings.size() : 0;
}

const char* symdoc_build_report_warning(const symdoc_build_report* r,
                                        size_t index) {
  if (r == nullptr || index >= r->result.warnings.size()) return nullptr;
  return r->result.warnings[index].c_str();
}

double symdoc_build_report_elapsed_ms(const symdoc_build_report* r) {
  if (r == nullptr) return 0.0;
  double total = 0.0;
  for (const auto& t : r->result.timings) total += t.milliseconds;
  return total;
}

const char* symdoc_build_report_manifest_path(const symdoc_build_report* r) {
  return r ? r->manifest_path.c_str() : nullptr;
}

const char* symdoc_build_report_summary_text(const symdoc_build_report* r) {
  return r ? r->summary_text.c_str() : nullptr;
}

const char* symdoc_build_report_summary_json(const symdoc_build_report* r) {
  return r ? r->summary_json.c_str() : nullptr;
}

symdoc_status symdoc_synthesize(const symdoc_synth_options* options,
                                symdoc_synth_totals* totals) {
  if (options == nullptr || options->output_dir == nullptr) {
    return Fail(SYMDOC_ERR_INVALID_ARGUMENT, "output_dir is required");
  }
  try {
    symdoc::SynthesisSpec spec;
    spec.articles = options->articles;
    spec.symbols_total = options->symbols;
    spec.edge_density = options->density;
    spec.external_fraction = options->external_fraction;
    spec.seed = options->seed;
    symdoc::SynthesisManifest m =
        symdoc::SynthesizeCorpus(spec, options->output_dir);
    if (totals != nullptr) {
      totals->symbols = m.symbols.size();
      for (std::size_t k = 0; k < symdoc::kSymbolKindCount; ++k) {
        totals->per_kind[k] = m.per_kind[k];
      }
      totals->edges = m.edges.size();
      totals->external_refs = m.external.size();
    }
    return Ok();
  } catch (...) {
    return TranslateException();
  }
}

symdoc_status symdoc_article_parse(const char* stem, const char* bytes,
                                   size_t length, symdoc_article** article) {
  if (stem == nullptr || article == nullptr || (bytes == nullptr && length)) {
    return Fail(SYMDOC_ERR_INVALID_ARGUMENT, "null argument");
  }
  try {
    auto out = std::make_unique<symdoc_article>();
    out->doc = symdoc::ParseArticle(
        stem, std::string_view(bytes == nullptr ? "" : bytes, length));
    for (const auto& def : out->doc.definitions) {
      out->ids.push_back(def.anchor.Canonical());
    }
    *article = out.release();
    return Ok();
  } catch (...) {
    return TranslateException();
  }
}

void symdoc_article_free(symdoc_article* article) { delete article; }

size_t symdoc_article_definition_count(const symdoc_article* a) {
  return a ? a->doc.definitions.size() : 0;
}

size_t symdoc_article_link_count(const symdoc_article* a) {
  return a ? a->doc.links.size() : 0;
}

size_t symdoc_article_warning_count(const symdoc_article* a) {
  return a ? a->doc.warnings.size() : 0;
}

symdoc_status symdoc_article_definition(const symdoc_article* a, size_t index,
                                        symdoc_definition_view* out) {
  if (a == nullptr || out == nullptr) {
    return Fail(SYMDOC_ERR_INVALID_ARGUMENT, "null argument");
  }
  if (index >= a->doc.definitions.size()) {
    return Fail(SYMDOC_ERR_INVALID_ARGUMENT, "definition index out of range");
  }
  const auto& def = a->doc.definitions[index];
  out->id = a->ids[index].c_str();
  out->name = def.name.c_str();
  out->kind = static_cast<symdoc_kind>(def.kind);
  out->snippet = def.snippet.c_str();
  out->span_begin = def.byte_span.begin;
  out->span_end = def.byte_span.end;
  return Ok();
}

symdoc_status symdoc_table_load(const char* path, symdoc_table** table) {
  if (path == nullptr || table == nullptr) {
    return Fail(SYMDOC_ERR_INVALID_ARGUMENT, "null argument");
  }
  try {
    auto out = std::make_unique<symdoc_table>();
    out->table = symdoc::LoadSearchTable(path);
    *table = out.release();
    return Ok();
  } catch (...) {
    return TranslateException();
  }
}

void symdoc_table_free(symdoc_table* table) { delete table; }

size_t symdoc_table_size(const symdoc_table* table) {
  return table ? table->table.entries.size() : 0;
}

symdoc_status symdoc_table_query(const symdoc_table* table, const char* query,
                                 symdoc_matches** matches) {
  if (table == nullptr || matches == nullptr) {
    return Fail(SYMDOC_ERR_INVALID_ARGUMENT, "null argument");
  }
  try {
    auto out = std::make_unique<symdoc_matches>();
    out->entries = symdoc::Query(table->table, query == nullptr ? "" : query);
    *matches = out.release();
    return Ok();
  } catch (...) {
    return TranslateException();
  }
}

void symdoc_matches_free(symdoc_matches* matches) { delete matches; }

size_t symdoc_matches_size(const symdoc_matches* matches) {
  return matches ? matches->entries.size() : 0;
}

symdoc_status symdoc_matches_entry(const symdoc_matches* matches, size_t index,
                                   symdoc_entry_view* out) {
  if (matches == nullptr || out == nullptr) {
    return Fail(SYMDOC_ERR_INVALID_ARGUMENT, "null argument");
  }
  if (index >= matches->entries.size()) {
    return Fail(SYMDOC_ERR_INVALID_ARGUMENT, "match index out of range");
  }
  const auto& e = matches->entries[index];
  out->id = e.id.str().c_str();
  out->name = e.display_name.c_str();
  out->norm = e.normalized_name.c_str();
  out->kind = symdoc::KindCode(e.kind).data();
  out->article = e.article.c_str();
  return Ok();
}

}  // extern "C"
