/*
 * Copyright 2026 The symdoc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * symdoc: symbol reference generator for hyperlinked article corpora.
 *
 * C interface of libsymdoc. Every function returns a symdoc_status; on
 * failure a description is available from symdoc_last_error() on the same
 * thread until the next call into the library. Objects are opaque handles
 * released with their matching *_free function; strings handed out by an
 * object stay valid until that object is freed.
 */

#ifndef SYMDOC_SYMDOC_H_
#define SYMDOC_SYMDOC_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SYMDOC_BUILDING_LIBRARY)
#    define SYMDOC_API __declspec(dllexport)
#  else
#    define SYMDOC_API __declspec(dllimport)
#  endif
#else
#  define SYMDOC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum symdoc_status {
  SYMDOC_OK = 0,
  SYMDOC_ERR_INVALID_ARGUMENT = 1, /* null pointer, bad option value */
  SYMDOC_ERR_IO_DECODE = 2,        /* empty article or invalid stem */
  SYMDOC_ERR_CORPUS_EMPTY = 3,     /* no parseable article found */
  SYMDOC_ERR_IO_WRITE = 4,
  SYMDOC_ERR_UNKNOWN_SYMBOL = 5,
  SYMDOC_ERR_DUPLICATE_SYMBOL = 6,
  SYMDOC_ERR_INVALID_TABLE = 7, /* unreadable or malformed search table */
  SYMDOC_ERR_INTERNAL = 8
} symdoc_status;

/* Same order as the data-sym-kind codes pred, mode, struct, func, attr. */
typedef enum symdoc_kind {
  SYMDOC_KIND_PREDICATE = 0,
  SYMDOC_KIND_MODE = 1,
  SYMDOC_KIND_STRUCTURE = 2,
  SYMDOC_KIND_FUNCTOR = 3,
  SYMDOC_KIND_ATTRIBUTE = 4
} symdoc_kind;

#define SYMDOC_KIND_COUNT 5

SYMDOC_API const char* symdoc_version(void);
SYMDOC_API const char* symdoc_status_name(symdoc_status status);
SYMDOC_API const char* symdoc_last_error(void);
/* "pred", "mode", "struct", "func", "attr"; NULL for out-of-range values. */
SYMDOC_API const char* symdoc_kind_code(symdoc_kind kind);

/* ---- build ------------------------------------------------------------ */

typedef struct symdoc_build_options {
  const char* input_dir;
  const char* output_dir;
  const char* base_url;   /* NULL: default external base URL */
  const char* site_title; /* NULL: default title */
  unsigned jobs;          /* 0: number of logical processors */
  int recursive;
  int dump_graph;
} symdoc_build_options;

typedef struct symdoc_build_report symdoc_build_report;

SYMDOC_API void symdoc_build_options_init(symdoc_build_options* options);

/* Runs the whole pipeline. On SYMDOC_OK, *report receives a new report. */
SYMDOC_API symdoc_status symdoc_build(const symdoc_build_options* options,
                                      symdoc_build_report** report);
SYMDOC_API void symdoc_build_report_free(symdoc_build_report* report);

SYMDOC_API size_t symdoc_build_report_articles(const symdoc_build_report* r);
SYMDOC_API size_t symdoc_build_report_symbols(const symdoc_build_report* r);
SYMDOC_API size_t symdoc_build_report_kind_count(const symdoc_build_report* r,
                                                 symdoc_kind kind);
SYMDOC_API size_t symdoc_build_report_edges(const symdoc_build_report* r);
SYMDOC_API size_t symdoc_build_report_external_refs(
    const symdoc_build_report* r);
SYMDOC_API size_t symdoc_build_report_warning_count(
    const symdoc_build_report* r);
SYMDOC_API const char* symdoc_build_report_warning(const symdoc_build_report* r,
                                                   size_t index);
/* Sum of all stage timings in milliseconds. */
SYMDOC_API double symdoc_build_report_elapsed_ms(const symdoc_build_report* r);
SYMDOC_API const char* symdoc_build_report_manifest_path(
    const symdoc_build_report* r);
SYMDOC_API const char* symdoc_build_report_summary_text(
    const symdoc_build_report* r);
SYMDOC_API const char* symdoc_build_report_summary_json(
    const symdoc_build_report* r);

/* ---- corpus synthesis ------------------------------------------------- */

typedef struct symdoc_synth_options {
  uint32_t articles;
  uint32_t symbols;
  double density;
  double external_fraction;
  uint64_t seed;
  const char* output_dir;
} symdoc_synth_options;

typedef struct symdoc_synth_totals {
  size_t symbols;
  size_t per_kind[SYMDOC_KIND_COUNT];
  size_t edges;
  size_t external_refs;
} symdoc_synth_totals;

/* Writes the corpus and synth-manifest.json; totals may be NULL. */
SYMDOC_API symdoc_status symdoc_synthesize(const symdoc_synth_options* options,
                                           symdoc_synth_totals* totals);

/* ---- single article --------------------------------------------------- */

typedef struct symdoc_article symdoc_article;

SYMDOC_API symdoc_status symdoc_article_parse(const char* stem,
                                              const char* bytes, size_t length,
                                              symdoc_article** article);
SYMDOC_API void symdoc_article_free(symdoc_article* article);
SYMDOC_API size_t symdoc_article_definition_count(const symdoc_article* a);
SYMDOC_API size_t symdoc_article_link_count(const symdoc_article* a);
SYMDOC_API size_t symdoc_article_warning_count(const symdoc_article* a);

typedef struct symdoc_definition_view {
  const char* id; /* article#fragment */
  const char* name;
  symdoc_kind kind;
  const char* snippet;
  size_t span_begin;
  size_t span_end;
} symdoc_definition_view;

SYMDOC_API symdoc_status symdoc_article_definition(
    const symdoc_article* a, size_t index, symdoc_definition_view* out);

/* ---- search ----------------------------------------------------------- */

typedef struct symdoc_table symdoc_table;
typedef struct symdoc_matches symdoc_matches;

typedef struct symdoc_entry_view {
  const char* id;
  const char* name;
  const char* norm;
  const char* kind; /* wire code */
  const char* article;
} symdoc_entry_view;

SYMDOC_API symdoc_status symdoc_table_load(const char* path,
                                           symdoc_table** table);
SYMDOC_API void symdoc_table_free(symdoc_table* table);
SYMDOC_API size_t symdoc_table_size(const symdoc_table* table);

/* Whitespace-separated words, case-insensitive, all must occur in the name.
 * Matches keep table order; an empty query matches every entry. */
SYMDOC_API symdoc_status symdoc_table_query(const symdoc_table* table,
                                            const char* query,
                                            symdoc_matches** matches);
SYMDOC_API void symdoc_matches_free(symdoc_matches* matches);
SYMDOC_API size_t symdoc_matches_size(const symdoc_matches* matches);
SYMDOC_API symdoc_status symdoc_matches_entry(const symdoc_matches* matches,
                                              size_t index,
                                              symdoc_entry_view* out);

#ifdef __cplusplus
}
#endif

#endif /* SYMDOC_SYMDOC_H_ */
