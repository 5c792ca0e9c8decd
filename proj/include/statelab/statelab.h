/* C interface to the statelab library. Every handle is opaque and owned by
 * the caller; strings returned through char** are freed with sl_string_free.
 * Words may use "ε" for the empty word and "◊" / "♯" for the lozenge and
 * sharp letters. On failure a function returns a non-zero status and
 * sl_last_error() describes it (per thread). */
#ifndef STATELAB_H
#define STATELAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SL_API __declspec(dllexport)
#else
#define SL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sl_status {
  SL_OK = 0,
  SL_ERR_INPUT = 1,
  SL_ERR_PARSE = 2,
  SL_ERR_MODEL = 3,
  SL_ERR_KIND = 4,
  SL_ERR_UNSUPPORTED = 5,
  SL_ERR_BUDGET = 6,
  SL_ERR_UNKNOWN_REF = 7,
  SL_ERR_INTERNAL = 8
} sl_status;

typedef struct sl_automaton sl_automaton;
typedef struct sl_language sl_language;
typedef struct sl_prob_automaton sl_prob_automaton;

typedef struct sl_options {
  uint64_t budget;  /* membership queries; 0 selects the default */
  unsigned threads; /* 0 selects the hardware concurrency */
} sl_options;

SL_API const char* sl_version(void);
SL_API const char* sl_status_string(sl_status status);
SL_API const char* sl_last_error(void);
SL_API void sl_string_free(char* s);

/* JSON array of gallery names and of the experiment catalog. */
SL_API sl_status sl_gallery_names(char** json);
SL_API sl_status sl_experiment_catalog(char** json);
/* JSON object: name, alphabet, has_automaton, validation_length and, when
 * the entry declares one, its class claim {class, C, max_n}. */
SL_API sl_status sl_gallery_info(const char* name, char** json);

/* Automata: gallery entries or interchange text. */
SL_API sl_status sl_automaton_gallery(const char* name, sl_automaton** out);
SL_API sl_status sl_automaton_load(const char* text, const char* name, sl_automaton** out);
SL_API void sl_automaton_free(sl_automaton* automaton);
SL_API sl_status sl_automaton_name(const sl_automaton* automaton, char** name);
SL_API sl_status sl_automaton_accepts(const sl_automaton* automaton, const char* word, int* accepted);
SL_API sl_status sl_automaton_kind(const sl_automaton* automaton, size_t depth, char** kind);
/* Table automata only (loaded or determinized). */
SL_API sl_status sl_automaton_serialize(const sl_automaton* automaton, char** text);
SL_API sl_status sl_automaton_determinize(const sl_automaton* automaton, sl_automaton** out);
/* Profile for n = 0..n_max as JSON. With bound_class non-NULL ("const",
 * "n", "n^k", "2^n") a bound check against constant * f(n) is attached and
 * *passed receives its verdict (1 when no bound is given). */
SL_API sl_status sl_automaton_profile(const sl_automaton* automaton, size_t n_max, const char* bound_class,
                                      uint64_t constant, char** json, int* passed);

/* Languages: gallery oracles or the language of an automaton. */
SL_API sl_status sl_language_gallery(const char* name, sl_language** out);
SL_API sl_status sl_language_from_automaton(const sl_automaton* automaton, sl_language** out);
SL_API void sl_language_free(sl_language* language);
SL_API sl_status sl_language_member(const sl_language* language, const char* word, int* member);
SL_API sl_status sl_count_quotients(const sl_language* language, size_t order, size_t witness_length,
                                    const char* const* extra, size_t extra_count, const sl_options* options,
                                    char** json);
/* Rows are A^{<=row_length} when rows is NULL, else the given words. */
SL_API sl_status sl_query_table(const sl_language* language, size_t order, size_t row_length,
                                const char* const* rows, size_t row_count, int dump, const sl_options* options,
                                char** json);
/* *witness is NULL when no witness of length <= max_length exists. */
SL_API sl_status sl_distinguish(const sl_language* language, const char* u, const char* v, size_t max_length,
                                char** witness);

/* Probabilistic automata with exact rational arithmetic. */
SL_API sl_status sl_prob_rabin(sl_prob_automaton** out);
SL_API sl_status sl_prob_load(const char* text, const char* name, sl_prob_automaton** out);
SL_API void sl_prob_free(sl_prob_automaton* automaton);
SL_API sl_status sl_prob_probability(const sl_prob_automaton* automaton, const char* word, char** rational);
SL_API sl_status sl_prob_above(const sl_prob_automaton* automaton, const char* threshold, const char* word,
                               int* member);
SL_API sl_status sl_prob_separate(const char* u, const char* v, char** suffix);

/* Experiments. params_json may be NULL or a JSON object of overrides. */
SL_API sl_status sl_run_experiment(const char* id, const char* params_json, char** report_json, int* passed);
/* Renders any JSON report as "json", "csv" or "text". */
SL_API sl_status sl_render(const char* json, const char* format, char** out);

#ifdef __cplusplus
}
#endif

#endif
