/* Exercises the C interface from C. */
#include <statelab/statelab.h>

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static const char* kTable =
    "alphabet: a b\n"
    "states: p q\n"
    "initial: p\n"
    "accepting: q\n"
    "trans p a -> p & q\n"
    "trans p b -> q\n"
    "trans q a -> q\n"
    "trans q b -> p | q\n";

int main(void) {
  sl_automaton* lex = NULL;
  int accepted = -1;
  EXPECT(sl_automaton_gallery("lex", &lex) == SL_OK);
  EXPECT(sl_automaton_accepts(lex, "0#1", &accepted) == SL_OK && accepted == 1);
  EXPECT(sl_automaton_accepts(lex, "1#0", &accepted) == SL_OK && accepted == 0);
  EXPECT(sl_automaton_accepts(lex, "0x1", &accepted) == SL_ERR_INPUT);
  EXPECT(strstr(sl_last_error(), "'x'") != NULL);

  char* kind = NULL;
  EXPECT(sl_automaton_kind(lex, 3, &kind) == SL_OK && strcmp(kind, "alternating") == 0);
  sl_string_free(kind);

  char* json = NULL;
  int passed = 0;
  EXPECT(sl_automaton_profile(lex, 10, "n", 6, &json, &passed) == SL_OK && passed == 1);
  EXPECT(strstr(json, "\"verdict\":\"pass\"") != NULL);
  sl_string_free(json);
  EXPECT(sl_automaton_profile(lex, 10, "n^", 6, &json, &passed) == SL_ERR_INPUT);
  EXPECT(sl_automaton_serialize(lex, &json) == SL_ERR_UNSUPPORTED);
  sl_automaton_free(lex);

  sl_automaton* missing = NULL;
  EXPECT(sl_automaton_gallery("nope", &missing) == SL_ERR_UNKNOWN_REF && missing == NULL);
  EXPECT(sl_automaton_gallery("primes", &missing) == SL_ERR_UNSUPPORTED);
  EXPECT(sl_automaton_load("alphabet: a\nstates: s\ninitial: s\ntrans s a -> t\n", "bad", &missing) ==
         SL_ERR_PARSE);
  EXPECT(strstr(sl_last_error(), "line 4") != NULL);

  sl_automaton* table = NULL;
  sl_automaton* det = NULL;
  EXPECT(sl_automaton_load(kTable, "tiny", &table) == SL_OK);
  EXPECT(sl_automaton_determinize(table, &det) == SL_OK);
  char* text = NULL;
  EXPECT(sl_automaton_serialize(table, &text) == SL_OK && strncmp(text, "alphabet: a b\n", 14) == 0);
  sl_string_free(text);
  const char* words[] = {"", "a", "b", "ab", "ba", "bab", "aab", "abba"};
  for (size_t i = 0; i < sizeof words / sizeof *words; ++i) {
    int x = -1, y = -2;
    EXPECT(sl_automaton_accepts(table, words[i], &x) == SL_OK);
    EXPECT(sl_automaton_accepts(det, words[i], &y) == SL_OK);
    EXPECT(x == y);
  }
  sl_automaton_free(det);

  sl_language* lang = NULL;
  EXPECT(sl_language_from_automaton(table, &lang) == SL_OK);
  sl_automaton_free(table);
  int member = -1;
  EXPECT(sl_language_member(lang, "b", &member) == SL_OK && member == 1);
  sl_language_free(lang);

  sl_language* ceq = NULL;
  sl_options opts = {0, 1};
  EXPECT(sl_language_gallery("count-eq3", &ceq) == SL_OK);
  EXPECT(sl_count_quotients(ceq, 1, 3, NULL, 0, &opts, &json) == SL_OK);
  EXPECT(strstr(json, "\"class_count_lower_bound\":4") != NULL);
  sl_string_free(json);
  sl_options tight = {10, 1};
  EXPECT(sl_count_quotients(ceq, 4, 4, NULL, 0, &tight, &json) == SL_ERR_BUDGET);
  sl_language_free(ceq);

  sl_language* lexp = NULL;
  const char* rows[] = {"", "#0", "#1", "#0#1"};
  EXPECT(sl_language_gallery("l-exp", &lexp) == SL_OK);
  EXPECT(sl_query_table(lexp, 1, 0, rows, 4, 1, NULL, &json) == SL_OK);
  EXPECT(strstr(json, "\"distinct_row_count_lower_bound\":4") != NULL);
  sl_string_free(json);
  sl_language_free(lexp);

  sl_language* primes = NULL;
  char* witness = NULL;
  EXPECT(sl_language_gallery("primes", &primes) == SL_OK);
  EXPECT(sl_distinguish(primes, "11", "10", 0, &witness) == SL_OK && witness != NULL && strcmp(witness, "ε") == 0);
  sl_string_free(witness);
  EXPECT(sl_distinguish(primes, "11", "11", 4, &witness) == SL_OK && witness == NULL);
  sl_language_free(primes);

  sl_language* hier = NULL;
  EXPECT(sl_language_gallery("l-hier:2", &hier) == SL_OK);
  EXPECT(sl_language_member(hier, "◊◊01#00#01", &member) == SL_OK && member == 1);
  sl_language_free(hier);

  sl_prob_automaton* rabin = NULL;
  char* prob = NULL;
  EXPECT(sl_prob_rabin(&rabin) == SL_OK);
  EXPECT(sl_prob_probability(rabin, "11#11", &prob) == SL_OK && strcmp(prob, "9/16") == 0);
  sl_string_free(prob);
  EXPECT(sl_prob_above(rabin, "1/2", "11", &member) == SL_OK && member == 1);
  EXPECT(sl_prob_above(rabin, "3/2", "11", &member) == SL_ERR_INPUT);
  sl_prob_free(rabin);
  char* suffix = NULL;
  EXPECT(sl_prob_separate("0", "1", &suffix) == SL_OK && suffix[0] == '#');
  sl_string_free(suffix);
  EXPECT(sl_prob_separate("0", "0", &suffix) == SL_ERR_INPUT);

  sl_prob_automaton* bad = NULL;
  EXPECT(sl_prob_load("alphabet: a\nstates: s\ninitial: s\naccepting: s\nptrans s a -> s:1/3\n", NULL, &bad) ==
         SL_ERR_INPUT);

  char* report = NULL;
  EXPECT(sl_run_experiment("exp-alt", "{\"n\": 1}", &report, &passed) == SL_OK && passed == 1);
  char* csv = NULL;
  EXPECT(sl_render(report, "csv", &csv) == SL_OK && strncmp(csv, "key,value\n", 10) == 0);
  sl_string_free(csv);
  EXPECT(sl_render(report, "yaml", &csv) == SL_ERR_INPUT);
  sl_string_free(report);
  EXPECT(sl_run_experiment("exp-alt", "{bad json", &report, &passed) == SL_ERR_INPUT);
  EXPECT(sl_run_experiment("nope", NULL, &report, &passed) == SL_ERR_UNKNOWN_REF);

  EXPECT(sl_gallery_info("lex", &json) == SL_OK && strstr(json, "\"declared\"") != NULL);
  sl_string_free(json);
  EXPECT(sl_automaton_accepts(NULL, "0", &accepted) == SL_ERR_INPUT);
  EXPECT(strcmp(sl_status_string(SL_ERR_BUDGET), "budget exceeded") == 0);

  if (failures == 0) printf("C API: all checks passed\n");
  return failures == 0 ? 0 : 1;
}
