#include "statelab/statelab.h"

#include <cstring>
#include <string>

#include "statelab/error.hpp"
#include "statelab/experiments.hpp"
#include "statelab/gallery.hpp"
#include "statelab/interchange.hpp"
#include "statelab/prob.hpp"
#include "statelab/profiler.hpp"
#include "statelab/quotient.hpp"

using namespace statelab;

struct sl_automaton {
  AutomatonPtr automaton;
};
struct sl_language {
  LanguagePtr language;
};
struct sl_prob_automaton {
  ProbAutomaton automaton;
};

namespace {

thread_local std::string last_error;

template <class Body>
sl_status guard(Body&& body) {
  try {
    body();
    last_error.clear();
    return SL_OK;
  } catch (const ParseError& e) {
    last_error = e.what();
    return SL_ERR_PARSE;
  } catch (const UnknownReference& e) {
    last_error = e.what();
    return SL_ERR_UNKNOWN_REF;
  } catch (const InputError& e) {
    last_error = e.what();
    return SL_ERR_INPUT;
  } catch (const ModelError& e) {
    last_error = e.what();
    return SL_ERR_MODEL;
  } catch (const KindError& e) {
    last_error = e.what();
    return SL_ERR_KIND;
  } catch (const Unsupported& e) {
    last_error = e.what();
    return SL_ERR_UNSUPPORTED;
  } catch (const BudgetExceeded& e) {
    last_error = e.what();
    return SL_ERR_BUDGET;
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return SL_ERR_INPUT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SL_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return SL_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw InputError(std::string(what) + " is NULL");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Word word_arg(const char* w) {
  require(w, "word");
  return normalize_word(w);
}

std::vector<Word> word_list(const char* const* words, std::size_t count) {
  std::vector<Word> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(word_arg(words[i]));
  return out;
}

QueryOptions query_options(const sl_options* options) {
  QueryOptions q;
  if (options != nullptr) {
    if (options->budget != 0) q.budget = options->budget;
    q.threads = options->threads;
  }
  return q;
}

Json words_json(const std::vector<Word>& words) {
  Json out = Json::array();
  for (const auto& w : words) out.push_back(display_word(w));
  return out;
}

const TableAutomaton& table_of(const sl_automaton* a) {
  auto table = dynamic_cast<const TableAutomaton*>(a->automaton.get());
  if (table == nullptr) throw Unsupported("'" + a->automaton->name() + "' is not a table automaton");
  return *table;
}

}  // namespace

extern "C" {

const char* sl_version(void) { return "1.0.0"; }

const char* sl_status_string(sl_status status) {
  switch (status) {
    case SL_OK:
      return "ok";
    case SL_ERR_INPUT:
      return "input error";
    case SL_ERR_PARSE:
      return "parse error";
    case SL_ERR_MODEL:
      return "model error";
    case SL_ERR_KIND:
      return "kind error";
    case SL_ERR_UNSUPPORTED:
      return "unsupported";
    case SL_ERR_BUDGET:
      return "budget exceeded";
    case SL_ERR_UNKNOWN_REF:
      return "unknown reference";
    case SL_ERR_INTERNAL:
      return "internal error";
  }
  return "invalid status";
}

const char* sl_last_error(void) { return last_error.c_str(); }

void sl_string_free(char* s) { std::free(s); }

sl_status sl_gallery_names(char** json) {
  return guard([&] {
    require(json, "json");
    *json = dup(Json(gallery_names()).dump());
  });
}

sl_status sl_experiment_catalog(char** json) {
  return guard([&] {
    require(json, "json");
    Json out = Json::array();
    for (const auto& e : experiment_catalog()) {
      out.push_back({{"id", e.id}, {"claim", e.claim}, {"defaults", e.defaults}, {"ceiling", e.ceiling}});
    }
    *json = dup(out.dump());
  });
}

sl_status sl_gallery_info(const char* name, char** json) {
  return guard([&] {
    require(name, "name");
    require(json, "json");
    auto spec = gallery_entry(name);
    Json out = {{"name", spec.name},
                {"alphabet", display_word(spec.alphabet().letters())},
                {"has_automaton", spec.automaton != nullptr},
                {"validation_length", spec.validation_length}};
    if (spec.declared) {
      out["declared"] = {{"class", spec.declared->f.name()}, {"C", spec.declared->constant}, {"max_n", spec.declared->max_n}};
    }
    *json = dup(out.dump());
  });
}

sl_status sl_automaton_gallery(const char* name, sl_automaton** out) {
  return guard([&] {
    require(name, "name");
    require(out, "out");
    auto spec = gallery_entry(name);
    if (!spec.automaton) throw Unsupported("gallery language '" + spec.name + "' has no automaton");
    *out = new sl_automaton{spec.automaton};
  });
}

sl_status sl_automaton_load(const char* text, const char* name, sl_automaton** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    auto a = std::make_shared<TableAutomaton>(load_automaton(text, name != nullptr ? name : "loaded"));
    *out = new sl_automaton{std::move(a)};
  });
}

void sl_automaton_free(sl_automaton* automaton) { delete automaton; }

sl_status sl_automaton_name(const sl_automaton* automaton, char** name) {
  return guard([&] {
    require(automaton, "automaton");
    require(name, "name");
    *name = dup(automaton->automaton->name());
  });
}

sl_status sl_automaton_accepts(const sl_automaton* automaton, const char* word, int* accepted) {
  return guard([&] {
    require(automaton, "automaton");
    require(accepted, "accepted");
    const auto w = word_arg(word);
    automaton->automaton->alphabet().check(w);
    *accepted = accepts(*automaton->automaton, w) ? 1 : 0;
  });
}

sl_status sl_automaton_kind(const sl_automaton* automaton, size_t depth, char** out) {
  return guard([&] {
    require(automaton, "automaton");
    require(out, "kind");
    *out = dup(to_string(kind(*automaton->automaton, depth)));
  });
}

sl_status sl_automaton_serialize(const sl_automaton* automaton, char** text) {
  return guard([&] {
    require(automaton, "automaton");
    require(text, "text");
    *text = dup(serialize(table_of(automaton)));
  });
}

sl_status sl_automaton_determinize(const sl_automaton* automaton, sl_automaton** out) {
  return guard([&] {
    require(automaton, "automaton");
    require(out, "out");
    auto det = std::make_shared<TableAutomaton>(determinize_finite(*automaton->automaton));
    *out = new sl_automaton{std::move(det)};
  });
}

sl_status sl_automaton_profile(const sl_automaton* automaton, size_t n_max, const char* bound_class,
                               uint64_t constant, char** json, int* passed) {
  return guard([&] {
    require(automaton, "automaton");
    require(json, "json");
    auto prof = profile(*automaton->automaton, n_max);
    Json counts = Json::array();
    for (std::size_t n = 0; n < prof.counts.size(); ++n) counts.push_back({{"n", n}, {"count", prof.counts[n]}});
    Json out = {{"automaton", prof.automaton}, {"profile", counts}};
    bool ok = true;
    if (bound_class != nullptr) {
      const auto f = GrowthClass::parse(bound_class);
      auto check = check_bound(prof, f, constant);
      ok = check.passed;
      std::vector<std::string> verdicts;
      for (bool v : check.verdicts) verdicts.emplace_back(v ? "pass" : "fail");
      out["bound"] = {{"class", f.name()},
                      {"C", constant},
                      {"verdicts", verdicts},
                      {"max_ratio", check.max_ratio},
                      {"max_ratio_at", check.max_ratio_at},
                      {"verdict", ok ? "pass" : "fail"}};
    }
    *json = dup(out.dump());
    if (passed != nullptr) *passed = ok ? 1 : 0;
  });
}

sl_status sl_language_gallery(const char* name, sl_language** out) {
  return guard([&] {
    require(name, "name");
    require(out, "out");
    *out = new sl_language{gallery_entry(name).oracle};
  });
}

sl_status sl_language_from_automaton(const sl_automaton* automaton, sl_language** out) {
  return guard([&] {
    require(automaton, "automaton");
    require(out, "out");
    *out = new sl_language{language_of(automaton->automaton)};
  });
}

void sl_language_free(sl_language* language) { delete language; }

sl_status sl_language_member(const sl_language* language, const char* word, int* member) {
  return guard([&] {
    require(language, "language");
    require(member, "member");
    *member = language->language->contains(word_arg(word)) ? 1 : 0;
  });
}

sl_status sl_count_quotients(const sl_language* language, size_t order, size_t witness_length,
                             const char* const* extra, size_t extra_count, const sl_options* options,
                             char** json) {
  return guard([&] {
    require(language, "language");
    require(json, "json");
    if (extra_count > 0) require(extra, "extra");
    WitnessSpec ws{witness_length, word_list(extra, extra_count)};
    auto r = count_quotients(*language->language, order, ws, query_options(options));
    Json classes = Json::array();
    for (std::size_t i = 0; i < r.representatives.size(); ++i) {
      classes.push_back({{"representative", display_word(r.representatives[i])}, {"size", r.class_sizes[i]}});
    }
    Json out = {{"language", r.language},
                {"order", r.order},
                {"witness_bound", r.witness_bound},
                {"extra_witnesses", words_json(r.extra_witnesses)},
                {"class_count_lower_bound", r.class_count_lower_bound},
                {"classes", classes},
                {"queries", r.queries}};
    *json = dup(out.dump());
  });
}

sl_status sl_query_table(const sl_language* language, size_t order, size_t row_length, const char* const* rows,
                         size_t row_count, int dump, const sl_options* options, char** json) {
  return guard([&] {
    require(language, "language");
    require(json, "json");
    RowSpec spec = rows == nullptr ? RowSpec::all_up_to(row_length) : RowSpec::explicit_rows(word_list(rows, row_count));
    auto r = query_table(*language->language, order, spec, query_options(options), dump != 0);
    Json out = {{"language", r.language},
                {"order", r.order},
                {"rows", spec.exhaustive ? Json{{"all_up_to", spec.max_length}} : Json{{"explicit", words_json(spec.rows)}}},
                {"column_count", r.column_count},
                {"distinct_row_count_lower_bound", r.distinct_row_count_lower_bound},
                {"queries", r.queries}};
    if (dump != 0) {
      out["columns"] = words_json(words_up_to(language->language->alphabet(), order));
      Json d = Json::array();
      for (const auto& [w, bits] : r.dump) d.push_back({{"row", display_word(w)}, {"profile", bits}});
      out["dump"] = d;
    }
    *json = dup(out.dump());
  });
}

sl_status sl_distinguish(const sl_language* language, const char* u, const char* v, size_t max_length,
                         char** witness) {
  return guard([&] {
    require(language, "language");
    require(witness, "witness");
    auto w = distinguish(*language->language, word_arg(u), word_arg(v), max_length);
    *witness = w ? dup(display_word(*w)) : nullptr;
  });
}

sl_status sl_prob_rabin(sl_prob_automaton** out) {
  return guard([&] {
    require(out, "out");
    *out = new sl_prob_automaton{rabin_automaton()};
  });
}

sl_status sl_prob_load(const char* text, const char* name, sl_prob_automaton** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new sl_prob_automaton{load_prob_automaton(text, name != nullptr ? name : "loaded")};
  });
}

void sl_prob_free(sl_prob_automaton* automaton) { delete automaton; }

sl_status sl_prob_probability(const sl_prob_automaton* automaton, const char* word, char** rational) {
  return guard([&] {
    require(automaton, "automaton");
    require(rational, "rational");
    *rational = dup(to_string(acceptance_probability(automaton->automaton, word_arg(word))));
  });
}

sl_status sl_prob_above(const sl_prob_automaton* automaton, const char* threshold, const char* word, int* member) {
  return guard([&] {
    require(automaton, "automaton");
    require(threshold, "threshold");
    require(member, "member");
    auto language = make_threshold_language(automaton->automaton, parse_rational(threshold));
    *member = threshold_member(language, word_arg(word)) ? 1 : 0;
  });
}

sl_status sl_prob_separate(const char* u, const char* v, char** suffix) {
  return guard([&] {
    require(suffix, "suffix");
    *suffix = dup(separate_quotients(word_arg(u), word_arg(v)));
  });
}

sl_status sl_run_experiment(const char* id, const char* params_json, char** report_json, int* passed) {
  return guard([&] {
    require(id, "id");
    require(report_json, "report_json");
    Json params = params_json != nullptr && *params_json != '\0' ? Json::parse(params_json) : Json::object();
    auto report = run_experiment(id, params);
    *report_json = dup(report.to_json().dump(2) + "\n");
    if (passed != nullptr) *passed = report.passed ? 1 : 0;
  });
}

sl_status sl_render(const char* json, const char* format, char** out) {
  return guard([&] {
    require(json, "json");
    require(format, "format");
    require(out, "out");
    const auto j = Json::parse(json);
    const std::string f = format;
    if (f == "json") {
      *out = dup(j.dump(2) + "\n");
    } else if (f == "csv") {
      *out = dup(report_csv(j));
    } else if (f == "text") {
      *out = dup(report_text(j));
    } else {
      throw InputError("unknown format '" + f + "'");
    }
  });
}

}  // extern "C"
