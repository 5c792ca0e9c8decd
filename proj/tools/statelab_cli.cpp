// Command-line front end. Talks to the library only through statelab.h.
#include <statelab/statelab.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::json;

struct Failure {
  sl_status status;
  std::string message;
};

void check(sl_status status) {
  if (status != SL_OK) throw Failure{status, sl_last_error()};
}

// Owns a char* returned by the library.
std::string take(char* s) {
  if (s == nullptr) return {};
  std::string out = s;
  sl_string_free(s);
  return out;
}

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
};
using AutomatonHandle = Handle<sl_automaton, sl_automaton_free>;
using LanguageHandle = Handle<sl_language, sl_language_free>;
using ProbHandle = Handle<sl_prob_automaton, sl_prob_free>;

struct Globals {
  std::string format = "text";
  std::uint64_t budget = 0;
  std::optional<std::uint64_t> seed;
  std::string out;
  unsigned threads = 1;
};

std::optional<std::string> read_file_if_exists(const std::string& ref) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(ref, ec)) return std::nullopt;
  std::ifstream in(ref);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A reference is a path to an interchange file or a gallery name.
void open_automaton(const std::string& ref, AutomatonHandle& h) {
  if (auto text = read_file_if_exists(ref)) {
    check(sl_automaton_load(text->c_str(), std::filesystem::path(ref).stem().c_str(), &h.p));
  } else {
    check(sl_automaton_gallery(ref.c_str(), &h.p));
  }
}

void open_language(const std::string& ref, LanguageHandle& h) {
  if (read_file_if_exists(ref)) {
    AutomatonHandle a;
    open_automaton(ref, a);
    check(sl_language_from_automaton(a.p, &h.p));
  } else {
    check(sl_language_gallery(ref.c_str(), &h.p));
  }
}

void open_prob(const std::string& ref, ProbHandle& h) {
  if (auto text = read_file_if_exists(ref)) {
    check(sl_prob_load(text->c_str(), std::filesystem::path(ref).stem().c_str(), &h.p));
  } else if (ref == "rabin" || ref == "rabin-half") {
    check(sl_prob_rabin(&h.p));
  } else {
    throw Failure{SL_ERR_UNKNOWN_REF, "unknown probabilistic automaton '" + ref + "'"};
  }
}

sl_options options(const Globals& g) { return sl_options{g.budget, g.threads}; }

class Output {
 public:
  explicit Output(const Globals& g) : g_(g) {}

  // A report object: JSON as is, CSV and text through the library renderer.
  void report(const Json& j) { write(render(j.dump(), g_.format)); }
  // A single answer: bare text, or wrapped for json/csv.
  void answer(const std::string& text, const Json& j) {
    if (g_.format == "text") {
      write(text + "\n");
    } else {
      report(j);
    }
  }
  void raw(const std::string& s) { write(s); }

  static std::string render(const std::string& json, const std::string& format) {
    char* out = nullptr;
    check(sl_render(json.c_str(), format.c_str(), &out));
    return take(out);
  }

 private:
  void write(const std::string& s) {
    if (g_.out.empty()) {
      std::cout << s;
    } else {
      std::ofstream f(g_.out);
      if (!f) throw Failure{SL_ERR_INPUT, "cannot write '" + g_.out + "'"};
      f << s;
    }
  }
  const Globals& g_;
};

int cmd_eval(const Globals& g, const std::string& ref, const std::string& word) {
  AutomatonHandle a;
  open_automaton(ref, a);
  int accepted = 0;
  check(sl_automaton_accepts(a.p, word.c_str(), &accepted));
  Output(g).answer(accepted ? "accept" : "reject",
                   {{"automaton", ref}, {"word", word}, {"verdict", accepted ? "accept" : "reject"}});
  return 0;
}

int cmd_profile(const Globals& g, const std::string& ref, std::size_t n_max, const std::string& bound,
                std::uint64_t constant, bool declared) {
  AutomatonHandle a;
  open_automaton(ref, a);
  std::string f = bound;
  if (declared) {
    char* info = nullptr;
    check(sl_gallery_info(ref.c_str(), &info));
    auto j = Json::parse(take(info));
    if (!j.contains("declared")) throw Failure{SL_ERR_INPUT, "'" + ref + "' declares no class"};
    f = j["declared"]["class"];
    constant = j["declared"]["C"];
  }
  char* out = nullptr;
  int passed = 1;
  check(sl_automaton_profile(a.p, n_max, f.empty() ? nullptr : f.c_str(), constant, &out, &passed));
  auto j = Json::parse(take(out));
  if (g.format == "csv") {
    // Plain columns, ready for plotting.
    std::string csv = j.contains("bound") ? "n,count,bound,verdict\n" : "n,count\n";
    for (std::size_t n = 0; n < j["profile"].size(); ++n) {
      csv += std::to_string(n) + "," + j["profile"][n]["count"].dump();
      if (j.contains("bound")) {
        csv += "," + j["bound"]["C"].dump() + "*" + j["bound"]["class"].get<std::string>() + "," +
               j["bound"]["verdicts"][n].get<std::string>();
      }
      csv += "\n";
    }
    Output(g).raw(csv);
  } else {
    Output(g).report(j);
  }
  return passed ? 0 : 1;
}

int cmd_quotients(const Globals& g, const std::string& ref, std::size_t order, std::size_t witness,
                  const std::vector<std::string>& extra) {
  LanguageHandle l;
  open_language(ref, l);
  std::vector<const char*> ptrs;
  for (const auto& w : extra) ptrs.push_back(w.c_str());
  char* out = nullptr;
  auto o = options(g);
  check(sl_count_quotients(l.p, order, witness, ptrs.data(), ptrs.size(), &o, &out));
  auto j = Json::parse(take(out));
  if (g.format == "text") {
    Output(g).raw(j["class_count_lower_bound"].dump() + "\n");
  } else {
    Output(g).report(j);
  }
  return 0;
}

int cmd_query_table(const Globals& g, const std::string& ref, std::size_t order, std::size_t rows_up_to,
                    const std::vector<std::string>& rows, bool dump) {
  LanguageHandle l;
  open_language(ref, l);
  std::vector<const char*> ptrs;
  for (const auto& w : rows) ptrs.push_back(w.c_str());
  char* out = nullptr;
  auto o = options(g);
  check(sl_query_table(l.p, order, rows_up_to, rows.empty() ? nullptr : ptrs.data(), ptrs.size(), dump, &o, &out));
  auto j = Json::parse(take(out));
  if (g.format == "text" && !dump) {
    Output(g).raw(j["distinct_row_count_lower_bound"].dump() + "\n");
  } else {
    Output(g).report(j);
  }
  return 0;
}

int cmd_distinguish(const Globals& g, const std::string& ref, const std::string& u, const std::string& v,
                    std::size_t max_length) {
  LanguageHandle l;
  open_language(ref, l);
  char* w = nullptr;
  check(sl_distinguish(l.p, u.c_str(), v.c_str(), max_length, &w));
  const bool found = w != nullptr;
  const std::string witness = take(w);
  Output(g).answer(found ? witness : "none", {{"u", u}, {"v", v}, {"witness", found ? Json(witness) : Json()}});
  return found ? 0 : 1;
}

int cmd_prob_eval(const Globals& g, const std::string& ref, const std::string& word, const std::string& threshold) {
  ProbHandle a;
  open_prob(ref, a);
  char* p = nullptr;
  check(sl_prob_probability(a.p, word.c_str(), &p));
  const std::string prob = take(p);
  std::string x = threshold.empty() && ref == "rabin-half" ? "1/2" : threshold;
  Json j = {{"automaton", ref}, {"word", word}, {"probability", prob}};
  std::string text = prob;
  if (!x.empty()) {
    int member = 0;
    check(sl_prob_above(a.p, x.c_str(), word.c_str(), &member));
    j["threshold"] = x;
    j["member"] = member != 0;
  }
  Output(g).answer(text, j);
  return 0;
}

int cmd_prob_separate(const Globals& g, const std::string& u, const std::string& v) {
  char* s = nullptr;
  check(sl_prob_separate(u.c_str(), v.c_str(), &s));
  const std::string suffix = take(s);
  Output(g).answer(suffix, {{"u", u}, {"v", v}, {"suffix", suffix}});
  return 0;
}

Json run_one(const std::string& id, const Json& params, bool& passed) {
  char* out = nullptr;
  int ok = 0;
  check(sl_run_experiment(id.c_str(), params.dump().c_str(), &out, &ok));
  passed = passed && ok != 0;
  return Json::parse(take(out));
}

int cmd_experiment(const Globals& g, const std::string& id, Json params, bool list, bool parallel) {
  if (list || id.empty()) {
    char* out = nullptr;
    check(sl_experiment_catalog(&out));
    Output(g).report(Json::parse(take(out)));
    return 0;
  }
  char* catalog = nullptr;
  check(sl_experiment_catalog(&catalog));
  const auto entries = Json::parse(take(catalog));
  bool passed = true;
  if (id != "all") {
    // Global flags apply where the experiment has the matching parameter.
    Json defaults = id.starts_with("hierarchy:") ? Json{{"budget", 0}, {"threads", 0}} : Json::object();
    for (const auto& e : entries) {
      if (e["id"] == id) defaults = e["defaults"];
    }
    if (g.seed && defaults.contains("seed") && !params.contains("seed")) params["seed"] = *g.seed;
    if (g.budget != 0 && defaults.contains("budget") && !params.contains("budget")) params["budget"] = g.budget;
    if (defaults.contains("threads") && !params.contains("threads")) params["threads"] = g.threads;
    auto report = run_one(id, params, passed);
    Output(g).report(report);
    return passed ? 0 : 1;
  }
  std::vector<std::string> ids;
  for (const auto& e : entries) ids.push_back(e["id"]);
  std::vector<Json> reports(ids.size());
  auto run = [&](std::size_t i) {
    Json p = params.contains("timing") ? Json{{"timing", params["timing"]}} : Json::object();
    if (g.seed && ids[i] == "core-crosscheck") p["seed"] = *g.seed;
    bool ok = true;
    reports[i] = run_one(ids[i], p, ok);
    return ok;
  };
  if (parallel) {
    std::vector<std::future<bool>> futures;
    for (std::size_t i = 0; i < ids.size(); ++i) futures.push_back(std::async(std::launch::async, run, i));
    for (auto& f : futures) passed = f.get() && passed;
  } else {
    for (std::size_t i = 0; i < ids.size(); ++i) passed = run(i) && passed;
  }
  Output(g).report(Json(reports));
  return passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"State complexity laboratory for alternating and probabilistic automata"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--budget", g.budget, "Membership-query budget (0: default)");
  app.add_option("--seed", g.seed, "Seed for randomized cross-checks");
  app.add_option("--out", g.out, "Write the output to this file");
  app.add_option("--threads", g.threads, "Worker threads for query tables (0: all cores)");

  std::string ref, word, u, v, bound, threshold, id;
  std::size_t n_max = 10, order = 1, witness = 0, rows_up_to = 0, max_length = 16;
  std::uint64_t constant = 1;
  bool declared = false, dump = false, list = false, parallel = false, timing = false;
  std::vector<std::string> extra, rows, params;
  std::optional<std::int64_t> n;
  std::function<int()> action;

  auto* eval = app.add_subcommand("eval", "Decide membership of a word");
  eval->add_option("automaton", ref, "Gallery name or interchange file")->required();
  eval->add_option("word", word, "Word ('ε' or '' for the empty word)")->required();
  eval->callback([&] { action = [&] { return cmd_eval(g, ref, word); }; });

  auto* prof = app.add_subcommand("profile", "Reachable-state counts for n = 0..n_max");
  prof->add_option("automaton", ref)->required();
  prof->add_option("--n-max", n_max);
  prof->add_option("--bound", bound, "Class: const, n, n^k or 2^n");
  prof->add_option("--constant,-C", constant);
  prof->add_flag("--declared", declared, "Check the gallery entry's declared class");
  prof->callback([&] { action = [&] { return cmd_profile(g, ref, n_max, bound, constant, declared); }; });

  auto* quot = app.add_subcommand("quotients", "Count left quotients of order n");
  quot->add_option("language", ref)->required();
  quot->add_option("--order", order)->required();
  quot->add_option("--witness", witness, "Exhaustive witnesses up to this length");
  quot->add_option("--extra", extra, "Additional witness words");
  quot->callback([&] { action = [&] { return cmd_quotients(g, ref, order, witness, extra); }; });

  auto* table = app.add_subcommand("query-table", "Distinct rows of the query table of order n");
  table->add_option("language", ref)->required();
  table->add_option("--order", order)->required();
  auto* upto = table->add_option("--rows-up-to", rows_up_to, "Rows: every word up to this length");
  table->add_option("--row", rows, "Rows: these words")->excludes(upto);
  table->add_flag("--dump", dump, "Include every profile");
  table->callback([&] { action = [&] { return cmd_query_table(g, ref, order, rows_up_to, rows, dump); }; });

  auto* dist = app.add_subcommand("distinguish", "Shortest suffix separating two quotients");
  dist->add_option("language", ref)->required();
  dist->add_option("u", u)->required();
  dist->add_option("v", v)->required();
  dist->add_option("--max-length", max_length);
  dist->callback([&] { action = [&] { return cmd_distinguish(g, ref, u, v, max_length); }; });

  auto* prob = app.add_subcommand("prob", "Probabilistic automata");
  prob->require_subcommand(1);
  auto* peval = prob->add_subcommand("eval", "Exact acceptance probability");
  peval->add_option("automaton", ref, "rabin, rabin-half or a ptrans file")->required();
  peval->add_option("word", word)->required();
  peval->add_option("--threshold", threshold, "Also report membership in the cut-point language");
  peval->callback([&] { action = [&] { return cmd_prob_eval(g, ref, word, threshold); }; });
  auto* psep = prob->add_subcommand("separate", "Suffix separating u1 and v1 at cut point 1/2");
  psep->add_option("u", u)->required();
  psep->add_option("v", v)->required();
  psep->callback([&] { action = [&] { return cmd_prob_separate(g, u, v); }; });

  auto* exp = app.add_subcommand("experiment", "Run a registered experiment, or 'all'");
  exp->add_option("id", id);
  exp->add_option("--n", n, "Size parameter of the experiment");
  exp->add_option("--param", params, "Override key=value (integer values)");
  exp->add_flag("--timing", timing, "Record wall-clock duration");
  exp->add_flag("--list", list, "Print the catalog");
  exp->add_flag("--parallel", parallel, "Run 'all' concurrently");
  exp->callback([&] {
    action = [&] {
      Json p = Json::object();
      if (n) p["n"] = *n;
      for (const auto& kv : params) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw CLI::ValidationError("--param", "expected key=value");
        try {
          p[kv.substr(0, eq)] = std::stoll(kv.substr(eq + 1));
        } catch (const std::exception&) {
          throw CLI::ValidationError("--param", "value of '" + kv.substr(0, eq) + "' is not an integer");
        }
      }
      if (timing) p["timing"] = true;
      return cmd_experiment(g, id, p, list, parallel);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  try {
    return action();
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Failure& f) {
    std::cerr << "error: " << sl_status_string(f.status) << ": " << f.message << "\n";
    const bool usage = f.status == SL_ERR_INPUT || f.status == SL_ERR_PARSE || f.status == SL_ERR_UNKNOWN_REF;
    return usage ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
