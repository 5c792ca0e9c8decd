#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "statelab/automaton.hpp"

namespace statelab {

using Json = nlohmann::json;

// Outcome of one registered experiment. Everything except the optional
// duration is a function of the parameters, so reports are byte-stable.
struct ExperimentReport {
  std::string id;
  std::string claim;
  Json parameters = Json::object();
  Json measured = Json::object();
  std::string bound;
  bool passed = false;
  // Only set when the "timing" parameter is true.
  double duration_ms = -1.0;

  Json to_json() const;
};

struct ExperimentInfo {
  std::string id;
  std::string claim;
  Json defaults;
  // Largest parameters that still finish in desk time.
  std::string ceiling;
};

// ids: rabin-identities, rabin-claim, gallery-equiv, class-conformance,
// exp-alt, hierarchy:<level>, primes-hs, primes-linear, core-crosscheck.
// `overrides` is a JSON object; unknown keys raise InputError.
ExperimentReport run_experiment(std::string_view id, const Json& overrides = Json::object());

std::vector<ExperimentInfo> experiment_catalog();

// Random finite alternating automaton with 1..max_states states, used by the
// cross-check experiment and the property tests.
TableAutomaton random_alternating(std::mt19937_64& rng, const Alphabet& alphabet, std::size_t max_states);

// Exhaustive acceptance game without memoisation: Eve picks a disjunct,
// Adam a conjunct, and the play ends in an accepting state or a True sink.
bool game_accepts(const Automaton& automaton, std::string_view word);

// Flattens a report into "key,value" rows (JSON pointer keys).
std::string report_csv(const Json& report);
// Indented "key: value" rendering for terminals.
std::string report_text(const Json& report);

}  // namespace statelab
