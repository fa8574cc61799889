#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace skewbi {

// Caps for the verification battery. The defaults are the full desk-scale
// run (a few minutes); tests and the CLI can shrink them.
struct SuiteCaps {
  unsigned seed = 20260826;
  unsigned ring_words = 500;      // random words for the presentation suite
  unsigned ring_degree = 6;       // max word degree
  unsigned hopf_words = 100;      // random words for the Hopf laws
  unsigned module_n_max = 20;     // defining relations on L_n^+-
  unsigned powerset_max = 8;      // |Omega| cap for powerset checks
  unsigned recurrence_max = 12;   // multiplicity recurrence cap
  unsigned cg_max = 8;            // Clebsch-Gordan sweep cap (m <= n <= cap)
  unsigned v1_max = 7;            // V(1) sweep cap (m <= n <= cap)
  unsigned grid_n_max = 6;        // parameter-grid cap
  unsigned max_d = 4;             // odd-graph cap
  bool include_d5 = false;        // also run the 462-vertex graph
};

struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // first failure, or a summary count
};

struct SuiteReport {
  std::vector<CriterionResult> criteria;

  bool all_pass() const;
};

// Runs the twelve-criterion battery. Never throws for mathematical
// failures (they become failed criteria); configuration errors throw.
SuiteReport run_acceptance(const SuiteCaps& caps = {});

nlohmann::json to_json(const SuiteReport& report);

}  // namespace skewbi
