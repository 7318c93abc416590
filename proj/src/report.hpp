#pragma once

#include <string>

#include "graph.hpp"

namespace mcg {

// Knobs shared by every analysis command. budget_nodes == 0 keeps each
// operation's own default node cap.
struct AnalysisParams {
  int ell = 1;
  int budget_nodes = 0;
  long max_items = 5'000'000;
  unsigned long long seed = 0;
  int walk_count = 16;
  int walk_max_len = 10;
  std::string oracle_which; // pm | cycles | bfactors | arborescences | tightcuts | walks
};

// FNV-1a over the canonical instance serialization, 16 hex digits.
std::string instance_digest(const Instance& instance);

// Runs one analysis command and returns the canonical JSON report:
// {"command", "digest", "payload", "oracle_checks"}. Identical inputs give
// byte-identical output. Failed embedded cross-checks throw alarm_error.
// Commands: check, potential, spaces, blocks, decompose, kbest-pm,
// kbest-bfactor, kbest-arb, arb-dual, oracle.
std::string run_analysis(const Instance& instance, const std::string& command,
                         const AnalysisParams& params);

// The catalog entry as a plain instance document, ready to pipe back in.
std::string run_construct(const std::string& name);

// Indented plain-text rendering of a JSON report.
std::string render_text(const std::string& report_json);

} // namespace mcg
