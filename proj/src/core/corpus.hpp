#pragma once

#include <string>

#include "report.hpp"

namespace ultk {

// Runs every corpus entry under `dir` (JSON files in dir/entries, data files
// resolved against dir) and produces the consolidated pass/fail table.
// Entries flagged "experimental" are skipped unless requested; when run they
// are informational and never affect the overall outcome.
struct CorpusRun {
  Json table;        // per-entry rows
  std::size_t passed = 0, failed = 0, errors = 0, skipped = 0;
  bool all_passed = false;
};

CorpusRun corpus_run(const std::string& dir, unsigned jobs, bool include_experimental);

}  // namespace ultk
