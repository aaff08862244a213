#pragma once

#include <string>
#include <vector>

namespace treeschur::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string summary;  // one-line result detail
  std::string detail;   // full deterministic dump (feeds the byte-identity check)
};

struct Report {
  std::vector<CriterionResult> results;
  bool all_pass = true;
  // Concatenation of every criterion's exact-value dump; computed values
  // only, so it must be byte-identical across jobs settings.
  std::string canonical_text;
};

// Criteria 1..9 at their pinned scales (q = 3 and q = 5 where stated).
Report run_criteria(int jobs);

// Single criterion by id (1..9); id 10 is the determinism check, which
// recomputes criteria 1..9 under jobs = 1 and jobs = 8 and compares bytes.
CriterionResult run_criterion(int id, int jobs);

// All ten, printing one PASS/FAIL line per criterion to stdout.
// `rank` only validates the configured group (rank >= 2).
int run_all(unsigned rank, int jobs, bool print_detail);

}  // namespace treeschur::verify
