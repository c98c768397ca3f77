#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superweyl/verify.hpp"

namespace sw {

// All checks requested for one group.
struct RunRecord {
  GroupSpec spec;
  std::optional<VerificationReport> theorem;
  std::optional<DerivedReport> derived;
  std::optional<AxiomReport> axioms;
  std::optional<BranchingReport> branching;
  std::optional<AssociatorReport> associators;
  std::vector<std::string> errors;  // checks that threw (e.g. cap exceeded)
};

struct ReportBundle {
  int threads = 1;
  std::string fingerprint;
  std::vector<RunRecord> runs;
  std::optional<SupermatReport> supermat;
};

enum class Outcome { Pass = 0, Fail = 1, Incomplete = 2 };

// Fail if any check failed or threw; else Incomplete if any budget ran out; else Pass.
Outcome outcome(const ReportBundle& b);
int exit_code(Outcome o);

// Runs are emitted sorted by (kind, n); field order is fixed.
std::string emit_json(const ReportBundle& b);
std::string emit_markdown(const ReportBundle& b);

}  // namespace sw
