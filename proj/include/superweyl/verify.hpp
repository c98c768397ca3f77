#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "superweyl/branching.hpp"
#include "superweyl/closure.hpp"
#include "superweyl/combin.hpp"
#include "superweyl/supermat.hpp"
#include "superweyl/wgroup.hpp"

namespace sw {

struct VerifyOptions {
  bool parallel = true;
  size_t batch = 256;
  uint64_t max_order = kDefaultOrderCap;
  double budget_seconds = 0;     // per phase; <= 0 unlimited
  uint64_t shuffle_seed = 0;     // 0: generators in canonical order
  uint64_t fixpoint_max_order = 400;  // re-bracket every pair of the closure up to this order
  std::string cache_dir;         // multiplication-table cache; empty disables

  ClosureOptions closure() const { return {parallel, batch, budget_seconds}; }
};

struct PhaseTiming {
  std::string phase;
  double seconds = 0;
};

struct VerificationReport {
  GroupSpec spec;
  uint64_t order = 0;
  bool complete = true;
  size_t dim_g = 0;
  size_t dim_g0 = 0;
  size_t dim_g1 = 0;
  size_t dim_derived = 0;
  size_t dim_rhs = 0;
  uint64_t predicted_derived = 0;
  uint64_t predicted_by_blocks = 0;
  bool equal = false;               // dim_g == dim_rhs
  bool derived_consistent = false;  // dim_derived == predicted_derived
  bool g_in_rhs = false;            // every basis row of g lies in RHS
  bool rhs_in_g = false;            // D(CG) rows and the class sums lie in g
  bool class_sums_in_g = false;
  bool fixpoint_checked = false;
  bool fixpoint_ok = false;
  bool table_from_cache = false;
  std::vector<PhaseTiming> timings;

  bool passed() const {
    return complete && equal && derived_consistent && g_in_rhs && rhs_in_g && class_sums_in_g &&
           (!fixpoint_checked || fixpoint_ok);
  }
};

// Reflection generators (long, then short), optionally shuffled.
std::vector<SignedPerm> reflection_generators(const GroupSpec& s, uint64_t shuffle_seed);

// Throws std::invalid_argument when the order exceeds opt.max_order.
VerificationReport verify_theorem(const GroupSpec& s, const VerifyOptions& opt = {});

struct DerivedReport {
  GroupSpec spec;
  bool complete = true;
  size_t dim_derived = 0;
  uint64_t predicted_by_count = 0;
  uint64_t predicted_by_blocks = 0;
  double seconds = 0;
  bool passed() const { return complete && dim_derived == predicted_by_count && dim_derived == predicted_by_blocks; }
};
DerivedReport verify_derived(const GroupSpec& s, const VerifyOptions& opt = {});

struct AxiomReport {
  GroupSpec spec;
  bool hypotheses_hold = false;     // n >= 5; below, generation and dimension facts are report-only
  bool s_conjugation_closed = false;
  size_t s_size = 0;
  size_t s_prime_size = 0;
  bool s_prime_half_brackets = false;  // each element of S' is half a bracket of two reflections
  uint64_t s_prime_generated = 0;
  uint64_t even_order = 0;
  bool s_prime_generates = false;
  std::vector<uint64_t> simple_dims;       // simple CG-modules
  std::vector<uint64_t> even_simple_dims;  // simple CG_0-modules
  bool no_dim_two = false;
  bool passed() const {
    return s_conjugation_closed && s_prime_half_brackets && (!hypotheses_hold || (s_prime_generates && no_dim_two));
  }
};
AxiomReport verify_axioms(const GroupSpec& s, const VerifyOptions& opt = {});

struct ShapeCheck {
  Bipartition shape;
  int dim = 0;
  double relation_error = 0;
  double trace_error = 0;
  double yjm_error = 0;
  double intertwining_error = 0;  // max over the three twists
  double inverse_error = 0;
  double composition_error = 0;
  double commutation_error = 0;
  bool sigma_nat_ok = false;      // sigma of R^nat is pi^{|lambda|}
  bool passed(double tol) const;
};
struct AssociatorReport {
  int n = 0;
  std::vector<ShapeCheck> shapes;
  double tol = kTol;
  bool passed() const;
};
// Realization and associator suite over every bipartition of n.
AssociatorReport verify_associators(int n);

struct BranchingReport {
  GroupSpec spec;
  double orthonormality_error = 0;
  std::vector<BranchingResult> results;
  bool passed() const;
};
BranchingReport verify_branching_all(const GroupSpec& s);

struct SupermatReport {
  std::vector<OddGeneration> asserted;  // sl(2|2), sl(3|3), sq(3), sq(4)
  std::vector<OddGeneration> reported;  // sq(2): computed without a claim
  bool bracket_closed = false;          // sl and sq bases closed under the bracket
  bool passed() const;
};
SupermatReport verify_supermat(const VerifyOptions& opt = {});

std::string fingerprint(int threads);

}  // namespace sw
