#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "superweyl/echelon.hpp"
#include "superweyl/galg.hpp"

namespace sw {

struct ClosureOptions {
  // true: candidates are generated and pre-reduced in parallel batches, then
  // inserted serially in a fixed order. false: serial reference kernel.
  bool parallel = true;
  // Work units per batch; deliberately independent of the thread count so the
  // insertion sequence is identical for every thread count.
  size_t batch = 256;
  // Wall-clock budget, <= 0 means unlimited. Exceeding it returns an
  // incomplete result.
  double budget_seconds = 0;
};

struct ClosureStats {
  size_t candidates = 0;
  size_t inserted = 0;
  double seconds = 0;
};

struct ClosureResult {
  EchelonBasis basis;
  bool complete = true;
  ClosureStats stats;
};

// Smallest subspace containing the homogeneous parts of the generators and
// stable under ad(s) for every generator s; this is the Lie sub-superalgebra
// they generate.
ClosureResult lie_closure(const BracketSpace& sp, const std::vector<SparseVec>& generators,
                          const ClosureOptions& opt = {});

// Span of all superbrackets of homogeneous parts of the rows of space.
ClosureResult derived_span(const BracketSpace& sp, const EchelonBasis& space, const ClosureOptions& opt = {});
// derived_span of the whole ambient space (coordinate basis).
ClosureResult derived_span_full(const BracketSpace& sp, const ClosureOptions& opt = {});

// The full space as an echelon basis (unit rows).
EchelonBasis full_space(uint32_t dim);

// Re-brackets every pair of homogeneous row parts and checks membership.
bool is_bracket_closed(const BracketSpace& sp, const EchelonBasis& space, std::string* witness = nullptr);

struct ParityDims {
  size_t even = 0;
  size_t odd = 0;
  size_t mixed = 0;
};
ParityDims parity_dims(const BracketSpace& sp, const EchelonBasis& space);

}  // namespace sw
