#pragma once

#include <string>
#include <utility>
#include <vector>

#include "superweyl/combin.hpp"
#include "superweyl/supermod.hpp"

namespace sw {

struct BranchingResult {
  IrrFamily parent;
  std::vector<RestrictionTerm> observed;   // from projector multiplicities
  std::vector<RestrictionTerm> predicted;  // from super_restrict
  bool match = false;
  bool consistent = true;       // odd-part multiplicities agree with the even-part reading
  double rounding_error = 0;    // max distance of a multiplicity from the nearest integer
  int max_multiplicity = 0;
  std::vector<std::string> notes;
};

// Restriction from rank n to rank n-1 of the same kind. Holds the even
// subgroup H_0 of rank n-1 and the characters of all its simple modules.
class BranchingContext {
 public:
  explicit BranchingContext(GroupSpec parent);

  const GroupSpec& parent_spec() const { return spec_; }
  const std::vector<IrrFamily>& children() const { return children_; }
  // max |<chi_a, chi_b> - delta_ab| over the even simples of H_0
  double orthonormality_error() const { return ortho_error_; }

  BranchingResult verify(const IrrFamily& f) const;

 private:
  struct Chars {
    std::vector<cplx> part[2];  // per H_0 element: trace on the even / odd block
  };
  Chars characters(const SuperModuleSpec& m, int rank_of_module) const;
  cplx inner(const std::vector<cplx>& a, const std::vector<cplx>& b) const;

  GroupSpec spec_;
  Group h_;                     // rank n-1 group
  std::vector<uint32_t> even_;  // ordinals of H_0 in h_
  std::vector<IrrFamily> children_;
  std::vector<Chars> child_chars_;
  double ortho_error_ = 0;
};

// Convenience wrapper building a context for one family.
BranchingResult verify_branching(const GroupSpec& spec, const IrrFamily& f);

// Ungraded restriction of S^{b} from B_n to B_{n-1}: (child, multiplicity),
// over all bipartitions of n-1 with nonzero multiplicity, by character inner products.
std::vector<std::pair<Bipartition, int>> restrict_ungraded(const Bipartition& b);

std::string to_string(const RestrictionTerm& t);

}  // namespace sw
