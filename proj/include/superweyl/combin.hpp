#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "superweyl/wgroup.hpp"

namespace sw {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);
int size(const Partition& p);
Partition conjugate(const Partition& p);
int diagonal_length(const Partition& p);
std::vector<Partition> partitions(int n);  // reverse lexicographic: [n] first
uint64_t hook_dim(const Partition& p);
uint64_t binomial(int n, int k);
std::string to_string(const Partition& p);  // "[3,1]" ; "[]" for the empty partition

struct Box {
  int row;  // 0-based
  int col;
  int residue() const { return col - row; }
};
std::vector<Box> removable_boxes(const Partition& p);  // top row first
Partition remove_box(const Partition& p, const Box& b);

struct Bipartition {
  Partition first;
  Partition second;
  int n() const { return size(first) + size(second); }
  bool operator==(const Bipartition&) const = default;
  // Fixed total order used for canonical representatives.
  bool operator<(const Bipartition& o) const;
};

std::string to_string(const Bipartition& b);
std::vector<Bipartition> bipartitions(int n);
uint64_t bipartition_dim(const Bipartition& b);
Bipartition swap_parts(const Bipartition& b);  // (mu, lambda)
Bipartition conj_parts(const Bipartition& b);  // (lambda*, mu*)
Bipartition twist(const Bipartition& b);       // (mu*, lambda*)
int residue_sum(const Partition& p);
int residue_sum(const Bipartition& b);
// All (nu, tau) obtained by removing one box: boxes of the first part, then the second.
std::vector<Bipartition> branch(const Bipartition& b);

enum class SuperType { M, Q };

enum class FamilyKind {
  A_E,           // {lambda, lambda*}, lambda != lambda*
  A_F,           // lambda = lambda*
  B_E,           // [lambda, mu], mu != lambda*
  B_F,           // [lambda, lambda*]
  D_E_distinct,  // [[lambda, mu]] in E, lambda != mu
  D_E_equal,     // [[lambda, lambda]] in E, signed
  D_F_distinct,  // [[lambda, mu]] in F, lambda != mu
  D_F_equal_M,   // [[lambda, lambda]] in F, n/2 even, signed
  D_F_equal_Q,   // [[lambda, lambda]] in F, n/2 odd
};
const char* family_kind_name(FamilyKind f);

struct IrrFamily {
  Kind kind = Kind::B;
  int n = 0;
  Bipartition label;  // canonical representative; second part empty for kind A
  FamilyKind family = FamilyKind::B_E;
  int sign = 0;       // +1/-1 for the signed D families, else 0
  SuperType type = SuperType::Q;
  uint64_t super_dim = 0;

  // Q: super_dim = 2d, block contributes 2d^2 - 1; M: D^2 - 1.
  uint64_t block_mass() const;
  std::string name() const;
  bool operator==(const IrrFamily& o) const {
    return kind == o.kind && n == o.n && label == o.label && family == o.family && sign == o.sign;
  }
  bool operator<(const IrrFamily& o) const;
};

std::vector<IrrFamily> classify(const GroupSpec& s);

struct DerivedPrediction {
  uint64_t by_count = 0;   // |G| - #Q - #M
  uint64_t by_blocks = 0;  // sum over blocks of (2d^2 - 1) resp. (D^2 - 1)
  uint64_t mass = 0;       // sum 2d^2 + sum D^2
  size_t q_families = 0;
  size_t m_families = 0;
};
// Throws std::logic_error when the two routes disagree.
DerivedPrediction predicted_derived_dim(const GroupSpec& s);

// One summand of a restricted supermodule; shifted = parity change applied.
// Type Q children are never marked shifted (they are evenly isomorphic to
// their parity shift).
struct RestrictionTerm {
  IrrFamily child;
  bool shifted = false;
  bool operator<(const RestrictionTerm& o) const;
  bool operator==(const RestrictionTerm& o) const { return child == o.child && shifted == o.shifted; }
};
std::vector<RestrictionTerm> super_restrict(const IrrFamily& f);

// Simple modules of the even subgroup: M families split into two parts
// (part 0 = even summand, 1 = odd summand), Q families give one (part 0).
struct EvenSimple {
  IrrFamily family;
  int part = 0;
  bool operator<(const EvenSimple& o) const;
  bool operator==(const EvenSimple& o) const { return family == o.family && part == o.part; }
};
std::vector<EvenSimple> branch_even(const EvenSimple& parent);

// Product of i^{a_j - 1} over cycle lengths, as i^power (power mod 4).
struct UnitScalar {
  int power = 0;  // value i^power
  UnitScalar operator*(UnitScalar o) const { return {(power + o.power) % 4}; }
  bool operator==(const UnitScalar&) const = default;
  std::string to_string() const;  // "1", "i", "-1", "-i"
};
UnitScalar cycle_type_scalar(const std::vector<int>& cycle_lengths);

// CSV: family,kind,supertype,super_dim,block
std::string family_table_csv(const GroupSpec& s);

}  // namespace sw
