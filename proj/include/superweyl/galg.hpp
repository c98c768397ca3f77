#pragma once

#include <string>
#include <utility>
#include <vector>

#include "superweyl/sparse.hpp"
#include "superweyl/wgroup.hpp"

namespace sw {

enum class Grading { Zero, Even, Odd, Mixed };
const char* grading_name(Grading g);

// Element of the group algebra QG, coordinates indexed by group ordinals.
struct AlgebraElement {
  GroupSpec spec;
  SparseVec terms;
};

// Interface consumed by the closure engine: a super vector space with
// homogeneous coordinates and a superbracket.
class BracketSpace {
 public:
  virtual ~BracketSpace() = default;
  virtual uint32_t dim() const = 0;
  virtual int parity(uint32_t coord) const = 0;
  // Inputs homogeneous.
  virtual SparseVec bracket(const SparseVec& x, const SparseVec& y) const = 0;
};

// Splits into (even part, odd part) according to coordinate parity.
std::pair<SparseVec, SparseVec> homogeneous_parts(const BracketSpace& sp, const SparseVec& v);
Grading grading_of(const BracketSpace& sp, const SparseVec& v);
// Bilinear extension over homogeneous components.
SparseVec superbracket_any(const BracketSpace& sp, const SparseVec& x, const SparseVec& y);

class GroupAlgebra : public BracketSpace {
 public:
  explicit GroupAlgebra(const Group& g) : g_(g) {}
  const Group& group() const { return g_; }
  uint32_t dim() const override { return g_.order(); }
  int parity(uint32_t coord) const override { return g_.parity(coord); }
  SparseVec bracket(const SparseVec& x, const SparseVec& y) const override;
  SparseVec multiply(const SparseVec& x, const SparseVec& y) const;

 private:
  const Group& g_;
};

AlgebraElement basis_element(const Group& g, const SignedPerm& x, const Rational& c = 1);
AlgebraElement identity_element(const Group& g);
AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement scale(const AlgebraElement& x, const Rational& c);
AlgebraElement multiply(const Group& g, const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement superbracket(const Group& g, const AlgebraElement& x, const AlgebraElement& y);
Grading grading(const Group& g, const AlgebraElement& x);

AlgebraElement class_sum(const Group& g, const std::vector<SignedPerm>& cls);
AlgebraElement yjm(const Group& g, int i);  // X_i (kinds B and D)
AlgebraElement yjm_total(const Group& g);   // sum of X_i
AlgebraElement t_total(const Group& g);     // sum of t_j (kind B)
AlgebraElement transposition_total(const Group& g);  // sum of (i,j)

// p(z) = (1/|G0|) sum_{h in G0} h z h^{-1}
AlgebraElement center_project(const Group& g, const AlgebraElement& x);
// s x s^{-1} termwise
AlgebraElement conj_by(const Group& g, const SignedPerm& s, const AlgebraElement& x);

std::string serialize(const AlgebraElement& x);
AlgebraElement parse_element(const GroupSpec& spec, const std::string& text);

}  // namespace sw
