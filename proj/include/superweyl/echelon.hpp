#pragma once

#include <string>
#include <vector>

#include "superweyl/sparse.hpp"

namespace sw {

// Reduced row echelon basis of a subspace of Q^dim. Pivot = smallest index in a
// row, normalized to 1, and no row has a nonzero entry in another row's pivot.
class EchelonBasis {
 public:
  explicit EchelonBasis(uint32_t ambient_dim = 0);

  uint32_t ambient_dim() const { return dim_; }
  size_t rank() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }

  // Returns true iff v was independent of the span (basis updated).
  bool insert(const SparseVec& v);
  // Normal form of v modulo the span: zero iff v is contained. Read-only.
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  // Inserts an already-reduced nonzero remainder (skips the reduction pass).
  void insert_reduced(SparseVec r);

  bool is_pivot(uint32_t col) const { return pivot_row_[col] >= 0; }
  // Rows ordered by pivot.
  std::vector<SparseVec> rows() const;
  std::vector<uint32_t> pivots() const;

  // One row per line as space-separated "num/den idx" terms, then "dim=<k>".
  std::string dump() const;

 private:
  uint32_t dim_;
  std::vector<SparseVec> rows_;
  std::vector<int32_t> pivot_row_;
};

size_t rank_of_union(const EchelonBasis& space, const std::vector<SparseVec>& extra);
bool contains(const EchelonBasis& space, const SparseVec& v);

}  // namespace sw
