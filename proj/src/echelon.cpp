#include "superweyl/echelon.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sw {

namespace {

struct Scratch {
  std::vector<Rational> acc;
  std::vector<uint8_t> mark;
  std::vector<uint32_t> touched;
  Rational tmp;

  void ensure(uint32_t dim) {
    if (acc.size() < dim) {
      acc.resize(dim);
      mark.resize(dim, 0);
    }
  }
  void touch(uint32_t i) {
    if (!mark[i]) {
      mark[i] = 1;
      touched.push_back(i);
    }
  }
};

Scratch& scratch(uint32_t dim) {
  thread_local Scratch s;
  s.ensure(dim);
  return s;
}

}  // namespace

EchelonBasis::EchelonBasis(uint32_t ambient_dim) : dim_(ambient_dim), pivot_row_(ambient_dim, -1) {}

SparseVec EchelonBasis::reduce(const SparseVec& v) const {
  Scratch& s = scratch(dim_);
  s.touched.clear();
  // Rows carry no entries in pivot columns, so one pass over v's pivot entries suffices.
  for (const auto& t : v) {
    if (t.idx >= dim_) throw std::out_of_range("vector index beyond ambient dimension");
    if (pivot_row_[t.idx] >= 0) continue;
    s.touch(t.idx);
    s.acc[t.idx] += t.c;
  }
  for (const auto& t : v) {
    const int32_t r = pivot_row_[t.idx];
    if (r < 0) continue;
    const SparseVec& row = rows_[r];
    for (size_t k = 1; k < row.size(); ++k) {
      const uint32_t j = row[k].idx;
      s.touch(j);
      s.tmp = t.c * row[k].c;
      s.acc[j] -= s.tmp;
    }
  }
  std::sort(s.touched.begin(), s.touched.end());
  SparseVec out;
  for (uint32_t j : s.touched) {
    if (s.acc[j] != 0) {
      out.push_back(Term{j, s.acc[j]});
      s.acc[j] = 0;
    }
    s.mark[j] = 0;
  }
  s.touched.clear();
  return out;
}

void EchelonBasis::insert_reduced(SparseVec r) {
  if (r.empty()) throw std::logic_error("insert_reduced of zero vector");
  if (r.front().c != 1) {
    const Rational inv = 1 / r.front().c;
    for (auto& t : r) t.c *= inv;
  }
  const uint32_t p = r.front().idx;
  if (pivot_row_[p] >= 0) throw std::logic_error("remainder not reduced");
  for (auto& row : rows_) {
    const Rational* c = sv_find(row, p);
    if (c) {
      const Rational coef = -*c;
      row = sv_axpy(row, coef, r);
    }
  }
  pivot_row_[p] = static_cast<int32_t>(rows_.size());
  rows_.push_back(std::move(r));
}

bool EchelonBasis::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  insert_reduced(std::move(r));
  return true;
}

std::vector<uint32_t> EchelonBasis::pivots() const {
  std::vector<uint32_t> p;
  p.reserve(rows_.size());
  for (const auto& r : rows_) p.push_back(r.front().idx);
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<SparseVec> EchelonBasis::rows() const {
  std::vector<SparseVec> out;
  out.reserve(rows_.size());
  for (uint32_t p : pivots()) out.push_back(rows_[pivot_row_[p]]);
  return out;
}

std::string EchelonBasis::dump() const {
  std::string out;
  for (const auto& r : rows()) {
    bool first = true;
    for (const auto& t : r) {
      if (!first) out += ' ';
      first = false;
      out += rational_str(t.c);
      out += ' ';
      out += std::to_string(t.idx);
    }
    out += '\n';
  }
  out += "dim=" + std::to_string(rank()) + "\n";
  return out;
}

size_t rank_of_union(const EchelonBasis& space, const std::vector<SparseVec>& extra) {
  EchelonBasis b = space;
  for (const auto& v : extra) b.insert(v);
  return b.rank();
}

bool contains(const EchelonBasis& space, const SparseVec& v) { return space.contains(v); }

}  // namespace sw
