#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sw {

using Rational = mpq_class;

struct Term {
  uint32_t idx;
  Rational c;
};

// Sorted by idx, no stored zeros.
using SparseVec = std::vector<Term>;

SparseVec sv_unit(uint32_t idx, const Rational& c = 1);
SparseVec sv_add(const SparseVec& a, const SparseVec& b);
// a + s*b
SparseVec sv_axpy(const SparseVec& a, const Rational& s, const SparseVec& b);
SparseVec sv_scale(const SparseVec& a, const Rational& s);
// Sort by idx, merge duplicates, drop zeros.
void sv_canonicalize(SparseVec& v);
bool sv_equal(const SparseVec& a, const SparseVec& b);
const Rational* sv_find(const SparseVec& v, uint32_t idx);

std::string rational_str(const Rational& q);  // always "num/den"
// One term per line, "num/den idx", sorted by idx.
std::string sv_serialize(const SparseVec& v);
SparseVec sv_parse(const std::string& text);

}  // namespace sw
