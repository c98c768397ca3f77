#include "superweyl/sparse.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sw {

SparseVec sv_unit(uint32_t idx, const Rational& c) {
  if (c == 0) return {};
  return {Term{idx, c}};
}

SparseVec sv_axpy(const SparseVec& a, const Rational& s, const SparseVec& b) {
  if (s == 0) return a;
  SparseVec out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  Rational tmp;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].idx < b[j].idx)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].idx < a[i].idx) {
      out.push_back(Term{b[j].idx, s * b[j].c});
      ++j;
    } else {
      tmp = s * b[j].c;
      tmp += a[i].c;
      if (tmp != 0) out.push_back(Term{a[i].idx, tmp});
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec sv_add(const SparseVec& a, const SparseVec& b) { return sv_axpy(a, 1, b); }

SparseVec sv_scale(const SparseVec& a, const Rational& s) {
  if (s == 0) return {};
  SparseVec out = a;
  for (auto& t : out) t.c *= s;
  return out;
}

void sv_canonicalize(SparseVec& v) {
  std::sort(v.begin(), v.end(), [](const Term& x, const Term& y) { return x.idx < y.idx; });
  SparseVec out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && out.back().idx == t.idx)
      out.back().c += t.c;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const Term& t) { return t.c == 0; });
  v = std::move(out);
}

bool sv_equal(const SparseVec& a, const SparseVec& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].idx != b[i].idx || a[i].c != b[i].c) return false;
  return true;
}

const Rational* sv_find(const SparseVec& v, uint32_t idx) {
  auto it = std::lower_bound(v.begin(), v.end(), idx, [](const Term& t, uint32_t k) { return t.idx < k; });
  return it != v.end() && it->idx == idx ? &it->c : nullptr;
}

std::string rational_str(const Rational& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

std::string sv_serialize(const SparseVec& v) {
  std::string out;
  for (const auto& t : v) {
    out += rational_str(t.c);
    out += ' ';
    out += std::to_string(t.idx);
    out += '\n';
  }
  return out;
}

SparseVec sv_parse(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  SparseVec v;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string coeff;
    uint64_t idx = 0;
    if (!(ls >> coeff >> idx)) throw std::invalid_argument("malformed term line: " + line);
    Rational c;
    if (c.set_str(coeff, 10) != 0) throw std::invalid_argument("malformed coefficient: " + coeff);
    c.canonicalize();
    v.push_back(Term{static_cast<uint32_t>(idx), c});
  }
  sv_canonicalize(v);
  return v;
}

}  // namespace sw
