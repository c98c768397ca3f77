#include "superweyl/galg.hpp"

#include <stdexcept>

namespace sw {

namespace {

void require_spec(const Group& g, const AlgebraElement& x) {
  if (!(x.spec == g.spec())) throw std::invalid_argument("algebra element from a different group");
}

}  // namespace

const char* grading_name(Grading g) {
  switch (g) {
    case Grading::Zero: return "zero";
    case Grading::Even: return "even";
    case Grading::Odd: return "odd";
    case Grading::Mixed: return "mixed";
  }
  return "?";
}

std::pair<SparseVec, SparseVec> homogeneous_parts(const BracketSpace& sp, const SparseVec& v) {
  std::pair<SparseVec, SparseVec> out;
  for (const auto& t : v) (sp.parity(t.idx) ? out.second : out.first).push_back(t);
  return out;
}

Grading grading_of(const BracketSpace& sp, const SparseVec& v) {
  bool ev = false, od = false;
  for (const auto& t : v) (sp.parity(t.idx) ? od : ev) = true;
  if (ev && od) return Grading::Mixed;
  if (od) return Grading::Odd;
  if (ev) return Grading::Even;
  return Grading::Zero;
}

SparseVec superbracket_any(const BracketSpace& sp, const SparseVec& x, const SparseVec& y) {
  auto [x0, x1] = homogeneous_parts(sp, x);
  auto [y0, y1] = homogeneous_parts(sp, y);
  SparseVec acc;
  for (const SparseVec* a : {&x0, &x1})
    for (const SparseVec* b : {&y0, &y1})
      if (!a->empty() && !b->empty()) acc = sv_add(acc, sp.bracket(*a, *b));
  return acc;
}

SparseVec GroupAlgebra::multiply(const SparseVec& x, const SparseVec& y) const {
  SparseVec out;
  out.reserve(x.size() * y.size());
  for (const auto& a : x)
    for (const auto& b : y) out.push_back(Term{g_.mul(a.idx, b.idx), a.c * b.c});
  sv_canonicalize(out);
  return out;
}

SparseVec GroupAlgebra::bracket(const SparseVec& x, const SparseVec& y) const {
  if (x.empty() || y.empty()) return {};
  const int sign = (g_.parity(x.front().idx) & g_.parity(y.front().idx)) ? 1 : -1;
  SparseVec out;
  out.reserve(2 * x.size() * y.size());
  for (const auto& a : x)
    for (const auto& b : y) {
      Rational c = a.c * b.c;
      out.push_back(Term{g_.mul(a.idx, b.idx), c});
      if (sign < 0) c = -c;
      out.push_back(Term{g_.mul(b.idx, a.idx), std::move(c)});
    }
  sv_canonicalize(out);
  return out;
}

AlgebraElement basis_element(const Group& g, const SignedPerm& x, const Rational& c) {
  if (x.n() != g.spec().n || !belongs_to(x, g.spec().kind)) throw std::invalid_argument("element outside group");
  return {g.spec(), sv_unit(g.index(x), c)};
}

AlgebraElement identity_element(const Group& g) { return basis_element(g, SignedPerm::identity(g.spec().n)); }

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) {
  if (!(x.spec == y.spec)) throw std::invalid_argument("spec mismatch");
  return {x.spec, sv_add(x.terms, y.terms)};
}

AlgebraElement scale(const AlgebraElement& x, const Rational& c) { return {x.spec, sv_scale(x.terms, c)}; }

AlgebraElement multiply(const Group& g, const AlgebraElement& x, const AlgebraElement& y) {
  require_spec(g, x);
  require_spec(g, y);
  return {g.spec(), GroupAlgebra(g).multiply(x.terms, y.terms)};
}

AlgebraElement superbracket(const Group& g, const AlgebraElement& x, const AlgebraElement& y) {
  require_spec(g, x);
  require_spec(g, y);
  return {g.spec(), superbracket_any(GroupAlgebra(g), x.terms, y.terms)};
}

Grading grading(const Group& g, const AlgebraElement& x) {
  require_spec(g, x);
  return grading_of(GroupAlgebra(g), x.terms);
}

AlgebraElement class_sum(const Group& g, const std::vector<SignedPerm>& cls) {
  AlgebraElement out{g.spec(), {}};
  for (const auto& x : cls) out.terms.push_back(Term{g.index(x), 1});
  sv_canonicalize(out.terms);
  return out;
}

AlgebraElement yjm(const Group& g, int i) {
  const int n = g.spec().n;
  if (g.spec().kind == Kind::A) throw std::invalid_argument("signed YJM elements need kind B or D");
  if (i < 1 || i > n) throw std::invalid_argument("YJM index out of range");
  std::vector<SignedPerm> members;
  for (int k = 1; k < i; ++k) {
    const auto tr = SignedPerm::transposition(n, k, i);
    members.push_back(tr);
    members.push_back(compose_all({SignedPerm::t(n, k), SignedPerm::t(n, i), tr}));
  }
  return class_sum(g, members);
}

AlgebraElement yjm_total(const Group& g) {
  AlgebraElement out{g.spec(), {}};
  for (int i = 1; i <= g.spec().n; ++i) out = add(out, yjm(g, i));
  return out;
}

AlgebraElement t_total(const Group& g) {
  if (g.spec().kind != Kind::B) throw std::invalid_argument("t_total needs kind B");
  std::vector<SignedPerm> members;
  for (int j = 1; j <= g.spec().n; ++j) members.push_back(SignedPerm::t(g.spec().n, j));
  return class_sum(g, members);
}

AlgebraElement transposition_total(const Group& g) {
  const int n = g.spec().n;
  std::vector<SignedPerm> members;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) members.push_back(SignedPerm::transposition(n, i, j));
  return class_sum(g, members);
}

AlgebraElement center_project(const Group& g, const AlgebraElement& x) {
  require_spec(g, x);
  SparseVec acc;
  uint64_t even = 0;
  for (uint32_t h = 0; h < g.order(); ++h) {
    if (g.parity(h)) continue;
    ++even;
    const uint32_t hi = g.inv(h);
    for (const auto& t : x.terms) acc.push_back(Term{g.mul(g.mul(h, t.idx), hi), t.c});
  }
  sv_canonicalize(acc);
  return {g.spec(), sv_scale(acc, Rational(1, static_cast<long>(even)))};
}

AlgebraElement conj_by(const Group& g, const SignedPerm& s, const AlgebraElement& x) {
  require_spec(g, x);
  const uint32_t si = g.index(s), sinv = g.inv(si);
  AlgebraElement out{g.spec(), {}};
  for (const auto& t : x.terms) out.terms.push_back(Term{g.mul(g.mul(si, t.idx), sinv), t.c});
  sv_canonicalize(out.terms);
  return out;
}

std::string serialize(const AlgebraElement& x) { return sv_serialize(x.terms); }

AlgebraElement parse_element(const GroupSpec& spec, const std::string& text) {
  AlgebraElement x{spec, sv_parse(text)};
  const uint64_t ord = group_order(spec);
  for (const auto& t : x.terms)
    if (t.idx >= ord) throw std::invalid_argument("ordinal out of range");
  return x;
}

}  // namespace sw
