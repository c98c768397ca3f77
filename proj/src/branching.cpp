#include "superweyl/branching.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace sw {

namespace {

struct TraceForm {
  std::shared_ptr<const RepRealization> rep;
  CMat qc[2];
};

// chi_p(g) = sum_k tr(R_k(g) Q_{k,p}), Q_{k,p} = E_k P_p|_{kk} E_k^H with P_p
// the orthogonal projector onto the parity-p block.
std::vector<TraceForm> trace_forms(const SuperModuleSpec& m) {
  std::vector<TraceForm> out;
  int off = 0;
  for (const auto& piece : m.pieces) {
    TraceForm t;
    t.rep = piece.rep;
    for (int p = 0; p < 2; ++p) {
      const int c0 = p == 0 ? 0 : m.dim0;
      const int cn = p == 0 ? m.dim0 : m.dim1;
      const CMat cols = m.change.block(off, c0, piece.dim(), cn);
      const CMat e = piece.embed * cols;
      t.qc[p] = (e * e.adjoint()).transpose();
    }
    off += piece.dim();
    out.push_back(std::move(t));
  }
  return out;
}

void trace_pair(const std::vector<TraceForm>& forms, const SignedPerm& g, cplx out[2]) {
  out[0] = out[1] = 0;
  for (const auto& f : forms) {
    const RMat r = f.rep->matrix_of(g);
    for (int p = 0; p < 2; ++p) out[p] += (f.qc[p].array() * r.array().cast<cplx>()).sum();
  }
}

}  // namespace

BranchingContext::BranchingContext(GroupSpec parent) : spec_(parent), h_({parent.kind, parent.n - 1}) {
  validate(spec_);
  if (spec_.n < 3 || (spec_.kind == Kind::D && spec_.n < 5))
    throw std::invalid_argument("branching needs n >= 3 (n >= 5 for D)");
  for (uint32_t i = 0; i < h_.order(); ++i)
    if (superdegree(h_.element(i), spec_.kind) == 0) even_.push_back(i);
  children_ = classify(h_.spec());
  for (const auto& c : children_) child_chars_.push_back(characters(assemble_supermodule(c), spec_.n - 1));
  std::vector<const std::vector<cplx>*> simples;
  for (size_t k = 0; k < children_.size(); ++k) {
    simples.push_back(&child_chars_[k].part[0]);
    if (children_[k].type == SuperType::M) simples.push_back(&child_chars_[k].part[1]);
  }
  for (size_t a = 0; a < simples.size(); ++a)
    for (size_t b = 0; b < simples.size(); ++b)
      ortho_error_ = std::max(ortho_error_, std::abs(inner(*simples[a], *simples[b]) - (a == b ? 1.0 : 0.0)));
}

BranchingContext::Chars BranchingContext::characters(const SuperModuleSpec& m, int rank) const {
  const auto forms = trace_forms(m);
  Chars c;
  c.part[0].resize(even_.size());
  c.part[1].resize(even_.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (int64_t k = 0; k < static_cast<int64_t>(even_.size()); ++k) {
    const SignedPerm& h = h_.element(even_[k]);
    cplx t[2];
    trace_pair(forms, rank == spec_.n ? extend_rank(h, spec_.n) : h, t);
    c.part[0][k] = t[0];
    c.part[1][k] = t[1];
  }
  return c;
}

cplx BranchingContext::inner(const std::vector<cplx>& a, const std::vector<cplx>& b) const {
  cplx s = 0;
  for (size_t k = 0; k < a.size(); ++k) s += std::conj(a[k]) * b[k];
  return s / static_cast<double>(a.size());
}

BranchingResult BranchingContext::verify(const IrrFamily& f) const {
  if (f.kind != spec_.kind || f.n != spec_.n) throw std::invalid_argument("family does not match context");
  BranchingResult res;
  res.parent = f;
  const SuperModuleSpec w = assemble_supermodule(f);
  const Chars wc = characters(w, spec_.n);
  auto mult = [&](const std::vector<cplx>& v, const std::vector<cplx>& x) {
    const cplx m = inner(v, x);
    const double r = std::round(m.real());
    res.rounding_error = std::max(res.rounding_error, std::abs(m - r));
    return static_cast<int>(r);
  };
  uint64_t dim_seen = 0;
  for (size_t k = 0; k < children_.size(); ++k) {
    const IrrFamily& c = children_[k];
    const Chars& cc = child_chars_[k];
    if (c.type == SuperType::Q) {
      const int a = mult(cc.part[0], wc.part[0]);
      const int b = mult(cc.part[0], wc.part[1]);
      if (a != b) {
        res.consistent = false;
        res.notes.push_back("type Q child " + c.name() + " has unequal even/odd multiplicities");
      }
      for (int i = 0; i < a; ++i) res.observed.push_back({c, false});
      dim_seen += static_cast<uint64_t>(a) * c.super_dim;
    } else {
      const int a = mult(cc.part[0], wc.part[0]);
      const int b = mult(cc.part[1], wc.part[0]);
      if (mult(cc.part[1], wc.part[1]) != a || mult(cc.part[0], wc.part[1]) != b) {
        res.consistent = false;
        res.notes.push_back("type M child " + c.name() + " has inconsistent odd-part multiplicities");
      }
      for (int i = 0; i < a; ++i) res.observed.push_back({c, false});
      for (int i = 0; i < b; ++i) res.observed.push_back({c, true});
      dim_seen += static_cast<uint64_t>(a + b) * c.super_dim;
    }
  }
  if (dim_seen != f.super_dim) {
    res.consistent = false;
    res.notes.push_back("restricted summands do not exhaust the module");
  }
  if (res.rounding_error > 1e-6) {
    res.consistent = false;
    res.notes.push_back("multiplicity not within 1e-6 of an integer");
  }
  std::sort(res.observed.begin(), res.observed.end());
  res.predicted = super_restrict(f);
  for (size_t i = 0; i < res.observed.size();) {
    size_t j = i;
    while (j < res.observed.size() && res.observed[j] == res.observed[i]) ++j;
    res.max_multiplicity = std::max(res.max_multiplicity, static_cast<int>(j - i));
    i = j;
  }
  res.match = res.consistent && res.observed == res.predicted;
  return res;
}

BranchingResult verify_branching(const GroupSpec& spec, const IrrFamily& f) {
  return BranchingContext(spec).verify(f);
}

std::vector<std::pair<Bipartition, int>> restrict_ungraded(const Bipartition& b) {
  const int n = b.n();
  if (n < 2) throw std::invalid_argument("restriction needs n >= 2");
  std::vector<SignedPerm> elems;
  if (n - 1 >= 2) {
    elems = Group({Kind::B, n - 1}).elements();
  } else {
    elems = {SignedPerm::identity(1), SignedPerm::t(1, 1)};
  }
  auto chars = [&](const RepRealization& r, bool lift) {
    std::vector<double> c(elems.size());
    for (size_t k = 0; k < elems.size(); ++k) c[k] = r.matrix_of(lift ? extend_rank(elems[k], n) : elems[k]).trace();
    return c;
  };
  const auto parent = chars(*realization(b), true);
  std::vector<std::pair<Bipartition, int>> out;
  for (const auto& c : bipartitions(n - 1)) {
    const auto cc = chars(*realization(c), false);
    double s = 0;
    for (size_t k = 0; k < elems.size(); ++k) s += parent[k] * cc[k];
    s /= static_cast<double>(elems.size());
    const double r = std::round(s);
    if (std::abs(s - r) > 1e-6) throw std::logic_error("non-integral multiplicity");
    if (r > 0) out.emplace_back(c, static_cast<int>(r));
  }
  return out;
}

std::string to_string(const RestrictionTerm& t) { return t.shifted ? "Pi(" + t.child.name() + ")" : t.child.name(); }

}  // namespace sw
