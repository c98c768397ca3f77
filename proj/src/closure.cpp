#include "superweyl/closure.hpp"

#include <chrono>
#include <algorithm>
#include <functional>

namespace sw {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  Clock::time_point start = Clock::now();
  double budget;
  explicit Deadline(double b) : budget(b) {}
  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start).count(); }
  bool expired() const { return budget > 0 && elapsed() > budget; }
};

// Feeds candidates [begin, end) into the basis in index order. on_new is called
// with every newly inserted normal form, in order.
void feed(EchelonBasis& basis, size_t begin, size_t end, const std::function<SparseVec(size_t)>& make,
          bool parallel, const std::function<void(const SparseVec&)>& on_new, ClosureStats& st) {
  const size_t m = end - begin;
  st.candidates += m;
  if (!parallel) {
    for (size_t k = begin; k < end; ++k) {
      SparseVec r = basis.reduce(make(k));
      if (r.empty()) continue;
      on_new(r);
      basis.insert_reduced(std::move(r));
      ++st.inserted;
    }
    return;
  }
  std::vector<SparseVec> pre(m);
  // Read-only phase: the basis is frozen while candidates are reduced against it.
#pragma omp parallel for schedule(dynamic, 4)
  for (int64_t k = 0; k < static_cast<int64_t>(m); ++k) pre[k] = basis.reduce(make(begin + k));
  const size_t snapshot_rank = basis.rank();
  for (size_t k = 0; k < m; ++k) {
    if (pre[k].empty()) continue;
    SparseVec r = basis.rank() == snapshot_rank ? std::move(pre[k]) : basis.reduce(pre[k]);
    if (r.empty()) continue;
    on_new(r);
    basis.insert_reduced(std::move(r));
    ++st.inserted;
  }
}

std::vector<SparseVec> split_homogeneous(const BracketSpace& sp, const std::vector<SparseVec>& vs) {
  std::vector<SparseVec> out;
  for (const auto& v : vs) {
    auto [e, o] = homogeneous_parts(sp, v);
    if (!e.empty()) out.push_back(std::move(e));
    if (!o.empty()) out.push_back(std::move(o));
  }
  return out;
}

SparseVec normalized(SparseVec r) {
  const Rational inv = 1 / r.front().c;
  for (auto& t : r) t.c *= inv;
  return r;
}

}  // namespace

EchelonBasis full_space(uint32_t dim) {
  EchelonBasis b(dim);
  for (uint32_t i = 0; i < dim; ++i) b.insert_reduced(sv_unit(i));
  return b;
}

ClosureResult lie_closure(const BracketSpace& sp, const std::vector<SparseVec>& generators,
                          const ClosureOptions& opt) {
  Deadline dl(opt.budget_seconds);
  ClosureResult res{EchelonBasis(sp.dim()), true, {}};
  const std::vector<SparseVec> gens = split_homogeneous(sp, generators);
  std::vector<SparseVec> work;
  auto push = [&](const SparseVec& r) { work.push_back(normalized(r)); };

  feed(res.basis, 0, gens.size(), [&](size_t k) { return gens[k]; }, false, push, res.stats);

  // Each worklist item is bracketed with every generator; items are consumed
  // in insertion order, a batch at a time.
  const size_t per_item = gens.size();
  const size_t items_per_batch = std::max<size_t>(1, opt.batch / std::max<size_t>(1, per_item));
  size_t next = 0;
  while (next < work.size()) {
    if (dl.expired()) {
      res.complete = false;
      break;
    }
    const size_t stop = std::min(work.size(), next + items_per_batch);
    const size_t base = next;
    // work may grow (reallocate) inside feed's serial phase; the parallel phase
    // only reads items in [base, stop), which are not touched by push.
    std::vector<SparseVec> items(work.begin() + static_cast<std::ptrdiff_t>(base),
                                 work.begin() + static_cast<std::ptrdiff_t>(stop));
    feed(
        res.basis, 0, items.size() * per_item,
        [&](size_t k) { return sp.bracket(gens[k % per_item], items[k / per_item]); }, opt.parallel, push,
        res.stats);
    next = stop;
  }
  res.stats.seconds = dl.elapsed();
  return res;
}

ClosureResult derived_span(const BracketSpace& sp, const EchelonBasis& space, const ClosureOptions& opt) {
  Deadline dl(opt.budget_seconds);
  ClosureResult res{EchelonBasis(sp.dim()), true, {}};
  const std::vector<SparseVec> h = split_homogeneous(sp, space.rows());
  const size_t m = h.size();
  // pairs (a, b) with a <= b, lexicographic; pair k maps to (a, b) via row offsets
  std::vector<size_t> offset(m + 1, 0);
  for (size_t a = 0; a < m; ++a) offset[a + 1] = offset[a] + (m - a);
  const size_t total = offset[m];
  auto pair_of = [&](size_t k) {
    const size_t a = static_cast<size_t>(std::upper_bound(offset.begin(), offset.end(), k) - offset.begin()) - 1;
    return std::pair<size_t, size_t>(a, a + (k - offset[a]));
  };
  const size_t batch = std::max<size_t>(opt.batch, 1) * 16;
  for (size_t begin = 0; begin < total; begin += batch) {
    if (dl.expired()) {
      res.complete = false;
      break;
    }
    feed(
        res.basis, begin, std::min(total, begin + batch),
        [&](size_t k) {
          auto [a, b] = pair_of(k);
          return sp.bracket(h[a], h[b]);
        },
        opt.parallel, [](const SparseVec&) {}, res.stats);
  }
  res.stats.seconds = dl.elapsed();
  return res;
}

ClosureResult derived_span_full(const BracketSpace& sp, const ClosureOptions& opt) {
  return derived_span(sp, full_space(sp.dim()), opt);
}

bool is_bracket_closed(const BracketSpace& sp, const EchelonBasis& space, std::string* witness) {
  const std::vector<SparseVec> h = split_homogeneous(sp, space.rows());
  for (size_t a = 0; a < h.size(); ++a)
    for (size_t b = a; b < h.size(); ++b)
      if (!space.contains(sp.bracket(h[a], h[b]))) {
        if (witness) *witness = "pair (" + std::to_string(a) + "," + std::to_string(b) + ")";
        return false;
      }
  return true;
}

ParityDims parity_dims(const BracketSpace& sp, const EchelonBasis& space) {
  ParityDims d;
  for (const auto& r : space.rows()) {
    switch (grading_of(sp, r)) {
      case Grading::Even: ++d.even; break;
      case Grading::Odd: ++d.odd; break;
      case Grading::Mixed: ++d.mixed; break;
      case Grading::Zero: break;
    }
  }
  return d;
}

}  // namespace sw
