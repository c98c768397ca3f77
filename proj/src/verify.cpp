#include "superweyl/verify.hpp"

#include <Eigen/Core>
#include <gmp.h>

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <stdexcept>

#include "superweyl/galg.hpp"
#include "superweyl/tabrep.hpp"

namespace sw {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Full multiplication tables above this order cost more memory than they save.
constexpr uint64_t kTableOrderCap = 8000;

void prepare_table(Group& g, const VerifyOptions& opt, bool* from_cache) {
  if (g.order() > kTableOrderCap) return;
  const bool hit = opt.cache_dir.empty() ? (g.build_table(), false) : g.load_or_build_table(opt.cache_dir);
  if (from_cache) *from_cache = hit;
}

void check_order(const GroupSpec& s, const VerifyOptions& opt) {
  validate(s);
  if (group_order(s) > opt.max_order)
    throw std::invalid_argument(spec_name(s) + " has order " + std::to_string(group_order(s)) + " above the cap " +
                                std::to_string(opt.max_order));
}

CMat prod(const Associator& a, const Associator& b) { return a.matrix * b.matrix; }

double dist(const CMat& a, const CMat& b) { return a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

std::vector<SignedPerm> reflection_generators(const GroupSpec& s, uint64_t shuffle_seed) {
  const Reflections r = reflections(s);
  std::vector<SignedPerm> out = r.long_refl;
  out.insert(out.end(), r.short_refl.begin(), r.short_refl.end());
  if (shuffle_seed != 0) {
    std::mt19937_64 rng(shuffle_seed);
    std::shuffle(out.begin(), out.end(), rng);
  }
  return out;
}

VerificationReport verify_theorem(const GroupSpec& s, const VerifyOptions& opt) {
  check_order(s, opt);
  VerificationReport rep;
  rep.spec = s;
  auto t0 = Clock::now();
  Group g(s, opt.max_order);
  prepare_table(g, opt, &rep.table_from_cache);
  rep.order = g.order();
  rep.timings.push_back({"group", since(t0)});
  const GroupAlgebra ga(g);
  const ClosureOptions co = opt.closure();

  t0 = Clock::now();
  std::vector<SparseVec> gens;
  for (const auto& x : reflection_generators(s, opt.shuffle_seed)) gens.push_back(sv_unit(g.index(x)));
  const ClosureResult lie = lie_closure(ga, gens, co);
  rep.timings.push_back({"closure", since(t0)});
  rep.dim_g = lie.basis.rank();
  const ParityDims pd = parity_dims(ga, lie.basis);
  rep.dim_g0 = pd.even;
  rep.dim_g1 = pd.odd;

  t0 = Clock::now();
  const ClosureResult der = derived_span_full(ga, co);
  rep.timings.push_back({"derived", since(t0)});
  rep.dim_derived = der.basis.rank();

  t0 = Clock::now();
  const DerivedPrediction pred = predicted_derived_dim(s);
  rep.predicted_derived = pred.by_count;
  rep.predicted_by_blocks = pred.by_blocks;
  rep.timings.push_back({"prediction", since(t0)});

  t0 = Clock::now();
  const Reflections refl = reflections(s);
  std::vector<SparseVec> sums{class_sum(g, refl.long_refl).terms};
  if (!refl.short_refl.empty()) sums.push_back(class_sum(g, refl.short_refl).terms);
  EchelonBasis rhs = der.basis;
  for (const auto& v : sums) rhs.insert(v);
  rep.dim_rhs = rhs.rank();

  rep.g_in_rhs = true;
  for (const auto& row : lie.basis.rows())
    if (!rhs.contains(row)) {
      rep.g_in_rhs = false;
      break;
    }
  rep.class_sums_in_g = std::all_of(sums.begin(), sums.end(), [&](const SparseVec& v) { return lie.basis.contains(v); });
  rep.rhs_in_g = rep.class_sums_in_g;
  if (rep.rhs_in_g)
    for (const auto& row : der.basis.rows())
      if (!lie.basis.contains(row)) {
        rep.rhs_in_g = false;
        break;
      }
  rep.timings.push_back({"containment", since(t0)});

  if (g.order() <= opt.fixpoint_max_order && lie.complete) {
    t0 = Clock::now();
    rep.fixpoint_checked = true;
    rep.fixpoint_ok = is_bracket_closed(ga, lie.basis);
    rep.timings.push_back({"fixpoint", since(t0)});
  }

  rep.complete = lie.complete && der.complete;
  rep.equal = rep.dim_g == rep.dim_rhs;
  rep.derived_consistent = rep.dim_derived == rep.predicted_derived && rep.dim_derived == rep.predicted_by_blocks;
  return rep;
}

DerivedReport verify_derived(const GroupSpec& s, const VerifyOptions& opt) {
  check_order(s, opt);
  DerivedReport rep;
  rep.spec = s;
  const auto t0 = Clock::now();
  Group g(s, opt.max_order);
  prepare_table(g, opt, nullptr);
  const GroupAlgebra ga(g);
  const ClosureResult der = derived_span_full(ga, opt.closure());
  rep.complete = der.complete;
  rep.dim_derived = der.basis.rank();
  const DerivedPrediction pred = predicted_derived_dim(s);
  rep.predicted_by_count = pred.by_count;
  rep.predicted_by_blocks = pred.by_blocks;
  rep.seconds = since(t0);
  return rep;
}

AxiomReport verify_axioms(const GroupSpec& s, const VerifyOptions& opt) {
  check_order(s, opt);
  AxiomReport rep;
  rep.spec = s;
  rep.hypotheses_hold = s.n >= 5;
  const Group g(s, opt.max_order);

  const std::vector<SignedPerm> refl = reflection_generators(s, 0);
  const std::set<SignedPerm> sset(refl.begin(), refl.end());
  rep.s_size = sset.size();
  rep.s_conjugation_closed = true;
  for (const auto& c : g.coxeter_generators())
    for (const auto& r : refl)
      if (!sset.count(compose_all({c, r, inverse(c)}))) rep.s_conjugation_closed = false;

  // x = (1/2)[a, b] for odd a, b with ab = ba = x.
  const std::vector<SignedPerm> sp = even_generating_class(g);
  rep.s_prime_size = sp.size();
  rep.s_prime_half_brackets = !sp.empty();
  for (const auto& x : sp) {
    bool found = false;
    for (const auto& a : refl) {
      const SignedPerm b = compose(inverse(a), x);
      if (sset.count(b) && compose(b, a) == x) {
        found = true;
        break;
      }
    }
    if (!found) rep.s_prime_half_brackets = false;
  }
  rep.s_prime_generated = subgroup_generated(sp, s);
  rep.even_order = g.order() / 2;
  rep.s_prime_generates = rep.s_prime_generated == rep.even_order;

  switch (s.kind) {
    case Kind::A:
      for (const auto& p : partitions(s.n)) rep.simple_dims.push_back(hook_dim(p));
      break;
    case Kind::B:
      for (const auto& b : bipartitions(s.n)) rep.simple_dims.push_back(bipartition_dim(b));
      break;
    case Kind::D:
      for (const auto& b : bipartitions(s.n)) {
        if (swap_parts(b) < b) continue;
        const uint64_t d = bipartition_dim(b);
        if (b.first == b.second) {
          rep.simple_dims.push_back(d / 2);
          rep.simple_dims.push_back(d / 2);
        } else {
          rep.simple_dims.push_back(d);
        }
      }
      break;
  }
  for (const auto& f : classify(s)) {
    const uint64_t h = f.super_dim / 2;
    rep.even_simple_dims.push_back(h);
    if (f.type == SuperType::M) rep.even_simple_dims.push_back(f.super_dim - h);
  }
  std::sort(rep.simple_dims.begin(), rep.simple_dims.end());
  std::sort(rep.even_simple_dims.begin(), rep.even_simple_dims.end());
  auto has_two = [](const std::vector<uint64_t>& v) { return std::find(v.begin(), v.end(), 2u) != v.end(); };
  rep.no_dim_two = !has_two(rep.simple_dims) && !has_two(rep.even_simple_dims);
  return rep;
}

bool ShapeCheck::passed(double tol) const {
  return relation_error <= tol && trace_error <= tol && yjm_error <= tol && intertwining_error <= tol &&
         inverse_error <= tol && composition_error <= tol && commutation_error <= tol && sigma_nat_ok;
}

bool AssociatorReport::passed() const {
  return !shapes.empty() && std::all_of(shapes.begin(), shapes.end(), [&](const ShapeCheck& c) { return c.passed(tol); });
}

AssociatorReport verify_associators(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("associator suite supports 1 <= n <= 8");
  AssociatorReport rep;
  rep.n = n;
  const auto bps = bipartitions(n);
  rep.shapes.resize(bps.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (int64_t k = 0; k < static_cast<int64_t>(bps.size()); ++k) {
    const Bipartition& b = bps[k];
    ShapeCheck c;
    c.shape = b;
    const auto r = realization(b);
    c.dim = r->dim();
    const RelationReport rel = check_relations(*r, rep.tol);
    c.relation_error = rel.ok ? rel.max_error : std::max(rel.max_error, 1.0);
    if (n >= 2) {
      const RelationReport tr = check_class_traces(*r, Kind::B, rep.tol);
      c.trace_error = tr.ok ? tr.max_error : std::max(tr.max_error, 1.0);
    }
    const YjmTable y = yjm_check(*r, rep.tol);
    c.yjm_error = y.ok ? y.max_error : std::max(y.max_error, 1.0);

    const Associator p = associator(b, Twist::EpsPrime);
    const Associator d = associator(b, Twist::EpsDoublePrime);
    const Associator e = associator(b, Twist::Eps);
    for (const Associator* a : {&p, &d, &e})
      c.intertwining_error = std::max(c.intertwining_error, sw::intertwining_error(*a, *r, *realization(a->target)));

    const CMat id = CMat::Identity(c.dim, c.dim);
    const Associator dd = associator(d.target, Twist::EpsDoublePrime);
    const Associator ee = associator(e.target, Twist::Eps);
    c.inverse_error = std::max(dist(prod(dd, d), id), dist(prod(ee, e), id));

    // phi_eps = eps' . phi''^{(mu, lambda)} o phi'
    const Associator d_swapped = associator(p.target, Twist::EpsDoublePrime);
    c.composition_error = dist(e.matrix, unit_value(p.scalar) * prod(d_swapped, p));

    // phi''^{(mu,lambda)} o phi' = (-1)^{|lambda|(n-1)} phi'^{(lambda*,mu*)} o phi''
    const Associator p_conj = associator(d.target, Twist::EpsPrime);
    const double sign = (size(b.first) * (n - 1)) % 2 ? -1.0 : 1.0;
    c.commutation_error = dist(prod(d_swapped, p), sign * prod(p_conj, d));

    // sigma of R(lambda, mu)^nat is pi^{|lambda|}, pi = (1, 2, ..., n)
    const std::vector<int> sig = sigma_of(swap_tableaux(row_major(b)));
    const int l = size(b.first);
    c.sigma_nat_ok = static_cast<int>(sig.size()) == n;
    for (int j = 1; j <= n && c.sigma_nat_ok; ++j)
      if (sig[j - 1] != (j - 1 + l) % n + 1) c.sigma_nat_ok = false;
    rep.shapes[k] = std::move(c);
  }
  return rep;
}

bool BranchingReport::passed() const {
  return orthonormality_error <= 1e-6 && !results.empty() &&
         std::all_of(results.begin(), results.end(), [](const BranchingResult& r) { return r.match; });
}

BranchingReport verify_branching_all(const GroupSpec& s) {
  BranchingReport rep;
  rep.spec = s;
  const BranchingContext ctx(s);
  rep.orthonormality_error = ctx.orthonormality_error();
  for (const auto& f : classify(s)) rep.results.push_back(ctx.verify(f));
  return rep;
}

bool SupermatReport::passed() const {
  return bracket_closed && !asserted.empty() &&
         std::all_of(asserted.begin(), asserted.end(), [](const OddGeneration& g) { return g.equal(); });
}

SupermatReport verify_supermat(const VerifyOptions& opt) {
  SupermatReport rep;
  const ClosureOptions co = opt.closure();
  rep.asserted = {odd_generates(SuperFamily::SL, 2, co), odd_generates(SuperFamily::SL, 3, co),
                  odd_generates(SuperFamily::SQ, 3, co), odd_generates(SuperFamily::SQ, 4, co)};
  rep.reported = {odd_generates(SuperFamily::SQ, 2, co)};
  rep.bracket_closed = true;
  for (int m = 1; m <= 3; ++m) {
    const MatrixSpace sp(m, m);
    for (const auto& basis : {sl_basis(m, m), sq_basis(m)}) {
      EchelonBasis e(sp.dim());
      for (const auto& x : basis) e.insert(sp.flatten(x));
      if (e.rank() != basis.size() || !is_bracket_closed(sp, e)) rep.bracket_closed = false;
    }
  }
  return rep;
}

std::string fingerprint(int threads) {
  std::string f;
#if defined(__clang__)
  f += "clang " __clang_version__;
#elif defined(__GNUC__)
  f += "gcc " __VERSION__;
#else
  f += "unknown compiler";
#endif
  f += "; gmp ";
  f += gmp_version;
  f += "; eigen " + std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
       std::to_string(EIGEN_MINOR_VERSION);
#ifdef _OPENMP
  f += "; openmp " + std::to_string(_OPENMP);
#endif
#ifdef NDEBUG
  f += "; release";
#else
  f += "; debug";
#endif
  f += "; threads " + std::to_string(threads);
  return f;
}

}  // namespace sw
