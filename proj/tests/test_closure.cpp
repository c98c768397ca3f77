#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <omp.h>

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "superweyl/closure.hpp"
#include "superweyl/verify.hpp"

using namespace sw;

namespace {

std::vector<SparseVec> reflection_units(const Group& g, uint64_t seed = 0) {
  std::vector<SparseVec> v;
  for (const auto& x : reflection_generators(g.spec(), seed)) v.push_back(sv_unit(g.index(x)));
  return v;
}

std::vector<SignedPerm> all_reflections(const GroupSpec& s) { return reflection_generators(s, 0); }

}  // namespace

TEST_CASE("insert examples") {
  EchelonBasis b(8);
  CHECK_FALSE(b.insert({}));
  CHECK(b.insert(sv_unit(3)));
  CHECK_FALSE(b.insert(sv_unit(3, 2)));
  CHECK(b.rank() == 1);
  CHECK(b.insert(sv_add(sv_unit(3), sv_unit(5, Rational(1, 3)))));
  // reduced echelon: pivots normalized, no entries in other pivot columns
  for (const auto& r : b.rows()) {
    CHECK(r.front().c == 1);
    for (const auto& t : r)
      if (t.idx != r.front().idx) CHECK_FALSE(b.is_pivot(t.idx));
  }
  CHECK(b.dump() == "1/1 3\n1/1 5\ndim=2\n");
  EchelonBasis c(8);
  c.insert(sv_add(sv_unit(1, 2), sv_unit(4, -1)));
  CHECK(c.dump() == "1/1 1 -1/2 4\ndim=1\n");
}

TEST_CASE("random insertions match dense elimination") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> coeff(-2, 2), len(1, 6);
  const uint32_t dim = 48;  // |B_3|
  std::uniform_int_distribution<uint32_t> col(0, dim - 1);
  for (int trial = 0; trial < 5; ++trial) {
    EchelonBasis b(dim);
    std::vector<std::vector<oracle::Q>> rows;
    for (int k = 0; k < 100; ++k) {
      SparseVec v;
      std::vector<oracle::Q> dense(dim);
      // low-rank-ish: draw from a few columns so dependencies occur
      const int terms = len(rng);
      for (int t = 0; t < terms; ++t) {
        const uint32_t c = col(rng) % (10 + 8 * trial);
        const int x = coeff(rng);
        v.push_back({c, x});
        dense[c] += x;
      }
      sv_canonicalize(v);
      const size_t before = b.rank();
      const bool ins = b.insert(v);
      rows.push_back(dense);
      const size_t r = oracle::dense_rank(rows);
      REQUIRE(b.rank() == r);
      REQUIRE(ins == (r > before));
    }
  }
}

TEST_CASE("lie_closure examples") {
  const Group s2({Kind::A, 2});
  const GroupAlgebra a2(s2);
  CHECK(lie_closure(a2, {sv_unit(s2.identity_index())}).basis.rank() == 1);
  CHECK(lie_closure(a2, {sv_unit(s2.index(SignedPerm::transposition(2, 1, 2)))}).basis.rank() == 2);
  CHECK(lie_closure(a2, {}).basis.rank() == 0);

  const Group s3({Kind::A, 3});
  const GroupAlgebra a3(s3);
  const auto g = lie_closure(a3, reflection_units(s3));
  const auto d = derived_span_full(a3);
  CHECK(g.basis.rank() == rank_of_union(d.basis, {transposition_total(s3).terms}));
  CHECK(g.basis.rank() == 5);
}

TEST_CASE("derived_span examples") {
  const Group s2({Kind::A, 2});
  CHECK(derived_span_full(GroupAlgebra(s2)).basis.rank() == 1);
  const Group b2({Kind::B, 2});
  const GroupAlgebra ab2(b2);
  CHECK(derived_span_full(ab2).basis.rank() == 5);
  EchelonBasis one(b2.order());
  one.insert(sv_unit(b2.identity_index()));
  CHECK(derived_span(ab2, one).basis.rank() == 0);
}

TEST_CASE("rank_of_union and contains") {
  const Group b3({Kind::B, 3});
  const GroupAlgebra ga(b3);
  const auto g = lie_closure(ga, reflection_units(b3));
  CHECK(rank_of_union(g.basis, g.basis.rows()) == g.basis.rank());
  const Group s2({Kind::A, 2});
  const auto d2 = derived_span_full(GroupAlgebra(s2));
  CHECK(rank_of_union(d2.basis, {transposition_total(s2).terms}) == 2);
  CHECK_FALSE(contains(d2.basis, transposition_total(s2).terms));
  for (int n = 2; n <= 4; ++n) {
    const Group b({Kind::B, n});
    const GroupAlgebra gb(b);
    const auto cl = lie_closure(gb, reflection_units(b));
    CHECK(contains(cl.basis, yjm_total(b).terms));
    CHECK(contains(cl.basis, t_total(b).terms));
  }
}

TEST_CASE("closure and derived dimensions agree with the dense oracle") {
  struct Case {
    GroupSpec s;
    size_t dim_g, dim_d;  // frozen oracle values
  };
  for (const Case c : {Case{{Kind::A, 2}, 2, 1}, Case{{Kind::A, 3}, 5, 4}, Case{{Kind::A, 4}, 22, 21},
                       Case{{Kind::B, 2}, 7, 5}, Case{{Kind::B, 3}, 45, 43}}) {
    CAPTURE(spec_name(c.s));
    CHECK(oracle::closure_dim(c.s, all_reflections(c.s)) == c.dim_g);
    CHECK(oracle::derived_dim(c.s) == c.dim_d);
    const Group g(c.s);
    const GroupAlgebra ga(g);
    CHECK(lie_closure(ga, reflection_units(g)).basis.rank() == c.dim_g);
    CHECK(derived_span_full(ga).basis.rank() == c.dim_d);
  }
}

TEST_CASE("closure is bracket closed, homogeneous and order independent") {
  for (const GroupSpec s : {GroupSpec{Kind::A, 4}, GroupSpec{Kind::B, 3}, GroupSpec{Kind::D, 4}}) {
    CAPTURE(spec_name(s));
    Group g(s);
    g.build_table();
    const GroupAlgebra ga(g);
    const auto base = lie_closure(ga, reflection_units(g));
    CHECK(is_bracket_closed(ga, base.basis));
    const ParityDims pd = parity_dims(ga, base.basis);
    CHECK(pd.mixed == 0);
    CHECK(pd.even + pd.odd == base.basis.rank());
    for (uint64_t seed : {1u, 2u, 3u}) {
      const auto other = lie_closure(ga, reflection_units(g, seed));
      CHECK(other.basis.rank() == base.basis.rank());
      // reduced echelon form is unique for a subspace
      CHECK(other.basis.dump() == base.basis.dump());
    }
  }
}

TEST_CASE("serial and parallel kernels give identical bases for every thread count") {
  Group g({Kind::B, 4});
  g.build_table();
  const GroupAlgebra ga(g);
  ClosureOptions serial;
  serial.parallel = false;
  const std::string ref = lie_closure(ga, reflection_units(g), serial).basis.dump();
  const std::string dref = derived_span_full(ga, serial).basis.dump();
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    ClosureOptions par;
    par.parallel = true;
    CHECK(lie_closure(ga, reflection_units(g), par).basis.dump() == ref);
    CHECK(derived_span_full(ga, par).basis.dump() == dref);
  }
}

TEST_CASE("budget exhaustion yields an incomplete result") {
  Group g({Kind::B, 4});
  g.build_table();
  const GroupAlgebra ga(g);
  ClosureOptions opt;
  opt.budget_seconds = 1e-9;
  const auto r = lie_closure(ga, reflection_units(g), opt);
  CHECK_FALSE(r.complete);
  CHECK(r.basis.rank() < 375);
}
