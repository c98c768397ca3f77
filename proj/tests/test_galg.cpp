#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "superweyl/galg.hpp"

using namespace sw;

namespace {

AlgebraElement e(const Group& g, const SignedPerm& x, const Rational& c = 1) { return basis_element(g, x, c); }

bool same(const AlgebraElement& a, const AlgebraElement& b) { return sv_equal(a.terms, b.terms); }

// Random homogeneous element with a few small integer coefficients.
AlgebraElement random_homogeneous(const Group& g, int parity, std::mt19937_64& rng, int terms = 3) {
  std::uniform_int_distribution<uint32_t> pick(0, g.order() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  AlgebraElement x{g.spec(), {}};
  while (static_cast<int>(x.terms.size()) < terms) {
    const uint32_t i = pick(rng);
    if (g.parity(i) != parity) continue;
    const int c = coeff(rng);
    if (c != 0) x = add(x, e(g, g.element(i), c));
  }
  return x;
}

}  // namespace

TEST_CASE("multiply examples") {
  const Group g({Kind::B, 3});
  const auto one = identity_element(g);
  const auto t1 = e(g, SignedPerm::t(3, 1)), t2 = e(g, SignedPerm::t(3, 2));
  std::mt19937_64 rng(1);
  const auto x = random_homogeneous(g, 0, rng);
  CHECK(same(multiply(g, one, x), x));
  CHECK(same(multiply(g, t1, t1), one));
  const auto s = add(t1, t2);
  const auto t1t2 = e(g, compose(SignedPerm::t(3, 1), SignedPerm::t(3, 2)));
  CHECK(same(multiply(g, s, s), add(scale(one, 2), scale(t1t2, 2))));
  CHECK(grading(g, t1t2) == Grading::Even);
  CHECK(grading(g, t1) == Grading::Odd);
  CHECK(grading(g, s) == Grading::Odd);
  CHECK(grading(g, add(one, t1)) == Grading::Mixed);
  CHECK(grading(g, AlgebraElement{g.spec(), {}}) == Grading::Zero);
  const Group other({Kind::B, 2});
  CHECK_THROWS(multiply(g, identity_element(other), one));
}

TEST_CASE("superbracket examples") {
  const int n = 5;
  const Group b({Kind::B, n});
  const auto t1 = e(b, SignedPerm::t(n, 1));
  CHECK(same(superbracket(b, t1, t1), scale(identity_element(b), 2)));
  for (int i : {1, 3, 5}) {
    const int j = i == 1 ? 2 : 1, k = i == 5 ? 3 : 4;
    const auto ti = e(b, SignedPerm::t(n, i)), jk = e(b, SignedPerm::transposition(n, j, k));
    CHECK(same(superbracket(b, ti, jk), e(b, compose(SignedPerm::t(n, i), SignedPerm::transposition(n, j, k)), 2)));
  }
  const Group d({Kind::D, n});
  const auto a12 = SignedPerm::transposition(n, 1, 2), a34 = SignedPerm::transposition(n, 3, 4);
  CHECK(same(superbracket(d, e(d, a12), e(d, a34)), e(d, compose(a12, a34), 2)));
  // t_1 t_2 t_3 t_4 (1,2)(3,4) = 1/2 [t_1 t_2 (1,2), t_3 t_4 (3,4)]
  const auto x = compose_all({SignedPerm::t(n, 1), SignedPerm::t(n, 2), a12});
  const auto y = compose_all({SignedPerm::t(n, 3), SignedPerm::t(n, 4), a34});
  CHECK(same(scale(superbracket(d, e(d, x), e(d, y)), Rational(1, 2)), e(d, compose(x, y))));
}

TEST_CASE("superbracket agrees with the oracle") {
  const Group g({Kind::B, 3});
  for (const auto& x : g.elements())
    for (const auto& y : g.elements()) {
      const auto got = superbracket(g, e(g, x), e(g, y));
      const auto want =
          oracle::bracket(oracle::unit(x), oracle::degree(x, Kind::B), oracle::unit(y), oracle::degree(y, Kind::B));
      oracle::Vec v;
      for (const auto& t : got.terms) v[g.element(t.idx)] = t.c;
      REQUIRE(v == want);
    }
}

TEST_CASE("super-Jacobi and super-skew-symmetry") {
  const Group g({Kind::B, 3});
  std::mt19937_64 rng(5);
  std::bernoulli_distribution coin;
  for (int k = 0; k < 1000; ++k) {
    const int px = coin(rng), py = coin(rng), pz = coin(rng);
    const auto x = random_homogeneous(g, px, rng), y = random_homogeneous(g, py, rng),
               z = random_homogeneous(g, pz, rng);
    const Rational sxy = px && py ? -1 : 1;
    const auto lhs = superbracket(g, x, superbracket(g, y, z));
    const auto rhs = add(superbracket(g, superbracket(g, x, y), z), scale(superbracket(g, y, superbracket(g, x, z)), sxy));
    REQUIRE(same(lhs, rhs));
    REQUIRE(same(superbracket(g, x, y), scale(superbracket(g, y, x), -sxy)));
  }
}

TEST_CASE("class sums") {
  const Group b2({Kind::B, 2});
  const auto x2 = add(e(b2, SignedPerm::transposition(2, 1, 2)),
                      e(b2, compose_all({SignedPerm::t(2, 1), SignedPerm::t(2, 2), SignedPerm::transposition(2, 1, 2)})));
  CHECK(same(yjm_total(b2), x2));
  CHECK(same(yjm(b2, 1), AlgebraElement{b2.spec(), {}}));
  CHECK(same(yjm(b2, 2), x2));
  CHECK(same(t_total(b2), add(e(b2, SignedPerm::t(2, 1)), e(b2, SignedPerm::t(2, 2)))));
  const Group a3({Kind::A, 3});
  CHECK(same(transposition_total(a3),
             add(add(e(a3, SignedPerm::transposition(3, 1, 2)), e(a3, SignedPerm::transposition(3, 1, 3))),
                 e(a3, SignedPerm::transposition(3, 2, 3)))));
}

TEST_CASE("YJM and t totals equal the reflection class sums, n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    const Group b({Kind::B, n});
    const auto rb = reflections(b.spec());
    CHECK(same(yjm_total(b), class_sum(b, rb.long_refl)));
    CHECK(same(t_total(b), class_sum(b, rb.short_refl)));
    const Group a({Kind::A, n});
    CHECK(same(transposition_total(a), class_sum(a, reflections(a.spec()).long_refl)));
    if (n >= 4) {
      const Group d({Kind::D, n});
      CHECK(same(yjm_total(d), class_sum(d, reflections(d.spec()).long_refl)));
    }
  }
}

TEST_CASE("class sums are central") {
  for (const GroupSpec s : {GroupSpec{Kind::A, 5}, GroupSpec{Kind::B, 4}, GroupSpec{Kind::D, 4}, GroupSpec{Kind::B, 5}}) {
    CAPTURE(spec_name(s));
    Group g(s);
    g.build_table();
    for (const auto& cls : conjugacy_classes(g, Ambient::Full)) {
      std::vector<SignedPerm> members;
      for (uint32_t i : cls) members.push_back(g.element(i));
      const auto c = class_sum(g, members);
      for (const auto& x : g.elements()) {
        const auto ex = e(g, x);
        REQUIRE(same(multiply(g, ex, c), multiply(g, c, ex)));
      }
    }
  }
}

TEST_CASE("center projection") {
  const int n = 4;
  const Group g({Kind::B, n});
  CHECK(same(center_project(g, AlgebraElement{g.spec(), {}}), AlgebraElement{g.spec(), {}}));
  CHECK(same(center_project(g, e(g, SignedPerm::t(n, 1))), scale(t_total(g), Rational(1, n))));
  for (const auto& cls : conjugacy_classes(g, Ambient::Even)) {
    std::vector<SignedPerm> members;
    for (uint32_t i : cls) members.push_back(g.element(i));
    const auto c = class_sum(g, members);
    CHECK(same(center_project(g, c), c));
  }
  std::mt19937_64 rng(3);
  const auto x = add(random_homogeneous(g, 0, rng), random_homogeneous(g, 1, rng));
  const auto p = center_project(g, x);
  CHECK(same(center_project(g, p), p));
  for (const auto& h : g.elements())
    if (superdegree(h, Kind::B) == 0) REQUIRE(same(multiply(g, e(g, h), p), multiply(g, p, e(g, h))));
}

TEST_CASE("conjugation and the bracket identity x - 1/2 [s,[s,x]] = s x s") {
  const int n = 4;
  const Group g({Kind::B, n});
  std::mt19937_64 rng(9);
  const auto x0 = random_homogeneous(g, 0, rng);
  CHECK(same(conj_by(g, SignedPerm::identity(n), x0), x0));
  CHECK(same(conj_by(g, SignedPerm::transposition(n, 1, 2), e(g, SignedPerm::t(n, 1))), e(g, SignedPerm::t(n, 2))));
  std::vector<SignedPerm> involutions;
  for (const auto& s : g.elements())
    if (superdegree(s, Kind::B) == 0 && !s.is_identity() && compose(s, s).is_identity()) involutions.push_back(s);
  std::uniform_int_distribution<size_t> pick(0, involutions.size() - 1);
  for (int k = 0; k < 100; ++k) {
    const SignedPerm s = involutions[pick(rng)];
    const auto x = random_homogeneous(g, 0, rng, 4);
    const auto es = e(g, s);
    const auto lhs = add(x, scale(superbracket(g, es, superbracket(g, es, x)), Rational(-1, 2)));
    REQUIRE(same(lhs, conj_by(g, s, x)));
  }
}

TEST_CASE("serialization") {
  const Group g({Kind::B, 2});
  const auto x = add(e(g, SignedPerm::t(2, 2), Rational(-3, 4)), e(g, SignedPerm::identity(2), 2));
  const std::string text = serialize(x);
  CHECK(text == "2/1 0\n-3/4 " + std::to_string(g.index(SignedPerm::t(2, 2))) + "\n");
  CHECK(same(parse_element(g.spec(), text), x));
}
