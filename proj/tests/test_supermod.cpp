#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "superweyl/supermod.hpp"

using namespace sw;

namespace {

std::vector<GroupSpec> specs_up_to(int nmax) {
  std::vector<GroupSpec> v;
  for (int n = 2; n <= nmax; ++n) {
    v.push_back({Kind::A, n});
    v.push_back({Kind::B, n});
    if (n >= 4) v.push_back({Kind::D, n});
  }
  return v;
}

}  // namespace

TEST_CASE("every family assembles with the right block structure, n <= 5") {
  for (const auto& s : specs_up_to(5))
    for (const auto& f : classify(s)) {
      CAPTURE(f.name());
      const SuperModuleSpec m = assemble_supermodule(f);
      CHECK(static_cast<uint64_t>(m.dim()) == f.super_dim);
      CHECK(m.type == f.type);
      if (f.type == SuperType::Q) CHECK(m.dim0 == m.dim1);
      const SuperModuleCheck c = check_supermodule(m);
      CHECK(c.ok);
      CHECK(c.block_error <= kTol);
      CHECK(c.unitary_error <= kTol);
      CHECK(c.j_error <= kTol);
    }
}

TEST_CASE("Q-type image commutes with J") {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> coeff;
  for (const auto& s : specs_up_to(4)) {
    const Group g(s);
    std::uniform_int_distribution<uint32_t> pick(0, g.order() - 1);
    for (const auto& f : classify(s)) {
      if (f.type != SuperType::Q) continue;
      CAPTURE(f.name());
      const SuperModuleSpec m = assemble_supermodule(f);
      REQUIRE(m.J.rows() == m.dim());
      for (int k = 0; k < 20; ++k) {
        CMat x = CMat::Zero(m.dim(), m.dim());
        for (int term = 0; term < 4; ++term) x += coeff(rng) * m.matrix_of(g.element(pick(rng)));
        REQUIRE((m.J * x - x * m.J).cwiseAbs().maxCoeff() < 1e-9);
      }
      // J is odd: it exchanges the two parity blocks
      CHECK(m.J.topLeftCorner(m.dim0, m.dim0).cwiseAbs().maxCoeff() < 1e-12);
      CHECK(m.J.bottomRightCorner(m.dim1, m.dim1).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("B examples") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& f : classify({Kind::B, n})) {
      if (f.label == Bipartition{{n}, {}}) {
        CHECK(f.type == SuperType::Q);
        CHECK(assemble_supermodule(f).dim() == 2);
      }
      if (f.family == FamilyKind::B_F) {
        const auto m = assemble_supermodule(f);
        CHECK(m.type == SuperType::M);
        CHECK(m.dim0 == m.dim1);
      }
    }
  }
}

TEST_CASE("generators and parity shift") {
  const auto gens = coxeter_word_generators({Kind::D, 4});
  REQUIRE(gens.size() == 4);
  CHECK(gens.back() == SignedPerm::s_tilde(4));
  CHECK(coxeter_word_generators({Kind::B, 3}).back() == SignedPerm::t(3, 3));
  CHECK(coxeter_word_generators({Kind::A, 3}).size() == 2);
  const auto f = classify({Kind::B, 2}).front();
  const auto m = assemble_supermodule(f);
  const auto p = parity_shift(m);
  CHECK(p.dim0 == m.dim1);
  CHECK(p.dim1 == m.dim0);
  CHECK(check_supermodule(p).ok);
}

TEST_CASE("homogeneous isomorphism classes match the family labels, n <= 4") {
  for (const auto& s : specs_up_to(4)) {
    CAPTURE(spec_name(s));
    const auto fams = classify(s);
    std::vector<SuperModuleSpec> mods;
    for (const auto& f : fams) mods.push_back(assemble_supermodule(f));
    for (size_t i = 0; i < mods.size(); ++i)
      for (size_t j = 0; j < mods.size(); ++j) {
        CAPTURE(fams[i].name());
        CAPTURE(fams[j].name());
        CHECK(homogeneously_isomorphic(mods[i], mods[j]) == (i == j));
      }
    // even endomorphisms of a simple supermodule are scalars (J is odd)
    for (size_t i = 0; i < mods.size(); ++i) CHECK(even_hom_dim(mods[i], mods[i]) == 1);
  }
}
