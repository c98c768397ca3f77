#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracle.hpp"
#include "superweyl/combin.hpp"

using namespace sw;

namespace {

const IrrFamily& family_of(const std::vector<IrrFamily>& fams, const Bipartition& b) {
  for (const auto& f : fams)
    if (f.label == b || f.label == twist(b) || f.label == swap_parts(b) || f.label == conj_parts(b)) return f;
  throw std::logic_error("no family for " + to_string(b));
}

uint64_t mass(const GroupSpec& s) {
  uint64_t m = 0;
  for (const auto& f : classify(s)) m += f.type == SuperType::Q ? f.super_dim * f.super_dim / 2 : f.super_dim * f.super_dim;
  return m;
}

}  // namespace

TEST_CASE("partitions") {
  const uint64_t p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 1; n <= 8; ++n) {
    const auto ps = partitions(n);
    CHECK(ps.size() == p[n]);
    CHECK(ps.front() == Partition{n});
    for (const auto& l : ps) {
      CHECK(is_partition(l));
      CHECK(size(l) == n);
      CHECK(conjugate(conjugate(l)) == l);
    }
  }
  CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
  CHECK(diagonal_length({3, 2, 2}) == 2);
  CHECK(to_string(Partition{}) == "[]");
  CHECK(to_string(Partition{3, 1}) == "[3,1]");
}

TEST_CASE("hook_dim") {
  CHECK(hook_dim({3, 1, 1}) == 6);
  CHECK(hook_dim({2, 2}) == 2);
  for (int n = 1; n <= 8; ++n) {
    CHECK(hook_dim({n}) == 1);
    for (const auto& l : partitions(n)) REQUIRE(hook_dim(l) == oracle::count_syt(l));
  }
}

TEST_CASE("bipartition_dim") {
  CHECK(bipartition_dim({{2, 2}, {1}}) == 10);
  CHECK(bipartition_dim({{1}, {1}}) == 2);
  for (int n = 1; n <= 7; ++n) {
    CHECK(bipartition_dim({{n}, {}}) == 1);
    uint64_t sq = 0;
    for (const auto& b : bipartitions(n)) {
      REQUIRE(bipartition_dim(b) == oracle::bip_dim(b));
      sq += bipartition_dim(b) * bipartition_dim(b);
    }
    CHECK(sq == (uint64_t{1} << n) * oracle::factorial(n));
  }
}

TEST_CASE("involutions on bipartitions") {
  const Bipartition b{{3, 1}, {2}};
  CHECK(swap_parts(b) == Bipartition{{2}, {3, 1}});
  CHECK(conj_parts(b) == Bipartition{{2, 1, 1}, {1, 1}});
  CHECK(twist(b) == Bipartition{{1, 1}, {2, 1, 1}});
  CHECK(twist(twist(b)) == b);
  CHECK(residue_sum(b) == (0 + 1 + 2 - 1) + (0 + 1));
}

TEST_CASE("classify examples") {
  const auto b2 = classify({Kind::B, 2});
  CHECK(std::count_if(b2.begin(), b2.end(), [](const IrrFamily& f) { return f.type == SuperType::Q; }) == 2);
  CHECK(std::count_if(b2.begin(), b2.end(), [](const IrrFamily& f) { return f.type == SuperType::M; }) == 1);
  const auto a4 = classify({Kind::A, 4});
  CHECK(std::count_if(a4.begin(), a4.end(), [](const IrrFamily& f) { return f.type == SuperType::M; }) == 1);
  CHECK(std::find_if(a4.begin(), a4.end(), [](const IrrFamily& f) {
          return f.type == SuperType::M && f.label.first == Partition{2, 2};
        }) != a4.end());
  for (int n : {3, 5, 7}) {
    const auto fs = classify({Kind::B, n});
    CHECK(std::none_of(fs.begin(), fs.end(), [](const IrrFamily& f) { return f.family == FamilyKind::B_F; }));
  }
  for (int n : {2, 4, 6}) {
    const auto fs = classify({Kind::B, n});
    CHECK(static_cast<size_t>(std::count_if(fs.begin(), fs.end(), [](const IrrFamily& f) {
            return f.family == FamilyKind::B_F;
          })) == partitions(n / 2).size());
  }
  // M-type in kind A exists for odd n too
  const auto a3 = classify({Kind::A, 3});
  CHECK(std::count_if(a3.begin(), a3.end(), [](const IrrFamily& f) { return f.type == SuperType::M; }) == 1);
}

TEST_CASE("classify is duplicate free with even super dimensions where required") {
  for (int n = 2; n <= 7; ++n)
    for (Kind k : {Kind::A, Kind::B, Kind::D}) {
      if (k == Kind::D && n < 4) continue;
      const GroupSpec s{k, n};
      CAPTURE(spec_name(s));
      auto fs = classify(s);
      for (size_t i = 0; i < fs.size(); ++i)
        for (size_t j = i + 1; j < fs.size(); ++j) REQUIRE_FALSE(fs[i] == fs[j]);
      for (const auto& f : fs) {
        CHECK(f.super_dim % 2 == 0);
        if (f.type == SuperType::Q) {
          const bool e_type = f.family == FamilyKind::A_E || f.family == FamilyKind::B_E ||
                              f.family == FamilyKind::D_E_distinct || f.family == FamilyKind::D_E_equal ||
                              f.family == FamilyKind::D_F_equal_Q;
          CHECK(e_type);
        }
      }
    }
}

TEST_CASE("super Artin-Wedderburn mass, n <= 7") {
  for (int n = 2; n <= 7; ++n) {
    CHECK(mass({Kind::A, n}) == oracle::factorial(n));
    CHECK(mass({Kind::B, n}) == (uint64_t{1} << n) * oracle::factorial(n));
    if (n >= 4) CHECK(mass({Kind::D, n}) == (uint64_t{1} << (n - 1)) * oracle::factorial(n));
  }
}

TEST_CASE("predicted derived dimension") {
  CHECK(predicted_derived_dim({Kind::A, 2}).by_count == 1);
  const auto b2 = predicted_derived_dim({Kind::B, 2});
  CHECK(b2.by_count == 5);
  CHECK(b2.by_blocks == 5);
  const auto d4 = predicted_derived_dim({Kind::D, 4});
  CHECK(d4.by_count == 192 - d4.q_families - d4.m_families);
  CHECK(d4.by_count == 184);
  CHECK(d4.by_blocks == d4.by_count);
  for (int n = 2; n <= 7; ++n)
    for (Kind k : {Kind::A, Kind::B, Kind::D}) {
      if (k == Kind::D && n < 4) continue;
      const auto p = predicted_derived_dim({k, n});
      CHECK(p.by_count == p.by_blocks);
      CHECK(p.mass == group_order({k, n}));
    }
}

TEST_CASE("branch") {
  const auto br = branch({{2}, {1}});
  REQUIRE(br.size() == 2);
  CHECK(br[0] == Bipartition{{1}, {1}});
  CHECK(br[1] == Bipartition{{2}, {}});
  for (int n = 1; n <= 6; ++n)
    for (const auto& b : bipartitions(n)) {
      uint64_t d = 0;
      std::set<std::string> kids, conj_kids;
      for (const auto& c : branch(b)) {
        REQUIRE(c.n() == n - 1);
        d += bipartition_dim(c);
        kids.insert(to_string(conj_parts(c)));
      }
      for (const auto& c : branch(conj_parts(b))) conj_kids.insert(to_string(c));
      CHECK(d == bipartition_dim(b));
      CHECK(kids == conj_kids);
    }
}

TEST_CASE("removable boxes and residues") {
  const auto boxes = removable_boxes({3, 1});
  REQUIRE(boxes.size() == 2);
  CHECK(boxes[0].row == 0);
  CHECK(boxes[0].col == 2);
  CHECK(boxes[0].residue() == 2);
  CHECK(boxes[1].residue() == -1);
  CHECK(remove_box({3, 1}, boxes[1]) == Partition{3});
}

TEST_CASE("cycle_type_scalar") {
  CHECK(cycle_type_scalar({1, 1, 1}) == UnitScalar{0});
  CHECK(cycle_type_scalar({2, 1, 1}).to_string() == "i");
  for (int half = 1; half <= 4; ++half) {
    const std::vector<int> c(half, 2);
    CHECK(cycle_type_scalar(c) == UnitScalar{half % 4});
  }
  CHECK(cycle_type_scalar({3}).to_string() == "-1");
  CHECK(cycle_type_scalar({4}).to_string() == "-i");
}

TEST_CASE("B super-restriction onto an F-type child gives W + Pi(W)") {
  const auto fams = classify({Kind::B, 3});
  const IrrFamily& f = family_of(fams, {{2}, {1}});
  const auto terms = super_restrict(f);
  int plain = 0, shifted = 0;
  for (const auto& t : terms)
    if (t.child.label == Bipartition{{1}, {1}}) (t.shifted ? shifted : plain)++;
  CHECK(plain == 1);
  CHECK(shifted == 1);
}

TEST_CASE("D restriction with n/2 odd has a repeated factor") {
  const auto fams = classify({Kind::D, 6});
  const IrrFamily& f = family_of(fams, {{2, 1}, {2, 1}});
  CHECK(f.family == FamilyKind::D_F_equal_Q);
  const auto terms = super_restrict(f);
  int best = 0;
  for (size_t i = 0; i < terms.size();) {
    size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    best = std::max(best, static_cast<int>(j - i));
    i = j;
  }
  CHECK(best == 2);
}

TEST_CASE("family table CSV") {
  const std::string csv = family_table_csv({Kind::B, 2});
  CHECK(csv.rfind("family,kind,supertype,super_dim,block\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}
