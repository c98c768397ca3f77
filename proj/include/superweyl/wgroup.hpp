#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace sw {

enum class Kind : uint8_t { A = 0, B = 1, D = 2 };

struct GroupSpec {
  Kind kind = Kind::B;
  int n = 2;
  bool operator==(const GroupSpec&) const = default;
};

constexpr int kMaxRank = 16;
constexpr uint64_t kDefaultOrderCap = 100000;

char kind_char(Kind k);
Kind parse_kind(const std::string& s);
std::string spec_name(const GroupSpec& s);  // e.g. "B4"

// Throws std::invalid_argument for n out of range (A,B: n >= 2; D: n >= 4).
void validate(const GroupSpec& s);
uint64_t group_order(const GroupSpec& s);

// Element t_1^{i_1} ... t_n^{i_n} sigma of the hyperoctahedral group; acts on
// signed letters by j -> (-1)^{i_{sigma(j)}} sigma(j).
class SignedPerm {
 public:
  SignedPerm() = default;
  static SignedPerm identity(int n);
  static SignedPerm transposition(int n, int i, int j);  // 1-based
  static SignedPerm t(int n, int i);                     // sign flip at i
  static SignedPerm s(int n, int i);                     // (i, i+1)
  static SignedPerm s_tilde(int n);                      // t_n s_{n-1} t_n
  // images are 1-based; bit (j-1) of signs is the exponent of t_j.
  static SignedPerm from_images(const std::vector<int>& images, uint32_t signs = 0);

  int n() const { return n_; }
  int image(int j) const { return img_[j - 1] + 1; }  // sigma(j), 1-based
  int image0(int j) const { return img_[j]; }         // 0-based
  bool sign_bit(int j) const { return (signs_ >> (j - 1)) & 1u; }
  uint32_t signs() const { return signs_; }
  int sign_weight() const;
  int perm_parity() const;  // 0 even, 1 odd
  bool is_identity() const;
  std::vector<int> cycle_type() const;  // permutation part, descending, fixed points included

  bool operator==(const SignedPerm& o) const;
  bool operator<(const SignedPerm& o) const;
  std::string to_string() const;

  friend SignedPerm compose(const SignedPerm& a, const SignedPerm& b);
  friend SignedPerm inverse(const SignedPerm& a);

 private:
  std::array<uint8_t, kMaxRank> img_{};
  uint32_t signs_ = 0;
  uint8_t n_ = 0;
};

SignedPerm compose(const SignedPerm& a, const SignedPerm& b);  // a after b
SignedPerm inverse(const SignedPerm& a);
SignedPerm compose_all(std::initializer_list<SignedPerm> xs);

// Embed a rank-(n-1) element into rank n (fixing n).
SignedPerm extend_rank(const SignedPerm& a, int n);

enum class Character { Eps, EpsPrime, EpsDoublePrime };

int char_value(const SignedPerm& a, Character which);  // +1 / -1
Character grading_character(Kind k);                    // eps for B, eps'' for A and D
int superdegree(const SignedPerm& a, Kind k);           // 0 even, 1 odd
bool belongs_to(const SignedPerm& a, Kind k);

uint64_t perm_rank(const SignedPerm& a);  // Lehmer-code rank of sigma
uint64_t index_of(const SignedPerm& a, Kind k);
SignedPerm element_at(const GroupSpec& s, uint64_t ordinal);

// Indexed element table with optional full multiplication table.
class Group {
 public:
  explicit Group(GroupSpec spec, uint64_t cap = kDefaultOrderCap);

  const GroupSpec& spec() const { return spec_; }
  uint32_t order() const { return static_cast<uint32_t>(elems_.size()); }
  const SignedPerm& element(uint32_t i) const { return elems_[i]; }
  const std::vector<SignedPerm>& elements() const { return elems_; }
  uint32_t index(const SignedPerm& g) const { return static_cast<uint32_t>(index_of(g, spec_.kind)); }
  int parity(uint32_t i) const { return parity_[i]; }
  uint32_t inv(uint32_t i) const { return inv_[i]; }
  uint32_t identity_index() const { return id_; }
  uint32_t mul(uint32_t i, uint32_t j) const {
    if (!table_.empty()) return table_[static_cast<uint64_t>(i) * elems_.size() + j];
    return index(compose(elems_[i], elems_[j]));
  }

  bool has_table() const { return !table_.empty(); }
  void build_table();
  void save_table(const std::string& path) const;
  bool load_table(const std::string& path);
  // Loads from the cache directory if present, otherwise builds (and stores when
  // the directory is writable). Returns true iff the table came from disk.
  bool load_or_build_table(const std::string& cache_dir);

  std::vector<SignedPerm> coxeter_generators() const;
  std::vector<SignedPerm> even_generators() const;

 private:
  GroupSpec spec_;
  std::vector<SignedPerm> elems_;
  std::vector<uint8_t> parity_;
  std::vector<uint32_t> inv_;
  std::vector<uint32_t> table_;
  uint32_t id_ = 0;
};

// Cache directory: $SUPERWEYL_CACHE_DIR if set, else "" (no caching).
std::string default_cache_dir();
std::string table_cache_file(const std::string& dir, const GroupSpec& s);

struct Reflections {
  std::vector<SignedPerm> long_refl;
  std::vector<SignedPerm> short_refl;
};
Reflections reflections(const GroupSpec& s);

enum class Ambient { Full, Even };

// Orbit of rep under conjugation, breadth-first over generators; sorted by ordinal.
std::vector<SignedPerm> conjugacy_class(const Group& g, const SignedPerm& rep, Ambient amb);
std::vector<std::vector<uint32_t>> conjugacy_classes(const Group& g, Ambient amb);

// Size of the subgroup of the group of the given spec generated by gens.
uint64_t subgroup_generated(const std::vector<SignedPerm>& gens, const GroupSpec& s);

// The conjugacy class S' of the even subgroup; its elements generate G_0 for n >= 5.
std::vector<SignedPerm> even_generating_class(const Group& g);

struct CoxeterCheck {
  bool ok = true;
  std::vector<std::string> failures;
};
// Evaluates the defining relations on the group elements themselves.
CoxeterCheck coxeter_relations(const GroupSpec& s);

}  // namespace sw
