#include "superweyl/wgroup.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <cstring>
#include <deque>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sw {

namespace {

uint64_t factorial(int n) {
  uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<uint64_t>(i);
  return f;
}

int sign_bits(const GroupSpec& s) {
  switch (s.kind) {
    case Kind::A: return 0;
    case Kind::B: return s.n;
    case Kind::D: return s.n - 1;
  }
  return 0;
}

void require_same_rank(const SignedPerm& a, const SignedPerm& b) {
  if (a.n() != b.n()) throw std::domain_error("signed permutations of different rank");
}

}  // namespace

char kind_char(Kind k) {
  switch (k) {
    case Kind::A: return 'A';
    case Kind::B: return 'B';
    case Kind::D: return 'D';
  }
  return '?';
}

Kind parse_kind(const std::string& s) {
  if (s == "A" || s == "a") return Kind::A;
  if (s == "B" || s == "b") return Kind::B;
  if (s == "D" || s == "d") return Kind::D;
  throw std::invalid_argument("unknown Weyl type: " + s);
}

std::string spec_name(const GroupSpec& s) { return std::string(1, kind_char(s.kind)) + std::to_string(s.n); }

void validate(const GroupSpec& s) {
  const int lo = s.kind == Kind::D ? 4 : 2;
  if (s.n < lo || s.n > kMaxRank)
    throw std::invalid_argument("rank out of range for " + spec_name(s));
}

uint64_t group_order(const GroupSpec& s) {
  validate(s);
  return factorial(s.n) << sign_bits(s);
}

// ---------------------------------------------------------------- SignedPerm

SignedPerm SignedPerm::identity(int n) {
  if (n < 1 || n > kMaxRank) throw std::invalid_argument("rank out of range");
  SignedPerm p;
  p.n_ = static_cast<uint8_t>(n);
  for (int i = 0; i < n; ++i) p.img_[i] = static_cast<uint8_t>(i);
  return p;
}

SignedPerm SignedPerm::transposition(int n, int i, int j) {
  SignedPerm p = identity(n);
  if (i < 1 || j < 1 || i > n || j > n) throw std::invalid_argument("transposition index");
  std::swap(p.img_[i - 1], p.img_[j - 1]);
  return p;
}

SignedPerm SignedPerm::t(int n, int i) {
  SignedPerm p = identity(n);
  if (i < 1 || i > n) throw std::invalid_argument("sign index");
  p.signs_ = 1u << (i - 1);
  return p;
}

SignedPerm SignedPerm::s(int n, int i) { return transposition(n, i, i + 1); }

SignedPerm SignedPerm::s_tilde(int n) {
  return compose_all({t(n, n), s(n, n - 1), t(n, n)});
}

SignedPerm SignedPerm::from_images(const std::vector<int>& images, uint32_t signs) {
  const int n = static_cast<int>(images.size());
  SignedPerm p = identity(n);
  uint32_t seen = 0;
  for (int i = 0; i < n; ++i) {
    const int v = images[i] - 1;
    if (v < 0 || v >= n || (seen >> v & 1u)) throw std::invalid_argument("images not a bijection");
    seen |= 1u << v;
    p.img_[i] = static_cast<uint8_t>(v);
  }
  if (n < 32 && (signs >> n) != 0) throw std::invalid_argument("sign bits beyond rank");
  p.signs_ = signs;
  return p;
}

int SignedPerm::sign_weight() const { return std::popcount(signs_); }

int SignedPerm::perm_parity() const {
  int par = 0;
  uint32_t seen = 0;
  for (int i = 0; i < n_; ++i) {
    if (seen >> i & 1u) continue;
    int len = 0;
    for (int j = i; !(seen >> j & 1u); j = img_[j]) {
      seen |= 1u << j;
      ++len;
    }
    par ^= (len + 1) & 1;
  }
  return par;
}

bool SignedPerm::is_identity() const {
  if (signs_) return false;
  for (int i = 0; i < n_; ++i)
    if (img_[i] != i) return false;
  return true;
}

std::vector<int> SignedPerm::cycle_type() const {
  std::vector<int> out;
  uint32_t seen = 0;
  for (int i = 0; i < n_; ++i) {
    if (seen >> i & 1u) continue;
    int len = 0;
    for (int j = i; !(seen >> j & 1u); j = img_[j]) {
      seen |= 1u << j;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

bool SignedPerm::operator==(const SignedPerm& o) const {
  return n_ == o.n_ && signs_ == o.signs_ && std::memcmp(img_.data(), o.img_.data(), n_) == 0;
}

bool SignedPerm::operator<(const SignedPerm& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  const int c = std::memcmp(img_.data(), o.img_.data(), n_);
  if (c != 0) return c < 0;
  return signs_ < o.signs_;
}

std::string SignedPerm::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (int j = 1; j <= n_; ++j)
    if (sign_bit(j)) {
      os << "t" << j;
      any = true;
    }
  bool perm_id = true;
  for (int i = 0; i < n_; ++i) perm_id &= img_[i] == i;
  if (!perm_id) {
    os << "[";
    for (int i = 0; i < n_; ++i) os << (i ? " " : "") << img_[i] + 1;
    os << "]";
    any = true;
  }
  return any ? os.str() : std::string("e");
}

SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
  require_same_rank(a, b);
  SignedPerm c;
  c.n_ = a.n_;
  // c_k = a_k xor b_{sigma_a^{-1}(k)}: transport b's signs along sigma_a.
  uint32_t moved = 0;
  for (int j = 0; j < a.n_; ++j) {
    c.img_[j] = a.img_[b.img_[j]];
    moved |= ((b.signs_ >> j) & 1u) << a.img_[j];
  }
  c.signs_ = a.signs_ ^ moved;
  return c;
}

SignedPerm inverse(const SignedPerm& a) {
  // (t^a sigma)^{-1} = sigma^{-1} t^a = t^{a o sigma} sigma^{-1}
  SignedPerm c;
  c.n_ = a.n_;
  uint32_t sg = 0;
  for (int j = 0; j < a.n_; ++j) {
    c.img_[a.img_[j]] = static_cast<uint8_t>(j);
    sg |= ((a.signs_ >> a.img_[j]) & 1u) << j;
  }
  c.signs_ = sg;
  return c;
}

SignedPerm compose_all(std::initializer_list<SignedPerm> xs) {
  if (xs.size() == 0) throw std::invalid_argument("empty product");
  auto it = xs.begin();
  SignedPerm acc = *it++;
  for (; it != xs.end(); ++it) acc = compose(acc, *it);
  return acc;
}

SignedPerm extend_rank(const SignedPerm& a, int n) {
  if (n < a.n()) throw std::invalid_argument("extend_rank to smaller rank");
  std::vector<int> im(n);
  for (int j = 1; j <= n; ++j) im[j - 1] = j <= a.n() ? a.image(j) : j;
  return SignedPerm::from_images(im, a.signs());
}

int char_value(const SignedPerm& a, Character which) {
  const int ep = (a.sign_weight() & 1) ? -1 : 1;
  const int epp = a.perm_parity() ? -1 : 1;
  switch (which) {
    case Character::Eps: return ep * epp;
    case Character::EpsPrime: return ep;
    case Character::EpsDoublePrime: return epp;
  }
  return 1;
}

Character grading_character(Kind k) { return k == Kind::B ? Character::Eps : Character::EpsDoublePrime; }

int superdegree(const SignedPerm& a, Kind k) { return char_value(a, grading_character(k)) < 0 ? 1 : 0; }

bool belongs_to(const SignedPerm& a, Kind k) {
  switch (k) {
    case Kind::A: return a.signs() == 0;
    case Kind::B: return true;
    case Kind::D: return (a.sign_weight() & 1) == 0;
  }
  return false;
}

uint64_t perm_rank(const SignedPerm& a) {
  const int n = a.n();
  uint64_t r = 0;
  uint32_t used = 0;
  for (int i = 0; i < n; ++i) {
    const int v = a.image0(i);
    const int smaller_unused = v - std::popcount(used & ((1u << v) - 1u));
    r = r * static_cast<uint64_t>(n - i) + static_cast<uint64_t>(smaller_unused);
    used |= 1u << v;
  }
  return r;
}

uint64_t index_of(const SignedPerm& a, Kind k) {
  const int bits = k == Kind::A ? 0 : (k == Kind::B ? a.n() : a.n() - 1);
  const uint32_t mask = bits >= 32 ? ~0u : ((1u << bits) - 1u);
  return (perm_rank(a) << bits) | (a.signs() & mask);
}

SignedPerm element_at(const GroupSpec& s, uint64_t ordinal) {
  const int bits = sign_bits(s);
  uint64_t r = ordinal >> bits;
  uint32_t signs = static_cast<uint32_t>(ordinal & ((uint64_t{1} << bits) - 1));
  if (s.kind == Kind::D && (std::popcount(signs) & 1)) signs |= 1u << (s.n - 1);
  const int n = s.n;
  std::vector<int> digits(n);
  for (int i = n - 1; i >= 0; --i) {
    const uint64_t base = static_cast<uint64_t>(n - i);
    digits[i] = static_cast<int>(r % base);
    r /= base;
  }
  std::vector<int> avail(n), img(n);
  for (int i = 0; i < n; ++i) avail[i] = i + 1;
  for (int i = 0; i < n; ++i) {
    img[i] = avail[digits[i]];
    avail.erase(avail.begin() + digits[i]);
  }
  return SignedPerm::from_images(img, signs);
}

// --------------------------------------------------------------------- Group

Group::Group(GroupSpec spec, uint64_t cap) : spec_(spec) {
  const uint64_t ord = group_order(spec);
  if (ord > cap) throw std::length_error("group order " + std::to_string(ord) + " exceeds cap " + std::to_string(cap));
  elems_.reserve(ord);
  parity_.resize(ord);
  inv_.resize(ord);
  for (uint64_t i = 0; i < ord; ++i) {
    elems_.push_back(element_at(spec, i));
    parity_[i] = static_cast<uint8_t>(superdegree(elems_.back(), spec.kind));
  }
  for (uint64_t i = 0; i < ord; ++i) inv_[i] = index(inverse(elems_[i]));
  id_ = index(SignedPerm::identity(spec.n));
}

void Group::build_table() {
  const uint64_t ord = elems_.size();
  std::vector<uint32_t> t(ord * ord);
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < static_cast<int64_t>(ord); ++i)
    for (uint64_t j = 0; j < ord; ++j) t[i * ord + j] = index(compose(elems_[i], elems_[j]));
  table_ = std::move(t);
}

namespace {
void put_u64(std::ostream& os, uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  os.write(reinterpret_cast<const char*>(b), 8);
}
bool get_u64(std::istream& is, uint64_t& v) {
  unsigned char b[8];
  if (!is.read(reinterpret_cast<char*>(b), 8)) return false;
  v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return true;
}
}  // namespace

void Group::save_table(const std::string& path) const {
  if (table_.empty()) throw std::logic_error("no multiplication table to save");
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path);
  const char kind = kind_char(spec_.kind);
  os.write(&kind, 1);
  put_u64(os, static_cast<uint64_t>(spec_.n));
  put_u64(os, elems_.size());
  std::vector<unsigned char> buf(table_.size() * 4);
  for (size_t i = 0; i < table_.size(); ++i)
    for (int b = 0; b < 4; ++b) buf[4 * i + b] = static_cast<unsigned char>(table_[i] >> (8 * b));
  os.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
}

bool Group::load_table(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) return false;
  char kind = 0;
  uint64_t n = 0, ord = 0;
  if (!is.read(&kind, 1) || !get_u64(is, n) || !get_u64(is, ord)) return false;
  if (kind != kind_char(spec_.kind) || n != static_cast<uint64_t>(spec_.n) || ord != elems_.size()) return false;
  std::vector<unsigned char> buf(ord * ord * 4);
  if (!is.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()))) return false;
  std::vector<uint32_t> t(ord * ord);
  for (size_t i = 0; i < t.size(); ++i) {
    t[i] = static_cast<uint32_t>(buf[4 * i]) | static_cast<uint32_t>(buf[4 * i + 1]) << 8 |
           static_cast<uint32_t>(buf[4 * i + 2]) << 16 | static_cast<uint32_t>(buf[4 * i + 3]) << 24;
    if (t[i] >= ord) return false;
  }
  table_ = std::move(t);
  return true;
}

bool Group::load_or_build_table(const std::string& cache_dir) {
  if (!cache_dir.empty()) {
    const std::string f = table_cache_file(cache_dir, spec_);
    if (load_table(f)) return true;
    build_table();
    std::error_code ec;
    std::filesystem::create_directories(cache_dir, ec);
    if (!ec) {
      try {
        save_table(f);
      } catch (const std::exception&) {
        // cache is best-effort
      }
    }
    return false;
  }
  build_table();
  return false;
}

std::vector<SignedPerm> Group::coxeter_generators() const {
  const int n = spec_.n;
  std::vector<SignedPerm> g;
  for (int i = 1; i < n; ++i) g.push_back(SignedPerm::s(n, i));
  if (spec_.kind == Kind::B) g.push_back(SignedPerm::t(n, n));
  if (spec_.kind == Kind::D) g.push_back(SignedPerm::s_tilde(n));
  return g;
}

std::vector<SignedPerm> Group::even_generators() const {
  // Schreier generators for the index-2 kernel of the grading, transversal {e, r}.
  const auto gens = coxeter_generators();
  const Kind k = spec_.kind;
  const SignedPerm* r = nullptr;
  for (const auto& g : gens)
    if (superdegree(g, k)) {
      r = &g;
      break;
    }
  std::vector<SignedPerm> out;
  auto add = [&](const SignedPerm& x) {
    if (!x.is_identity() && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  };
  for (const auto& g : gens) {
    if (!superdegree(g, k)) {
      add(g);
      if (r) add(compose_all({*r, g, inverse(*r)}));
    } else {
      add(compose(g, inverse(*r)));
      add(compose(*r, g));
    }
  }
  return out;
}

std::string default_cache_dir() {
  const char* v = std::getenv("SUPERWEYL_CACHE_DIR");
  return v ? std::string(v) : std::string();
}

std::string table_cache_file(const std::string& dir, const GroupSpec& s) {
  return (std::filesystem::path(dir) / ("multab_" + spec_name(s) + ".bin")).string();
}

Reflections reflections(const GroupSpec& s) {
  validate(s);
  const int n = s.n;
  Reflections r;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const SignedPerm tr = SignedPerm::transposition(n, i, j);
      r.long_refl.push_back(tr);
      if (s.kind != Kind::A)
        r.long_refl.push_back(compose_all({SignedPerm::t(n, i), SignedPerm::t(n, j), tr}));
    }
  if (s.kind == Kind::B)
    for (int i = 1; i <= n; ++i) r.short_refl.push_back(SignedPerm::t(n, i));
  return r;
}

std::vector<SignedPerm> conjugacy_class(const Group& g, const SignedPerm& rep, Ambient amb) {
  if (!belongs_to(rep, g.spec().kind) || rep.n() != g.spec().n)
    throw std::invalid_argument("representative not in group");
  const auto gens = amb == Ambient::Full ? g.coxeter_generators() : g.even_generators();
  std::vector<uint8_t> seen(g.order(), 0);
  std::deque<SignedPerm> q{rep};
  seen[g.index(rep)] = 1;
  std::vector<uint32_t> members{g.index(rep)};
  while (!q.empty()) {
    const SignedPerm x = q.front();
    q.pop_front();
    for (const auto& s : gens) {
      const SignedPerm y = compose_all({s, x, inverse(s)});
      const uint32_t iy = g.index(y);
      if (!seen[iy]) {
        seen[iy] = 1;
        members.push_back(iy);
        q.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  std::vector<SignedPerm> out;
  out.reserve(members.size());
  for (uint32_t i : members) out.push_back(g.element(i));
  return out;
}

std::vector<std::vector<uint32_t>> conjugacy_classes(const Group& g, Ambient amb) {
  std::vector<int32_t> cls(g.order(), -1);
  std::vector<std::vector<uint32_t>> out;
  for (uint32_t i = 0; i < g.order(); ++i) {
    if (cls[i] >= 0) continue;
    if (amb == Ambient::Even && g.parity(i)) continue;
    std::vector<uint32_t> members;
    for (const auto& x : conjugacy_class(g, g.element(i), amb)) {
      const uint32_t j = g.index(x);
      cls[j] = static_cast<int32_t>(out.size());
      members.push_back(j);
    }
    out.push_back(std::move(members));
  }
  return out;
}

uint64_t subgroup_generated(const std::vector<SignedPerm>& gens, const GroupSpec& s) {
  validate(s);
  for (const auto& x : gens)
    if (x.n() != s.n || !belongs_to(x, s.kind)) throw std::invalid_argument("generator outside group");
  const uint64_t ord = group_order(s);
  std::vector<uint8_t> seen(ord, 0);
  std::vector<SignedPerm> stack{SignedPerm::identity(s.n)};
  seen[index_of(stack.back(), s.kind)] = 1;
  uint64_t count = 1;
  while (!stack.empty()) {
    const SignedPerm x = stack.back();
    stack.pop_back();
    for (const auto& h : gens) {
      const SignedPerm y = compose(x, h);
      const uint64_t iy = index_of(y, s.kind);
      if (!seen[iy]) {
        seen[iy] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count;
}

std::vector<SignedPerm> even_generating_class(const Group& g) {
  const int n = g.spec().n;
  switch (g.spec().kind) {
    case Kind::A:
      if (n < 4) throw std::invalid_argument("even generating class needs n >= 4");
      return conjugacy_class(g, compose(SignedPerm::transposition(n, 1, 2), SignedPerm::transposition(n, 3, 4)),
                             Ambient::Even);
    case Kind::B:
      if (n < 3) throw std::invalid_argument("even generating class needs n >= 3");
      return conjugacy_class(g, compose(SignedPerm::t(n, 1), SignedPerm::transposition(n, 2, 3)), Ambient::Even);
    case Kind::D:
      return conjugacy_class(g, compose(SignedPerm::transposition(n, 1, 2), SignedPerm::transposition(n, 3, 4)),
                             Ambient::Even);
  }
  return {};
}

CoxeterCheck coxeter_relations(const GroupSpec& s) {
  validate(s);
  const int n = s.n;
  CoxeterCheck r;
  auto power_is_id = [&](const SignedPerm& x, int m, const std::string& what) {
    SignedPerm acc = SignedPerm::identity(n);
    for (int k = 0; k < m; ++k) acc = compose(acc, x);
    if (!acc.is_identity()) {
      r.ok = false;
      r.failures.push_back(what);
    }
  };
  for (int i = 1; i < n; ++i) {
    const auto si = SignedPerm::s(n, i);
    power_is_id(si, 2, "s" + std::to_string(i) + "^2");
    for (int j = i + 1; j < n; ++j)
      power_is_id(compose(si, SignedPerm::s(n, j)), j == i + 1 ? 3 : 2,
                  "(s" + std::to_string(i) + " s" + std::to_string(j) + ")^m");
  }
  if (s.kind == Kind::B) {
    const auto tn = SignedPerm::t(n, n);
    power_is_id(tn, 2, "t_n^2");
    for (int i = 1; i < n; ++i)
      power_is_id(compose(SignedPerm::s(n, i), tn), i == n - 1 ? 4 : 2, "(s" + std::to_string(i) + " t_n)^m");
  }
  if (s.kind == Kind::D) {
    const auto st = SignedPerm::s_tilde(n);
    power_is_id(st, 2, "st^2");
    for (int i = 1; i < n; ++i)
      power_is_id(compose(SignedPerm::s(n, i), st), i == n - 2 ? 3 : 2, "(s" + std::to_string(i) + " st)^m");
  }
  return r;
}

}  // namespace sw
