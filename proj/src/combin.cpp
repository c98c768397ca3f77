#include "superweyl/combin.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace sw {

bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] <= 0 || (i > 0 && p[i] > p[i - 1])) return false;
  return true;
}

int size(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

Partition conjugate(const Partition& p) {
  Partition c;
  if (p.empty()) return c;
  c.assign(p[0], 0);
  for (int r : p)
    for (int j = 0; j < r; ++j) ++c[j];
  return c;
}

int diagonal_length(const Partition& p) {
  int d = 0;
  while (d < static_cast<int>(p.size()) && p[d] > d) ++d;
  return d;
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rem, int maxp) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rem, maxp); k >= 1; --k) {
      cur.push_back(k);
      rec(rem - k, k);
      cur.pop_back();
    }
  };
  if (n == 0) return {Partition{}};
  rec(n, n);
  return out;
}

uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<uint64_t>(n - k + i) / static_cast<uint64_t>(i);
  return r;
}

uint64_t hook_dim(const Partition& p) {
  if (!is_partition(p)) throw std::invalid_argument("not a partition");
  const Partition c = conjugate(p);
  const int n = size(p);
  // n! / prod hooks, accumulated as a product of ratios to stay exact
  std::vector<int> hooks;
  for (size_t r = 0; r < p.size(); ++r)
    for (int j = 0; j < p[r]; ++j) hooks.push_back((p[r] - j - 1) + (c[j] - static_cast<int>(r) - 1) + 1);
  unsigned __int128 num = 1;
  for (int i = 2; i <= n; ++i) num *= static_cast<unsigned>(i);
  unsigned __int128 den = 1;
  for (int h : hooks) den *= static_cast<unsigned>(h);
  return static_cast<uint64_t>(num / den);
}

std::string to_string(const Partition& p) {
  std::string s = "[";
  for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

std::vector<Box> removable_boxes(const Partition& p) {
  std::vector<Box> out;
  for (size_t r = 0; r < p.size(); ++r)
    if (r + 1 == p.size() || p[r + 1] < p[r]) out.push_back({static_cast<int>(r), p[r] - 1});
  return out;
}

Partition remove_box(const Partition& p, const Box& b) {
  Partition q = p;
  if (b.row >= static_cast<int>(q.size()) || q[b.row] != b.col + 1) throw std::invalid_argument("box not removable");
  if (--q[b.row] == 0) q.pop_back();
  if (!is_partition(q)) throw std::invalid_argument("box not removable");
  return q;
}

bool Bipartition::operator<(const Bipartition& o) const {
  if (first != o.first) return first < o.first;
  return second < o.second;
}

std::string to_string(const Bipartition& b) { return "(" + to_string(b.first) + "," + to_string(b.second) + ")"; }

std::vector<Bipartition> bipartitions(int n) {
  std::vector<Bipartition> out;
  for (int k = n; k >= 0; --k)
    for (const auto& l : partitions(k))
      for (const auto& m : partitions(n - k)) out.push_back({l, m});
  return out;
}

uint64_t bipartition_dim(const Bipartition& b) {
  return binomial(b.n(), size(b.first)) * hook_dim(b.first) * hook_dim(b.second);
}

Bipartition swap_parts(const Bipartition& b) { return {b.second, b.first}; }
Bipartition conj_parts(const Bipartition& b) { return {conjugate(b.first), conjugate(b.second)}; }
Bipartition twist(const Bipartition& b) { return {conjugate(b.second), conjugate(b.first)}; }

int residue_sum(const Partition& p) {
  int s = 0;
  for (size_t r = 0; r < p.size(); ++r)
    for (int j = 0; j < p[r]; ++j) s += j - static_cast<int>(r);
  return s;
}

int residue_sum(const Bipartition& b) { return residue_sum(b.first) + residue_sum(b.second); }

std::vector<Bipartition> branch(const Bipartition& b) {
  std::vector<Bipartition> out;
  for (const auto& bx : removable_boxes(b.first)) out.push_back({remove_box(b.first, bx), b.second});
  for (const auto& bx : removable_boxes(b.second)) out.push_back({b.first, remove_box(b.second, bx)});
  return out;
}

// ------------------------------------------------------------------ families

const char* family_kind_name(FamilyKind f) {
  switch (f) {
    case FamilyKind::A_E: return "A:E";
    case FamilyKind::A_F: return "A:F";
    case FamilyKind::B_E: return "B:E";
    case FamilyKind::B_F: return "B:F";
    case FamilyKind::D_E_distinct: return "D:E";
    case FamilyKind::D_E_equal: return "D:E=";
    case FamilyKind::D_F_distinct: return "D:F";
    case FamilyKind::D_F_equal_M: return "D:F=M";
    case FamilyKind::D_F_equal_Q: return "D:F=Q";
  }
  return "?";
}

uint64_t IrrFamily::block_mass() const {
  if (type == SuperType::Q) {
    const uint64_t d = super_dim / 2;
    return 2 * d * d - 1;
  }
  return super_dim * super_dim - 1;
}

std::string IrrFamily::name() const {
  std::string s;
  if (kind == Kind::A)
    s = to_string(label.first);
  else
    s = to_string(label);
  if (sign > 0) s += "+";
  if (sign < 0) s += "-";
  return s;
}

bool IrrFamily::operator<(const IrrFamily& o) const {
  if (kind != o.kind) return kind < o.kind;
  if (n != o.n) return n < o.n;
  if (!(label == o.label)) return label < o.label;
  return sign < o.sign;
}

namespace {

bool d_pair_fixed(const Bipartition& b) {
  const Bipartition c = conj_parts(b);
  return c == b || c == swap_parts(b);
}

Bipartition canonical(Kind k, const Bipartition& b) {
  switch (k) {
    case Kind::A: return std::min(b, Bipartition{conjugate(b.first), {}});
    case Kind::B: return std::min(b, twist(b));
    case Kind::D: return std::min({b, swap_parts(b), conj_parts(b), twist(b)});
  }
  return b;
}

IrrFamily make(Kind k, int n, Bipartition label, FamilyKind f, int sign, SuperType t, uint64_t sdim) {
  IrrFamily x;
  x.kind = k;
  x.n = n;
  x.label = std::move(label);
  x.family = f;
  x.sign = sign;
  x.type = t;
  x.super_dim = sdim;
  return x;
}

// The families whose direct sum realizes the module labelled by b at rank n
// (for kind D and b = (nu, nu) this is the +/- pair or the single Q family).
std::vector<IrrFamily> expand(Kind k, int n, const Bipartition& b) {
  const Bipartition c = canonical(k, b);
  std::vector<IrrFamily> out;
  for (const auto& f : classify({k, n}))
    if (f.label == c) out.push_back(f);
  if (out.empty()) throw std::logic_error("no family for " + to_string(b));
  return out;
}

IrrFamily single(Kind k, int n, const Bipartition& b) {
  auto v = expand(k, n, b);
  if (v.size() != 1) throw std::logic_error("ambiguous family for " + to_string(b));
  return v.front();
}

}  // namespace

std::vector<IrrFamily> classify(const GroupSpec& s) {
  validate(s);
  const int n = s.n;
  std::vector<IrrFamily> out;
  switch (s.kind) {
    case Kind::A:
      for (const auto& l : partitions(n)) {
        const Bipartition b{l, {}};
        const Partition lc = conjugate(l);
        if (lc == l)
          out.push_back(make(Kind::A, n, b, FamilyKind::A_F, 0, SuperType::M, hook_dim(l)));
        else if (canonical(Kind::A, b) == b)
          out.push_back(make(Kind::A, n, b, FamilyKind::A_E, 0, SuperType::Q, 2 * hook_dim(l)));
      }
      break;
    case Kind::B:
      for (const auto& b : bipartitions(n)) {
        const uint64_t d = bipartition_dim(b);
        if (twist(b) == b)
          out.push_back(make(Kind::B, n, b, FamilyKind::B_F, 0, SuperType::M, d));
        else if (canonical(Kind::B, b) == b)
          out.push_back(make(Kind::B, n, b, FamilyKind::B_E, 0, SuperType::Q, 2 * d));
      }
      break;
    case Kind::D:
      for (const auto& b : bipartitions(n)) {
        if (!(canonical(Kind::D, b) == b)) continue;
        const uint64_t d = bipartition_dim(b);
        const bool fixed = d_pair_fixed(b);
        if (b.first != b.second) {
          if (fixed)
            out.push_back(make(Kind::D, n, b, FamilyKind::D_F_distinct, 0, SuperType::M, d));
          else
            out.push_back(make(Kind::D, n, b, FamilyKind::D_E_distinct, 0, SuperType::Q, 2 * d));
        } else if (!fixed) {
          for (int sg : {+1, -1}) out.push_back(make(Kind::D, n, b, FamilyKind::D_E_equal, sg, SuperType::Q, d));
        } else if ((n / 2) % 2 == 0) {
          for (int sg : {+1, -1}) out.push_back(make(Kind::D, n, b, FamilyKind::D_F_equal_M, sg, SuperType::M, d / 2));
        } else {
          out.push_back(make(Kind::D, n, b, FamilyKind::D_F_equal_Q, 0, SuperType::Q, d));
        }
      }
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

DerivedPrediction predicted_derived_dim(const GroupSpec& s) {
  DerivedPrediction p;
  const auto fams = classify(s);
  for (const auto& f : fams) {
    (f.type == SuperType::Q ? p.q_families : p.m_families)++;
    p.by_blocks += f.block_mass();
    p.mass += f.block_mass() + 1;
  }
  p.by_count = group_order(s) - p.q_families - p.m_families;
  if (p.by_count != p.by_blocks || p.mass != group_order(s))
    throw std::logic_error("derived-dimension routes disagree for " + spec_name(s));
  return p;
}

bool RestrictionTerm::operator<(const RestrictionTerm& o) const {
  if (!(child == o.child)) return child < o.child;
  return shifted < o.shifted;
}

bool EvenSimple::operator<(const EvenSimple& o) const {
  if (!(family == o.family)) return family < o.family;
  return part < o.part;
}

std::vector<RestrictionTerm> super_restrict(const IrrFamily& f) {
  const Kind k = f.kind;
  const int n = f.n;
  const int m = n - 1;
  if (n < 3 || (k == Kind::D && n < 5)) throw std::invalid_argument("restriction needs n >= 3 (n >= 5 for D)");
  std::vector<RestrictionTerm> out;
  auto push = [&](const IrrFamily& c, bool shifted) { out.push_back({c, c.type == SuperType::Q ? false : shifted}); };
  auto push_both = [&](const IrrFamily& c) {
    push(c, false);
    push(c, true);
  };
  const Partition& l = f.label.first;
  const Partition& mu = f.label.second;
  switch (f.family) {
    case FamilyKind::A_E:
      for (const auto& bx : removable_boxes(l)) {
        const IrrFamily c = single(Kind::A, m, {remove_box(l, bx), {}});
        if (c.type == SuperType::M)
          push_both(c);
        else
          push(c, false);
      }
      break;
    case FamilyKind::A_F:
      for (const auto& bx : removable_boxes(l)) {
        const Partition nu = remove_box(l, bx);
        // nu and nu* are both children; the pair gives one Q summand.
        if (bx.residue() == 0 || canonical(Kind::A, {nu, {}}).first == nu) push(single(Kind::A, m, {nu, {}}), false);
      }
      break;
    case FamilyKind::B_E:
      for (const auto& ch : branch(f.label)) {
        const IrrFamily c = single(Kind::B, m, ch);
        if (c.type == SuperType::M)
          push_both(c);
        else
          push(c, false);
      }
      break;
    case FamilyKind::B_F:
      for (const auto& bx : removable_boxes(l)) push(single(Kind::B, m, {remove_box(l, bx), mu}), false);
      break;
    case FamilyKind::D_E_distinct:
      for (const auto& ch : branch(f.label)) {
        const bool fixed = d_pair_fixed(ch);
        for (const auto& c : expand(Kind::D, m, ch)) {
          if (fixed)
            push_both(c);
          else
            push(c, false);
        }
      }
      break;
    case FamilyKind::D_E_equal:
      for (const auto& bx : removable_boxes(l)) push(single(Kind::D, m, {remove_box(l, bx), l}), false);
      break;
    case FamilyKind::D_F_distinct:
      if (mu == conjugate(l)) {
        for (const auto& bx : removable_boxes(l)) push(single(Kind::D, m, {remove_box(l, bx), mu}), false);
      } else {
        for (const auto& bx : removable_boxes(l))
          if (bx.residue() >= 0)
            for (const auto& c : expand(Kind::D, m, {remove_box(l, bx), mu})) push(c, false);
        for (const auto& bx : removable_boxes(mu))
          if (bx.residue() >= 0)
            for (const auto& c : expand(Kind::D, m, {l, remove_box(mu, bx)})) push(c, false);
      }
      break;
    case FamilyKind::D_F_equal_M:
      for (const auto& bx : removable_boxes(l))
        if (bx.residue() >= 0) push(single(Kind::D, m, {remove_box(l, bx), l}), false);
      break;
    case FamilyKind::D_F_equal_Q:
      for (const auto& bx : removable_boxes(l)) {
        const IrrFamily c = single(Kind::D, m, {remove_box(l, bx), l});
        if (bx.residue() > 0) {
          push(c, false);
          push(c, false);
        } else if (bx.residue() == 0) {
          push_both(c);
        }
      }
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EvenSimple> branch_even(const EvenSimple& parent) {
  std::vector<EvenSimple> out;
  for (const auto& t : super_restrict(parent.family)) {
    if (t.child.type == SuperType::Q)
      out.push_back({t.child, 0});
    else
      out.push_back({t.child, parent.part ^ (t.shifted ? 1 : 0)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string UnitScalar::to_string() const {
  static const char* names[] = {"1", "i", "-1", "-i"};
  return names[((power % 4) + 4) % 4];
}

UnitScalar cycle_type_scalar(const std::vector<int>& cycle_lengths) {
  int p = 0;
  for (int a : cycle_lengths) {
    if (a < 1) throw std::invalid_argument("cycle length must be positive");
    p += a - 1;
  }
  return {p % 4};
}

std::string family_table_csv(const GroupSpec& s) {
  std::ostringstream os;
  os << "family,kind,supertype,super_dim,block\n";
  for (const auto& f : classify(s))
    os << '"' << f.name() << "\"," << family_kind_name(f.family) << ',' << (f.type == SuperType::Q ? 'Q' : 'M') << ','
       << f.super_dim << ',' << f.block_mass() << '\n';
  return os.str();
}

}  // namespace sw
