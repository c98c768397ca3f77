#include "superweyl/tabrep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace sw {

std::complex<double> unit_value(UnitScalar u) {
  switch (((u.power % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

// ------------------------------------------------------------ bitableaux

std::vector<std::vector<int>> StandardBitableau::filling(int t) const {
  const Partition& p = t == 0 ? shape.first : shape.second;
  std::vector<std::vector<int>> f(p.size());
  for (size_t r = 0; r < p.size(); ++r) f[r].assign(p[r], 0);
  for (int i = 0; i < n(); ++i)
    if (tab[i] == t) f[row[i]][col[i]] = i + 1;
  return f;
}

std::vector<int> StandardBitableau::order_key() const {
  std::vector<int> k = tab;
  for (int t = 0; t < 2; ++t)
    for (const auto& r : filling(t)) k.insert(k.end(), r.begin(), r.end());
  return k;
}

std::string StandardBitableau::to_string() const {
  std::string s = "(";
  for (int t = 0; t < 2; ++t) {
    s += t ? "|" : "";
    const auto f = filling(t);
    for (size_t r = 0; r < f.size(); ++r) {
      if (r) s += "/";
      for (size_t c = 0; c < f[r].size(); ++c) s += (c ? "," : "") + std::to_string(f[r][c]);
    }
  }
  return s + ")";
}

StandardBitableau from_fillings(const Bipartition& shape, const std::vector<std::vector<int>>& first,
                                const std::vector<std::vector<int>>& second) {
  StandardBitableau t;
  t.shape = shape;
  const int n = shape.n();
  t.tab.assign(n, -1);
  t.row.assign(n, 0);
  t.col.assign(n, 0);
  const std::vector<std::vector<int>>* f[2] = {&first, &second};
  const Partition* p[2] = {&shape.first, &shape.second};
  for (int k = 0; k < 2; ++k) {
    if (f[k]->size() != p[k]->size()) throw std::invalid_argument("filling does not match shape");
    for (size_t r = 0; r < f[k]->size(); ++r) {
      if (static_cast<int>((*f[k])[r].size()) != (*p[k])[r]) throw std::invalid_argument("filling row length");
      for (size_t c = 0; c < (*f[k])[r].size(); ++c) {
        const int e = (*f[k])[r][c];
        if (e < 1 || e > n || t.tab[e - 1] >= 0) throw std::invalid_argument("filling entries");
        t.tab[e - 1] = k;
        t.row[e - 1] = static_cast<int>(r);
        t.col[e - 1] = static_cast<int>(c);
      }
    }
  }
  return t;
}

bool is_standard(const StandardBitableau& t) {
  for (int k = 0; k < 2; ++k) {
    const auto f = t.filling(k);
    for (size_t r = 0; r < f.size(); ++r)
      for (size_t c = 0; c < f[r].size(); ++c) {
        if (c + 1 < f[r].size() && f[r][c] >= f[r][c + 1]) return false;
        if (r + 1 < f.size() && c < f[r + 1].size() && f[r][c] >= f[r + 1][c]) return false;
      }
  }
  return true;
}

namespace {

// Standard tableaux of shape p filled with the sorted values vals.
void standard_fillings(const Partition& p, const std::vector<int>& vals,
                       std::vector<std::vector<std::vector<int>>>& out) {
  std::vector<std::vector<int>> cur(p.size());
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == vals.size()) {
      out.push_back(cur);
      return;
    }
    for (size_t r = 0; r < p.size(); ++r) {
      const size_t len = cur[r].size();
      if (static_cast<int>(len) >= p[r]) continue;
      if (r > 0 && cur[r - 1].size() <= len) continue;
      cur[r].push_back(vals[k]);
      rec(k + 1);
      cur[r].pop_back();
    }
  };
  rec(0);
}

}  // namespace

std::vector<StandardBitableau> enumerate_bitableaux(const Bipartition& shape) {
  const int n = shape.n();
  const int a = size(shape.first);
  std::vector<StandardBitableau> out;
  // choose which entries go to the first tableau
  std::vector<int> sel(n, 0);
  std::fill(sel.begin() + a, sel.end(), 1);
  do {
    std::vector<int> v0, v1;
    for (int i = 0; i < n; ++i) (sel[i] == 0 ? v0 : v1).push_back(i + 1);
    std::vector<std::vector<std::vector<int>>> f0, f1;
    standard_fillings(shape.first, v0, f0);
    standard_fillings(shape.second, v1, f1);
    for (const auto& x : f0)
      for (const auto& y : f1) out.push_back(from_fillings(shape, x, y));
  } while (std::next_permutation(sel.begin(), sel.end()));
  std::sort(out.begin(), out.end(),
            [](const StandardBitableau& x, const StandardBitableau& y) { return x.order_key() < y.order_key(); });
  return out;
}

StandardBitableau row_major(const Bipartition& shape) {
  std::vector<std::vector<int>> f[2];
  int e = 1;
  const Partition* p[2] = {&shape.first, &shape.second};
  for (int k = 0; k < 2; ++k)
    for (int len : *p[k]) {
      f[k].emplace_back();
      for (int c = 0; c < len; ++c) f[k].back().push_back(e++);
    }
  return from_fillings(shape, f[0], f[1]);
}

StandardBitableau transpose(const StandardBitableau& t) {
  StandardBitableau u = t;
  u.shape = conj_parts(t.shape);
  std::swap(u.row, u.col);
  return u;
}

StandardBitableau swap_tableaux(const StandardBitableau& t) {
  StandardBitableau u = t;
  u.shape = swap_parts(t.shape);
  for (auto& k : u.tab) k = 1 - k;
  return u;
}

StandardBitableau permute_entries(const StandardBitableau& t, const std::vector<int>& sigma) {
  StandardBitableau u = t;
  for (int i = 0; i < t.n(); ++i) {
    const int j = sigma[i] - 1;  // entry i+1 becomes sigma(i+1)
    u.tab[j] = t.tab[i];
    u.row[j] = t.row[i];
    u.col[j] = t.col[i];
  }
  return u;
}

std::vector<int> sigma_of(const StandardBitableau& t) {
  const StandardBitableau r = row_major(t.shape);
  const int n = t.n();
  std::map<std::tuple<int, int, int>, int> at;
  for (int i = 0; i < n; ++i) at[{t.tab[i], t.row[i], t.col[i]}] = i + 1;
  std::vector<int> s(n);
  for (int i = 0; i < n; ++i) s[i] = at.at({r.tab[i], r.row[i], r.col[i]});
  return s;
}

int inversions(const std::vector<int>& perm) {
  int c = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j) c += perm[i] > perm[j];
  return c;
}

int length(const StandardBitableau& t) { return inversions(sigma_of(t)); }

std::vector<int> cycle_lengths(const std::vector<int>& perm) {
  std::vector<int> out;
  std::vector<char> seen(perm.size(), 0);
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = static_cast<size_t>(perm[j] - 1)) {
      seen[j] = 1;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

// ------------------------------------------------------------ realization

RepRealization::RepRealization(Bipartition shape) : shape_(std::move(shape)), n_(shape_.n()) {
  if (!is_partition(shape_.first) || !is_partition(shape_.second) || n_ < 1)
    throw std::invalid_argument("invalid shape");
  basis_ = enumerate_bitableaux(shape_);
  for (size_t k = 0; k < basis_.size(); ++k) index_[basis_[k].order_key()] = static_cast<int>(k);
  const int d = dim();
  for (int i = 1; i <= n_; ++i) {
    RMat t = RMat::Zero(d, d);
    for (int k = 0; k < d; ++k) t(k, k) = basis_[k].rho(i);
    t_.push_back(std::move(t));
  }
  for (int i = 1; i < n_; ++i) {
    RMat s = RMat::Zero(d, d);
    std::vector<int> sw(n_);
    std::iota(sw.begin(), sw.end(), 1);
    std::swap(sw[i - 1], sw[i]);
    for (int k = 0; k < d; ++k) {
      const StandardBitableau& T = basis_[k];
      if (T.tab[i - 1] != T.tab[i]) {
        const StandardBitableau S = permute_entries(T, sw);
        if (!is_standard(S)) throw std::logic_error("s_i T not standard across tableaux");
        s(index_of(S), k) = 1;
        continue;
      }
      const int r = T.res(i + 1) - T.res(i);
      if (T.row[i - 1] == T.row[i]) {
        s(k, k) = 1;
      } else if (T.col[i - 1] == T.col[i]) {
        s(k, k) = -1;
      } else {
        if (std::abs(r) < 2) throw std::logic_error("axial distance below 2");
        const StandardBitableau S = permute_entries(T, sw);
        if (!is_standard(S)) throw std::logic_error("s_i T not standard");
        s(k, k) = 1.0 / r;
        s(index_of(S), k) = std::sqrt(1.0 - 1.0 / (static_cast<double>(r) * r));
      }
    }
    std::vector<Entry> nz;
    for (int c = 0; c < d; ++c)
      for (int r = 0; r < d; ++r)
        if (s(r, c) != 0) nz.push_back({r, c, s(r, c)});
    s_sparse_.push_back(std::move(nz));
    s_.push_back(std::move(s));
  }
}

int RepRealization::index_of(const StandardBitableau& t) const {
  auto it = index_.find(t.order_key());
  if (it == index_.end() || !(t.shape == shape_)) throw std::out_of_range("bitableau not in basis");
  return it->second;
}

RMat RepRealization::matrix_of(const SignedPerm& g) const {
  if (g.n() != n_) throw std::invalid_argument("element rank mismatch");
  const int d = dim();
  // sigma = s_{w_k} ... s_{w_1}, peeled off on the right through descents
  std::vector<int> img(n_);
  for (int j = 1; j <= n_; ++j) img[j - 1] = g.image(j);
  RMat m = RMat::Identity(d, d);
  RMat next(d, d);
  for (;;) {
    int i = -1;
    for (int j = 0; j + 1 < n_; ++j)
      if (img[j] > img[j + 1]) {
        i = j;
        break;
      }
    if (i < 0) break;
    std::swap(img[i], img[i + 1]);
    next.setZero();
    for (const Entry& e : s_sparse_[i]) next.row(e.row) += e.val * m.row(e.col);
    m.swap(next);
  }
  for (int j = 1; j <= n_; ++j)
    if (g.sign_bit(j))
      for (int k = 0; k < d; ++k)
        if (basis_[k].rho(j) < 0) m.row(k) *= -1;
  return m;
}

namespace {

void track(RelationReport& rep, double err, double tol, const std::string& what) {
  rep.max_error = std::max(rep.max_error, err);
  if (err > tol) {
    rep.ok = false;
    rep.failures.push_back(what);
  }
}

double dev_from_identity(const RMat& m) { return (m - RMat::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff(); }

RMat mpow(const RMat& m, int k) {
  RMat r = RMat::Identity(m.rows(), m.cols());
  for (int i = 0; i < k; ++i) r = r * m;
  return r;
}

}  // namespace

RelationReport check_relations(const RepRealization& r, double tol) {
  RelationReport rep;
  const int n = r.n();
  if (r.dim() == 0) return rep;
  for (int i = 1; i < n; ++i) {
    track(rep, dev_from_identity(r.s(i) * r.s(i)), tol, "s^2");
    track(rep, dev_from_identity(r.s(i) * r.s(i).transpose()), tol, "s orthogonal");
    for (int j = i + 1; j < n; ++j)
      track(rep, dev_from_identity(mpow(r.s(i) * r.s(j), j == i + 1 ? 3 : 2)), tol, "braid");
  }
  for (int i = 1; i <= n; ++i) {
    track(rep, dev_from_identity(r.t(i) * r.t(i)), tol, "t^2");
    track(rep, dev_from_identity(r.t(i) * r.t(i).transpose()), tol, "t orthogonal");
    for (int j = 1; j < n; ++j) {
      const RMat lhs = r.s(j) * r.t(i) * r.s(j);
      const int ti = (i == j) ? j + 1 : (i == j + 1 ? j : i);
      track(rep, (lhs - r.t(ti)).cwiseAbs().maxCoeff(), tol, "s t s");
    }
  }
  if (n >= 2) {
    const RMat& tn = r.t(n);
    track(rep, dev_from_identity(mpow(r.s(n - 1) * tn, 4)), tol, "(s_{n-1} t_n)^4");
    for (int i = 1; i < n - 1; ++i) track(rep, dev_from_identity(mpow(r.s(i) * tn, 2)), tol, "(s_i t_n)^2");
    const RMat st = tn * r.s(n - 1) * tn;
    track(rep, dev_from_identity(mpow(r.s(n - 1) * st, 2)), tol, "(s_{n-1} st_n)^2");
    if (n >= 3) track(rep, dev_from_identity(mpow(r.s(n - 2) * st, 3)), tol, "(s_{n-2} st_n)^3");
  }
  return rep;
}

RelationReport check_class_traces(const RepRealization& r, Kind kind, double tol) {
  RelationReport rep;
  const Group g({kind, r.n()});
  const auto mats = all_element_matrices<RMat>(g, [&](const SignedPerm& s) { return r.matrix_of(s); });
  for (const auto& cls : conjugacy_classes(g, Ambient::Full)) {
    const double t0 = mats[cls.front()].trace();
    for (uint32_t k : cls) track(rep, std::abs(mats[k].trace() - t0), tol, "class trace");
  }
  // the breadth-first products agree with the direct word evaluation
  for (uint32_t k = 0; k < g.order(); k += std::max<uint32_t>(1, g.order() / 64))
    track(rep, (mats[k] - r.matrix_of(g.element(k))).cwiseAbs().maxCoeff(), tol, "element matrix");
  return rep;
}

YjmTable yjm_check(const RepRealization& r, double tol) {
  YjmTable out;
  const int n = r.n();
  const int d = r.dim();
  out.eigen.assign(d, std::vector<double>(n, 0));
  RMat total = RMat::Zero(d, d);
  for (int i = 1; i <= n; ++i) {
    RMat x = RMat::Zero(d, d);
    for (int k = 1; k < i; ++k) {
      const RMat tr = r.matrix_of(SignedPerm::transposition(n, k, i));
      x += tr + r.t(k) * r.t(i) * tr;
    }
    total += x;
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        const double want = a == b ? 2.0 * r.basis()[a].res(i) : 0.0;
        const double err = std::abs(x(a, b) - want);
        out.max_error = std::max(out.max_error, err);
        if (err > tol) out.ok = false;
      }
    for (int a = 0; a < d; ++a) out.eigen[a][i - 1] = x(a, a);
  }
  out.total_scalar = 2.0 * residue_sum(r.shape());
  const double err = (total - out.total_scalar * RMat::Identity(d, d)).cwiseAbs().maxCoeff();
  out.max_error = std::max(out.max_error, err);
  if (err > tol) out.ok = false;
  return out;
}

// ------------------------------------------------------------ associators

const char* twist_name(Twist w) {
  switch (w) {
    case Twist::EpsPrime: return "eps'";
    case Twist::EpsDoublePrime: return "eps''";
    case Twist::Eps: return "eps";
  }
  return "?";
}

UnitScalar eps_prime_scalar(const Bipartition& b) {
  return cycle_type_scalar(cycle_lengths(sigma_of(swap_tableaux(row_major(b)))));
}

UnitScalar eps_double_prime_scalar(const Bipartition& b) {
  return cycle_type_scalar(cycle_lengths(sigma_of(transpose(row_major(b)))));
}

UnitScalar eps_scalar(const Bipartition& b) { return eps_prime_scalar(b) * eps_double_prime_scalar(b); }

Bipartition twist_target(const Bipartition& b, Twist w) {
  switch (w) {
    case Twist::EpsPrime: return swap_parts(b);
    case Twist::EpsDoublePrime: return conj_parts(b);
    case Twist::Eps: return twist(b);
  }
  return b;
}

Associator associator(const Bipartition& shape, Twist w) {
  const auto src = enumerate_bitableaux(shape);
  const Bipartition tgt_shape = twist_target(shape, w);
  const auto tgt = enumerate_bitableaux(tgt_shape);
  std::map<std::vector<int>, int> tidx;
  for (size_t k = 0; k < tgt.size(); ++k) tidx[tgt[k].order_key()] = static_cast<int>(k);
  Associator a;
  a.source = shape;
  a.target = tgt_shape;
  a.which = w;
  switch (w) {
    case Twist::EpsPrime: a.scalar = eps_prime_scalar(shape); break;
    case Twist::EpsDoublePrime: a.scalar = eps_double_prime_scalar(shape); break;
    case Twist::Eps: a.scalar = eps_scalar(shape); break;
  }
  const cplx sc = unit_value(a.scalar);
  a.matrix = CMat::Zero(static_cast<int>(tgt.size()), static_cast<int>(src.size()));
  for (size_t k = 0; k < src.size(); ++k) {
    const StandardBitableau& T = src[k];
    StandardBitableau image;
    cplx coef = 1;
    switch (w) {
      case Twist::EpsPrime: image = swap_tableaux(T); break;
      case Twist::EpsDoublePrime:
        image = transpose(T);
        coef = sc * static_cast<double>(length(T) % 2 ? -1 : 1);
        break;
      case Twist::Eps: {
        const StandardBitableau Tn = swap_tableaux(T);
        image = transpose(Tn);
        coef = sc * static_cast<double>(length(Tn) % 2 ? -1 : 1);
        break;
      }
    }
    a.matrix(tidx.at(image.order_key()), static_cast<int>(k)) = coef;
  }
  return a;
}

double intertwining_error(const Associator& a, const RepRealization& src, const RepRealization& tgt) {
  const int n = src.n();
  Character ch = Character::Eps;
  if (a.which == Twist::EpsPrime) ch = Character::EpsPrime;
  if (a.which == Twist::EpsDoublePrime) ch = Character::EpsDoublePrime;
  double err = 0;
  auto check = [&](const SignedPerm& g) {
    const double k = char_value(g, ch);
    const CMat lhs = a.matrix * src.matrix_of(g).cast<cplx>();
    const CMat rhs = k * tgt.matrix_of(g).cast<cplx>() * a.matrix;
    err = std::max(err, (lhs - rhs).cwiseAbs().maxCoeff());
  };
  for (int i = 1; i < n; ++i) check(SignedPerm::s(n, i));
  for (int i = 1; i <= n; ++i) check(SignedPerm::t(n, i));
  return err;
}

namespace {

CMat orthonormal_columns(const CMat& m, double tol) {
  std::vector<Eigen::VectorXcd> basis;
  for (int c = 0; c < m.cols(); ++c) {
    Eigen::VectorXcd v = m.col(c);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) v -= b * b.dot(v);
    const double nv = v.norm();
    if (nv > tol) basis.push_back(v / nv);
  }
  CMat out(m.rows(), static_cast<int>(basis.size()));
  for (size_t k = 0; k < basis.size(); ++k) out.col(static_cast<int>(k)) = basis[k];
  return out;
}

}  // namespace

EigenSplit split_eigenspaces(const CMat& phi, double tol) {
  if (phi.rows() != phi.cols()) throw std::invalid_argument("associator not square");
  const int d = static_cast<int>(phi.rows());
  const CMat id = CMat::Identity(d, d);
  if (d > 0 && (phi * phi - id).cwiseAbs().maxCoeff() > tol) throw std::invalid_argument("map is not an involution");
  EigenSplit s;
  s.plus = orthonormal_columns(0.5 * (id + phi), 1e-6);
  s.minus = orthonormal_columns(0.5 * (id - phi), 1e-6);
  if (s.plus.cols() + s.minus.cols() != d) throw std::logic_error("eigenspace dimensions do not add up");
  return s;
}

std::string dump_matrix(const RMat& m) {
  std::string out;
  char buf[64];
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      std::snprintf(buf, sizeof buf, "%.17g", m(r, c));
      out += (c ? " " : "");
      out += buf;
    }
    out += '\n';
  }
  return out;
}

std::string dump_matrix(const CMat& m) {
  std::string out;
  char buf[96];
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      std::snprintf(buf, sizeof buf, "%.17g%+.17gi", m(r, c).real(), m(r, c).imag());
      out += (c ? " " : "");
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace sw
