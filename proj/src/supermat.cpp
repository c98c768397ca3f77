#include "superweyl/supermat.hpp"

#include <stdexcept>

namespace sw {

namespace {

void same_shape(const SuperMatrix& x, const SuperMatrix& y) {
  if (x.m != y.m || x.n != y.n) throw std::invalid_argument("super matrix shapes differ");
}

int par(int m, int r, int c) { return (r < m) != (c < m) ? 1 : 0; }

SuperMatrix part(const SuperMatrix& x, int p) {
  SuperMatrix y = x;
  for (int r = 0; r < x.size(); ++r)
    for (int c = 0; c < x.size(); ++c)
      if (par(x.m, r, c) != p) y.at(r, c) = 0;
  return y;
}

Rational block_trace(const SuperMatrix& x, int r0, int c0, int len) {
  Rational t = 0;
  for (int i = 0; i < len; ++i) t += x.at(r0 + i, c0 + i);
  return t;
}

}  // namespace

SuperMatrix SuperMatrix::unit(int m, int n, int r, int c) {
  SuperMatrix x(m, n);
  x.at(r, c) = 1;
  return x;
}

SuperMatrix SuperMatrix::identity(int m, int n) {
  SuperMatrix x(m, n);
  for (int i = 0; i < m + n; ++i) x.at(i, i) = 1;
  return x;
}

SuperMatrix SuperMatrix::standard_j(int m) {
  SuperMatrix x(m, m);
  for (int i = 0; i < m; ++i) {
    x.at(i, m + i) = 1;
    x.at(m + i, i) = 1;
  }
  return x;
}

Grading grading(const SuperMatrix& x) {
  bool e = false, o = false;
  for (int r = 0; r < x.size(); ++r)
    for (int c = 0; c < x.size(); ++c)
      if (x.at(r, c) != 0) (par(x.m, r, c) ? o : e) = true;
  if (e && o) return Grading::Mixed;
  if (e) return Grading::Even;
  if (o) return Grading::Odd;
  return Grading::Zero;
}

SuperMatrix operator+(const SuperMatrix& x, const SuperMatrix& y) {
  same_shape(x, y);
  SuperMatrix z = x;
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
  return z;
}

SuperMatrix operator-(const SuperMatrix& x, const SuperMatrix& y) { return x + Rational(-1) * y; }

SuperMatrix operator*(const Rational& s, const SuperMatrix& x) {
  SuperMatrix z = x;
  for (auto& v : z.a) v *= s;
  return z;
}

SuperMatrix operator*(const SuperMatrix& x, const SuperMatrix& y) {
  same_shape(x, y);
  const int d = x.size();
  SuperMatrix z(x.m, x.n);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      if (x.at(i, k) == 0) continue;
      for (int j = 0; j < d; ++j) z.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return z;
}

SuperMatrix even_part(const SuperMatrix& x) { return part(x, 0); }
SuperMatrix odd_part(const SuperMatrix& x) { return part(x, 1); }

SuperMatrix superbracket(const SuperMatrix& x, const SuperMatrix& y) {
  same_shape(x, y);
  SuperMatrix z(x.m, x.n);
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q) {
      const SuperMatrix a = part(x, p), b = part(y, q);
      const SuperMatrix ab = a * b, ba = b * a;
      z = z + (p && q ? ab + ba : ab - ba);
    }
  return z;
}

Rational supertrace(const SuperMatrix& x) { return block_trace(x, 0, 0, x.m) - block_trace(x, x.m, x.m, x.n); }

bool in_q(const SuperMatrix& x) {
  if (x.m != x.n) return false;
  const int m = x.m;
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c)
      if (x.at(r, c) != x.at(m + r, m + c) || x.at(r, m + c) != x.at(m + r, c)) return false;
  return true;
}

bool in_sl(const SuperMatrix& x) { return supertrace(x) == 0; }

bool in_sq(const SuperMatrix& x) { return in_q(x) && block_trace(x, x.m, 0, x.m) == 0; }

Rational odd_trace(const SuperMatrix& theta, const SuperMatrix& j) {
  same_shape(theta, j);
  if (grading(j) != Grading::Odd || !(j * j == SuperMatrix::identity(j.m, j.n)))
    throw std::invalid_argument("J is not an odd involution");
  if (!(j * theta == theta * j)) throw std::invalid_argument("theta does not commute with J");
  return block_trace(j * odd_part(theta), 0, 0, theta.m);
}

std::vector<SuperMatrix> gl_basis(int m, int n) {
  std::vector<SuperMatrix> b;
  for (int r = 0; r < m + n; ++r)
    for (int c = 0; c < m + n; ++c) b.push_back(SuperMatrix::unit(m, n, r, c));
  return b;
}

std::vector<SuperMatrix> sl_basis(int m, int n) {
  std::vector<SuperMatrix> b;
  const int d = m + n;
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      if (r != c) b.push_back(SuperMatrix::unit(m, n, r, c));
  // diagonal: E_kk - (str-weight) E_00 relative to the first coordinate
  for (int k = 1; k < d; ++k) {
    SuperMatrix h = SuperMatrix::unit(m, n, k, k);
    const int sk = k < m ? 1 : -1;
    const int s0 = 0 < m ? 1 : -1;
    h.at(0, 0) = Rational(-sk * s0);
    b.push_back(h);
  }
  return b;
}

std::vector<SuperMatrix> q_basis(int m) {
  std::vector<SuperMatrix> b;
  for (int p = 0; p < 2; ++p)
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) {
        SuperMatrix x(m, m);
        x.at(r, p * m + c) = 1;
        x.at(m + r, (1 - p) * m + c) = 1;
        b.push_back(x);
      }
  return b;
}

std::vector<SuperMatrix> sq_basis(int m) {
  std::vector<SuperMatrix> b;
  for (const auto& x : q_basis(m)) {
    if (grading(x) == Grading::Even) {
      b.push_back(x);
      continue;
    }
    if (block_trace(x, m, 0, m) == 0) b.push_back(x);
  }
  for (int k = 1; k < m; ++k) {
    SuperMatrix x(m, m);
    x.at(k, m + k) = x.at(m + k, k) = 1;
    x.at(0, m) = x.at(m, 0) = -1;
    b.push_back(x);
  }
  return b;
}

std::vector<SuperMatrix> odd_only(const std::vector<SuperMatrix>& basis) {
  std::vector<SuperMatrix> out;
  for (const auto& x : basis)
    if (grading(x) == Grading::Odd) out.push_back(x);
  return out;
}

int MatrixSpace::parity(uint32_t coord) const {
  const int d = m_ + n_;
  return par(m_, static_cast<int>(coord) / d, static_cast<int>(coord) % d);
}

SparseVec MatrixSpace::flatten(const SuperMatrix& x) const {
  SparseVec v;
  for (size_t i = 0; i < x.a.size(); ++i)
    if (x.a[i] != 0) v.push_back({static_cast<uint32_t>(i), x.a[i]});
  return v;
}

SuperMatrix MatrixSpace::unflatten(const SparseVec& v) const {
  SuperMatrix x(m_, n_);
  for (const auto& t : v) x.a.at(t.idx) = t.c;
  return x;
}

SparseVec MatrixSpace::bracket(const SparseVec& x, const SparseVec& y) const {
  return flatten(superbracket(unflatten(x), unflatten(y)));
}

const char* super_family_name(SuperFamily f) { return f == SuperFamily::SL ? "sl(m|m)" : "sq(m)"; }

OddGeneration odd_generates(SuperFamily f, int m, const ClosureOptions& opt) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  OddGeneration g;
  g.family = f;
  g.m = m;
  const MatrixSpace sp(m, m);
  const auto basis = f == SuperFamily::SL ? sl_basis(m, m) : sq_basis(m);
  g.expected_dim = f == SuperFamily::SL ? static_cast<size_t>(4 * m * m - 1) : static_cast<size_t>(2 * m * m - 1);
  if (basis.size() != g.expected_dim) throw std::logic_error("basis size differs from the dimension formula");
  std::vector<SparseVec> seeds;
  for (const auto& x : odd_only(basis)) seeds.push_back(sp.flatten(x));
  g.closure_dim = lie_closure(sp, seeds, opt).basis.rank();
  return g;
}

}  // namespace sw
