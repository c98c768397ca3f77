#pragma once

#include <string>
#include <vector>

#include "superweyl/closure.hpp"
#include "superweyl/galg.hpp"
#include "superweyl/sparse.hpp"

namespace sw {

// (m+n) x (m+n) rational matrix; rows/cols [0, m) even, [m, m+n) odd.
struct SuperMatrix {
  int m = 0;
  int n = 0;
  std::vector<Rational> a;  // row-major

  SuperMatrix() = default;
  SuperMatrix(int m_, int n_) : m(m_), n(n_), a(static_cast<size_t>(m_ + n_) * (m_ + n_)) {}
  int size() const { return m + n; }
  Rational& at(int r, int c) { return a[static_cast<size_t>(r) * size() + c]; }
  const Rational& at(int r, int c) const { return a[static_cast<size_t>(r) * size() + c]; }
  bool operator==(const SuperMatrix& o) const { return m == o.m && n == o.n && a == o.a; }

  static SuperMatrix unit(int m, int n, int r, int c);
  static SuperMatrix identity(int m, int n);
  // [[0, I], [I, 0]] for m = n
  static SuperMatrix standard_j(int m);
};

Grading grading(const SuperMatrix& x);
SuperMatrix operator+(const SuperMatrix& x, const SuperMatrix& y);
SuperMatrix operator-(const SuperMatrix& x, const SuperMatrix& y);
SuperMatrix operator*(const SuperMatrix& x, const SuperMatrix& y);
SuperMatrix operator*(const Rational& s, const SuperMatrix& x);
SuperMatrix even_part(const SuperMatrix& x);
SuperMatrix odd_part(const SuperMatrix& x);
// Superbracket, extended bilinearly over homogeneous parts.
SuperMatrix superbracket(const SuperMatrix& x, const SuperMatrix& y);

Rational supertrace(const SuperMatrix& x);  // tr A - tr D
bool in_q(const SuperMatrix& x);            // [[A, B], [B, A]]
bool in_sl(const SuperMatrix& x);
bool in_sq(const SuperMatrix& x);           // in q and tr B = 0

// tr((J o theta_1)|_{V_0}); throws std::invalid_argument unless J is an odd
// involution and theta commutes with J.
Rational odd_trace(const SuperMatrix& theta, const SuperMatrix& j);

std::vector<SuperMatrix> gl_basis(int m, int n);
std::vector<SuperMatrix> sl_basis(int m, int n);
std::vector<SuperMatrix> q_basis(int m);
std::vector<SuperMatrix> sq_basis(int m);
std::vector<SuperMatrix> odd_only(const std::vector<SuperMatrix>& basis);

// Flat coordinates of gl(m|n) as a bracket space for the closure engine.
class MatrixSpace : public BracketSpace {
 public:
  MatrixSpace(int m, int n) : m_(m), n_(n) {}
  uint32_t dim() const override { return static_cast<uint32_t>((m_ + n_) * (m_ + n_)); }
  int parity(uint32_t coord) const override;
  SparseVec bracket(const SparseVec& x, const SparseVec& y) const override;
  SparseVec flatten(const SuperMatrix& x) const;
  SuperMatrix unflatten(const SparseVec& v) const;

 private:
  int m_, n_;
};

enum class SuperFamily { SL, SQ };
struct OddGeneration {
  SuperFamily family;
  int m = 0;
  size_t closure_dim = 0;
  size_t expected_dim = 0;  // 4m^2 - 1 resp. 2m^2 - 1
  bool equal() const { return closure_dim == expected_dim; }
};
// Closure of an odd-part basis of sl(m|m) resp. sq(m).
OddGeneration odd_generates(SuperFamily f, int m, const ClosureOptions& opt = {});
const char* super_family_name(SuperFamily f);

}  // namespace sw
