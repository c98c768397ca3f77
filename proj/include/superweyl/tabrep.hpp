#pragma once

#include <Eigen/Dense>

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "superweyl/combin.hpp"
#include "superweyl/wgroup.hpp"

namespace sw {

using RMat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;
using cplx = std::complex<double>;

constexpr double kTol = 1e-9;

std::complex<double> unit_value(UnitScalar u);

// Standard bitableau: positions of the entries 1..n.
struct StandardBitableau {
  Bipartition shape;
  std::vector<int> tab;  // 0 = first tableau (rho = +1), 1 = second (rho = -1)
  std::vector<int> row;
  std::vector<int> col;

  int n() const { return static_cast<int>(tab.size()); }
  int rho(int i) const { return tab[i - 1] == 0 ? 1 : -1; }
  int res(int i) const { return col[i - 1] - row[i - 1]; }
  // filling(t)[r] = entries of row r of tableau t
  std::vector<std::vector<int>> filling(int t) const;
  std::vector<int> order_key() const;  // tab(1..n), then both fillings row-major
  bool operator==(const StandardBitableau& o) const {
    return shape == o.shape && tab == o.tab && row == o.row && col == o.col;
  }
  std::string to_string() const;
};

StandardBitableau from_fillings(const Bipartition& shape, const std::vector<std::vector<int>>& first,
                                const std::vector<std::vector<int>>& second);
bool is_standard(const StandardBitableau& t);
std::vector<StandardBitableau> enumerate_bitableaux(const Bipartition& shape);
StandardBitableau row_major(const Bipartition& shape);  // R(lambda, mu)
StandardBitableau transpose(const StandardBitableau& t);  // T*
StandardBitableau swap_tableaux(const StandardBitableau& t);  // T natural
// Apply sigma to the entries (1-based images).
StandardBitableau permute_entries(const StandardBitableau& t, const std::vector<int>& sigma);
// sigma_T mapping R(shape) to T, as 1-based images.
std::vector<int> sigma_of(const StandardBitableau& t);
int inversions(const std::vector<int>& perm);
int length(const StandardBitableau& t);
std::vector<int> cycle_lengths(const std::vector<int>& perm);

// Orthogonal-form realization of S^{(lambda, mu)}.
class RepRealization {
 public:
  explicit RepRealization(Bipartition shape);

  const Bipartition& shape() const { return shape_; }
  int n() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<StandardBitableau>& basis() const { return basis_; }
  int index_of(const StandardBitableau& t) const;

  const RMat& s(int i) const { return s_.at(i - 1); }  // (i, i+1), 1 <= i < n
  const RMat& t(int i) const { return t_.at(i - 1); }  // 1 <= i <= n
  RMat matrix_of(const SignedPerm& g) const;

 private:
  Bipartition shape_;
  int n_;
  std::vector<StandardBitableau> basis_;
  std::map<std::vector<int>, int> index_;
  struct Entry {
    int row, col;
    double val;
  };
  std::vector<RMat> s_, t_;
  std::vector<std::vector<Entry>> s_sparse_;  // nonzeros of s_i
};

// Matrices of all elements of a group generated by Coxeter generators, by
// breadth-first products. out[k] is the matrix of g.element(k).
template <class Mat, class GenFn>
std::vector<Mat> all_element_matrices(const Group& g, GenFn gen_matrix);

struct RelationReport {
  bool ok = true;
  double max_error = 0;
  std::vector<std::string> failures;
};
// Coxeter presentation of B_n (and the D_n relations for s~_n), orthogonality.
RelationReport check_relations(const RepRealization& r, double tol = kTol);
// Traces constant on conjugacy classes of kind's group.
RelationReport check_class_traces(const RepRealization& r, Kind kind, double tol = kTol);

struct YjmTable {
  bool ok = true;
  double max_error = 0;
  // eigen[k][i-1]: diagonal entry of X_i on the k-th basis vector
  std::vector<std::vector<double>> eigen;
  double total_scalar = 0;  // X_n total acts as this scalar
};
YjmTable yjm_check(const RepRealization& r, double tol = kTol);

enum class Twist { EpsPrime, EpsDoublePrime, Eps };
const char* twist_name(Twist w);

struct Associator {
  Bipartition source;
  Bipartition target;
  Twist which;
  UnitScalar scalar;  // the factor eps'_{(l,m)}, eps''_{(l,m)} or eps_{(l,m)}
  CMat matrix;        // column T -> coefficient on target basis
};
UnitScalar eps_prime_scalar(const Bipartition& b);
UnitScalar eps_double_prime_scalar(const Bipartition& b);
UnitScalar eps_scalar(const Bipartition& b);
Bipartition twist_target(const Bipartition& b, Twist w);
Associator associator(const Bipartition& shape, Twist w);

// max over generators of |phi g - kappa(g) g phi|
double intertwining_error(const Associator& a, const RepRealization& src, const RepRealization& tgt);

struct EigenSplit {
  CMat plus;   // orthonormal columns
  CMat minus;
};
// Throws std::invalid_argument if phi^2 != id within tolerance.
EigenSplit split_eigenspaces(const CMat& phi, double tol = kTol);

std::string dump_matrix(const CMat& m);
std::string dump_matrix(const RMat& m);

// ---------------------------------------------------------------- template

template <class Mat, class GenFn>
std::vector<Mat> all_element_matrices(const Group& g, GenFn gen_matrix) {
  const auto gens = g.coxeter_generators();
  std::vector<Mat> gm;
  for (const auto& s : gens) gm.push_back(gen_matrix(s));
  const int d = static_cast<int>(gm.front().rows());
  std::vector<Mat> out(g.order());
  std::vector<uint8_t> seen(g.order(), 0);
  std::vector<uint32_t> queue{g.identity_index()};
  out[g.identity_index()] = Mat::Identity(d, d);
  seen[g.identity_index()] = 1;
  for (size_t q = 0; q < queue.size(); ++q) {
    const uint32_t x = queue[q];
    for (size_t k = 0; k < gens.size(); ++k) {
      const uint32_t y = g.index(compose(g.element(x), gens[k]));
      if (seen[y]) continue;
      seen[y] = 1;
      out[y] = out[x] * gm[k];
      queue.push_back(y);
    }
  }
  return out;
}

}  // namespace sw
