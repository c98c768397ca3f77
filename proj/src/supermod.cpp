#include "superweyl/supermod.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace sw {

std::shared_ptr<const RepRealization> realization(const Bipartition& shape) {
  static std::mutex mu;
  static std::map<Bipartition, std::shared_ptr<const RepRealization>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(shape);
    if (it != cache.end()) return it->second;
  }
  auto r = std::make_shared<const RepRealization>(shape);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(shape, std::move(r)).first->second;
}

CMat ModulePiece::matrix_of(const SignedPerm& g) const {
  return embed.adjoint() * rep->matrix_of(g).cast<cplx>() * embed;
}

CMat SuperModuleSpec::matrix_of(const SignedPerm& g) const {
  const int d = dim();
  CMat a = CMat::Zero(d, d);
  int off = 0;
  for (const auto& p : pieces) {
    a.block(off, off, p.dim(), p.dim()) = p.matrix_of(g);
    off += p.dim();
  }
  return change.adjoint() * a * change;
}

std::vector<SignedPerm> coxeter_word_generators(const GroupSpec& s) {
  std::vector<SignedPerm> g;
  for (int i = 1; i < s.n; ++i) g.push_back(SignedPerm::s(s.n, i));
  if (s.kind == Kind::B) g.push_back(SignedPerm::t(s.n, s.n));
  if (s.kind == Kind::D) g.push_back(SignedPerm::s_tilde(s.n));
  return g;
}

namespace {

ModulePiece whole(const Bipartition& b) {
  auto r = realization(b);
  return {r, CMat::Identity(r->dim(), r->dim())};
}

// Eigenspace of phi_{eps'} on S^{(l,l)}: sign +1 or -1.
CMat signed_half(const Partition& l, int sign) {
  const EigenSplit s = split_eigenspaces(associator({l, l}, Twist::EpsPrime).matrix);
  return sign > 0 ? s.plus : s.minus;
}

// Type Q: V + phi(V), homogeneous basis (u_i +- phi(u_i)) / sqrt 2.
SuperModuleSpec make_q(const IrrFamily& f, ModulePiece v, const Bipartition& target, const CMat& phi_full) {
  SuperModuleSpec m;
  m.family = f;
  m.type = SuperType::Q;
  ModulePiece w{realization(target), phi_full * v.embed};
  const int k = v.dim();
  m.dim0 = m.dim1 = k;
  m.pieces = {std::move(v), std::move(w)};
  const double h = 1.0 / std::sqrt(2.0);
  const CMat id = CMat::Identity(k, k);
  m.change = CMat(2 * k, 2 * k);
  m.change << h * id, h * id, h * id, -h * id;
  m.J = CMat::Zero(2 * k, 2 * k);
  m.J.topRightCorner(k, k) = id;
  m.J.bottomLeftCorner(k, k) = id;
  return m;
}

// Type M: V graded by the eigenspaces of the involution phi_v (in V's coordinates).
SuperModuleSpec make_m(const IrrFamily& f, ModulePiece v, const CMat& phi_v) {
  SuperModuleSpec m;
  m.family = f;
  m.type = SuperType::M;
  const EigenSplit s = split_eigenspaces(phi_v);
  m.dim0 = static_cast<int>(s.plus.cols());
  m.dim1 = static_cast<int>(s.minus.cols());
  m.change = CMat(v.dim(), v.dim());
  m.change << s.plus, s.minus;
  m.pieces = {std::move(v)};
  return m;
}

// phi restricted to the subspace spanned by the columns of e, which it must preserve.
CMat restrict_to(const CMat& phi, const CMat& e) {
  const CMat img = phi * e;
  const CMat r = e.adjoint() * img;
  if ((e * r - img).cwiseAbs().maxCoeff() > 1e-8) throw std::logic_error("subspace not preserved by associator");
  return r;
}

}  // namespace

SuperModuleSpec assemble_supermodule(const IrrFamily& f) {
  const Bipartition& b = f.label;
  const Partition& l = b.first;
  SuperModuleSpec m;
  switch (f.family) {
    case FamilyKind::A_E:
    case FamilyKind::B_E:
    case FamilyKind::D_E_distinct: {
      const Twist w = f.family == FamilyKind::B_E ? Twist::Eps : Twist::EpsDoublePrime;
      const Associator a = associator(b, w);
      m = make_q(f, whole(b), a.target, a.matrix);
      break;
    }
    case FamilyKind::A_F:
      m = make_m(f, whole(b), associator(b, Twist::EpsDoublePrime).matrix);
      break;
    case FamilyKind::B_F:
      m = make_m(f, whole(b), associator(b, Twist::Eps).matrix);
      break;
    case FamilyKind::D_F_distinct: {
      const Twist w = b.second == conjugate(l) ? Twist::Eps : Twist::EpsDoublePrime;
      m = make_m(f, whole(b), associator(b, w).matrix);
      break;
    }
    case FamilyKind::D_E_equal: {
      const Associator a = associator(b, Twist::EpsDoublePrime);
      m = make_q(f, {realization(b), signed_half(l, f.sign)}, a.target, a.matrix);
      break;
    }
    case FamilyKind::D_F_equal_M: {
      const CMat e = signed_half(l, f.sign);
      const CMat phi = restrict_to(associator(b, Twist::EpsDoublePrime).matrix, e);
      m = make_m(f, {realization(b), e}, phi);
      break;
    }
    case FamilyKind::D_F_equal_Q: {
      const Associator a = associator(b, Twist::EpsDoublePrime);
      m = make_q(f, {realization(b), signed_half(l, +1)}, a.target, a.matrix);
      break;
    }
  }
  if (static_cast<uint64_t>(m.dim()) != f.super_dim)
    throw std::logic_error("assembled dimension differs from super dimension for " + f.name());
  const GroupSpec spec{f.kind, f.n};
  m.generators = coxeter_word_generators(spec);
  for (const auto& g : m.generators) m.generator_matrices.push_back(m.matrix_of(g));
  const SuperModuleCheck c = check_supermodule(m);
  if (!c.ok) throw std::logic_error("block structure violated for " + f.name() + ": " + c.failures.front());
  return m;
}

SuperModuleSpec parity_shift(const SuperModuleSpec& m) {
  SuperModuleSpec s = m;
  const int d0 = m.dim0, d1 = m.dim1, d = m.dim();
  Eigen::PermutationMatrix<Eigen::Dynamic> p(d);
  for (int i = 0; i < d1; ++i) p.indices()[d0 + i] = i;  // odd block first
  for (int i = 0; i < d0; ++i) p.indices()[i] = d1 + i;
  s.dim0 = d1;
  s.dim1 = d0;
  s.change = m.change * p.transpose();
  if (m.type == SuperType::Q) s.J = p * m.J * p.transpose();
  for (auto& g : s.generator_matrices) g = p * g * p.transpose();
  return s;
}

SuperModuleCheck check_supermodule(const SuperModuleSpec& m, double tol) {
  SuperModuleCheck c;
  const int d0 = m.dim0, d1 = m.dim1, d = m.dim();
  const Kind k = m.family.kind;
  auto note = [&](double err, double& slot, const std::string& what) {
    slot = std::max(slot, err);
    if (err > tol) {
      c.ok = false;
      c.failures.push_back(what);
    }
  };
  const CMat id = CMat::Identity(d, d);
  for (size_t i = 0; i < m.generators.size(); ++i) {
    const CMat& x = m.generator_matrices[i];
    const bool odd = superdegree(m.generators[i], k) == 1;
    double off = 0;
    if (odd) {
      if (d0) off = std::max(off, x.topLeftCorner(d0, d0).cwiseAbs().maxCoeff());
      if (d1) off = std::max(off, x.bottomRightCorner(d1, d1).cwiseAbs().maxCoeff());
    } else if (d0 && d1) {
      off = std::max(x.topRightCorner(d0, d1).cwiseAbs().maxCoeff(), x.bottomLeftCorner(d1, d0).cwiseAbs().maxCoeff());
    }
    note(off, c.block_error, "generator " + m.generators[i].to_string() + " breaks the grading");
    note((x * x.adjoint() - id).cwiseAbs().maxCoeff(), c.unitary_error, "generator not unitary");
    if (m.type == SuperType::Q)
      note((m.J * x - x * m.J).cwiseAbs().maxCoeff(), c.j_error, "J does not commute with the action");
  }
  if (m.type == SuperType::Q) {
    note((m.J * m.J - id).cwiseAbs().maxCoeff(), c.j_error, "J is not an involution");
    double even_part = 0;
    if (d0) even_part = std::max(even_part, m.J.topLeftCorner(d0, d0).cwiseAbs().maxCoeff());
    if (d1) even_part = std::max(even_part, m.J.bottomRightCorner(d1, d1).cwiseAbs().maxCoeff());
    note(even_part, c.j_error, "J is not odd");
  }
  return c;
}

int even_hom_dim(const SuperModuleSpec& a, const SuperModuleSpec& b, double tol) {
  if (a.family.kind != b.family.kind || a.family.n != b.family.n) return 0;
  const int da = a.dim(), db = b.dim();
  // unknown X: db x da, block-diagonal; column-major vec index = col * db + row
  std::vector<int> cols;
  for (int c = 0; c < da; ++c)
    for (int r = 0; r < db; ++r)
      if ((c < a.dim0) == (r < b.dim0)) cols.push_back(c * db + r);
  if (cols.empty()) return 0;
  const int ng = static_cast<int>(a.generators.size());
  CMat sys = CMat::Zero(static_cast<Eigen::Index>(ng) * db * da, static_cast<Eigen::Index>(cols.size()));
  for (int g = 0; g < ng; ++g) {
    const CMat& A = a.generator_matrices[g];
    const CMat& B = b.generator_matrices[g];
    // vec(B X - X A): column (c, r) of X contributes B(:, r) at column c, and -A(c, :) across columns
    for (size_t k = 0; k < cols.size(); ++k) {
      const int c = cols[k] / db, r = cols[k] % db;
      const Eigen::Index base = static_cast<Eigen::Index>(g) * db * da;
      for (int i = 0; i < db; ++i) sys(base + c * db + i, k) += B(i, r);
      for (int j = 0; j < da; ++j) sys(base + j * db + r, k) -= A(c, j);
    }
  }
  Eigen::JacobiSVD<CMat> svd(sys);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) rank += svd.singularValues()(i) > tol;
  return static_cast<int>(cols.size()) - rank;
}

bool homogeneously_isomorphic(const SuperModuleSpec& a, const SuperModuleSpec& b, double tol) {
  if (a.dim() != b.dim()) return false;
  return even_hom_dim(a, b, tol) > 0 || even_hom_dim(a, parity_shift(b), tol) > 0;
}

}  // namespace sw
