#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "superweyl/combin.hpp"
#include "superweyl/tabrep.hpp"

namespace sw {

// Shared, lazily built realization of S^{shape}; thread-safe.
std::shared_ptr<const RepRealization> realization(const Bipartition& shape);

// A subspace of a realization: columns of embed are orthonormal.
struct ModulePiece {
  std::shared_ptr<const RepRealization> rep;
  CMat embed;
  int dim() const { return static_cast<int>(embed.cols()); }
  CMat matrix_of(const SignedPerm& g) const;  // embed^H R(g) embed
};

// A simple supermodule in a homogeneous basis: coordinates [0, dim0) are even,
// [dim0, dim0 + dim1) odd.
struct SuperModuleSpec {
  IrrFamily family;
  SuperType type = SuperType::M;
  int dim0 = 0;
  int dim1 = 0;
  std::vector<ModulePiece> pieces;  // the module is their direct sum
  CMat change;                      // columns: homogeneous basis in direct-sum coordinates
  CMat J;                           // odd involution, type Q only
  std::vector<SignedPerm> generators;
  std::vector<CMat> generator_matrices;

  int dim() const { return dim0 + dim1; }
  CMat matrix_of(const SignedPerm& g) const;
};

// Coxeter generators of the group: s_1..s_{n-1}, then t_n (B) or s~_n (D).
std::vector<SignedPerm> coxeter_word_generators(const GroupSpec& s);

// Throws std::logic_error on a block-structure violation beyond tolerance.
SuperModuleSpec assemble_supermodule(const IrrFamily& f);

// The same module with even and odd parts exchanged.
SuperModuleSpec parity_shift(const SuperModuleSpec& m);

struct SuperModuleCheck {
  bool ok = true;
  double block_error = 0;    // off-pattern entries of generator matrices
  double unitary_error = 0;  // generator matrices unitary
  double j_error = 0;        // J^2 = 1 and J commutes with the action (type Q)
  std::vector<std::string> failures;
};
SuperModuleCheck check_supermodule(const SuperModuleSpec& m, double tol = kTol);

// Dimension of the space of even homomorphisms a -> b (commuting with every generator).
int even_hom_dim(const SuperModuleSpec& a, const SuperModuleSpec& b, double tol = 1e-7);
// Even isomorphism to b or to its parity shift.
bool homogeneously_isomorphic(const SuperModuleSpec& a, const SuperModuleSpec& b, double tol = 1e-7);

}  // namespace sw
