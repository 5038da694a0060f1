#pragma once

#include <optional>
#include <string>
#include <vector>

#include "koszul/cells.hpp"
#include "koszul/matrix.hpp"

namespace koszul {

struct Component {
  CellShape shape;
  bool dual = false;
  std::string label;
  int rank = 0;
  /// Generator degrees; empty when the complex is ungraded.
  std::vector<int> twists;
};

/// Finite complex of free modules, position 0 at the leftmost nonzero
/// module. maps[i] goes from comps[i] to comps[i+1].
struct FreeComplex {
  RingPtr ring;
  std::string name;
  bool graded = false;
  std::vector<Component> comps;
  std::vector<PolyMatrix> maps;

  int length() const { return static_cast<int>(comps.size()); }
  /// First i with maps[i+1] * maps[i] != 0.
  std::optional<int> first_nonzero_composite() const;
  /// Throws CertificateFailure when d^2 != 0.
  void certify() const;
};

/// C_psi(t) for psi : G -> F given as an m x n matrix.
FreeComplex build_c_psi(const RingPtr& ring, const PolyMatrix& psi, int t);
/// D_phi(t) for phi : H -> G given as an n x l matrix.
FreeComplex build_d_phi(const RingPtr& ring, const PolyMatrix& phi, int t);
/// The Eagon-Northcott type complex C^t(psi); requires 0 <= t <= n - m.
FreeComplex build_en(const RingPtr& ring, const PolyMatrix& psi, int t);

/// Split exactness of a finite free complex: the expected ranks r_i read
/// off from the right end are consistent and every I_{r_i}(d_i) is the unit
/// ideal.
bool is_split_exact(const FreeComplex& c);

/// Reversed order, transposed maps, negated twists, dual labels.
FreeComplex dualize(const FreeComplex& c);

/// Per-position matrices between two complexes of equal length.
struct ComplexMorphism {
  FreeComplex source, target;
  std::vector<PolyMatrix> maps;
};

struct SquareReport {
  bool ok = true;
  /// Realised sign per square: +1 commutes, -1 anticommutes, 0 both sides
  /// vanish.
  std::vector<int> signs;
  std::optional<int> first_bad;
};

/// For each i, compares maps[i+1] * d_i with d'_i * maps[i].
SquareReport check_squares(const ComplexMorphism& f);
/// Every component map is square with determinant a nonzero constant.
bool is_isomorphism(const ComplexMorphism& f);

/// C_psi(t) -> C^t(psi) built from omega_p (x) 1 on the left half and the
/// identity on the right half.
ComplexMorphism identification_morphism(const RingPtr& ring, const PolyMatrix& psi, int t);
/// C_psi(t) -> (C_psi(n-m-t))* built from omega_b (x) 1 at every position.
ComplexMorphism duality_morphism(const RingPtr& ring, const PolyMatrix& psi, int t);
/// tau : D_{psi*}(t) -> (C_psi(t))*, a permutation matrix per position.
ComplexMorphism build_tau(const RingPtr& ring, const PolyMatrix& psi, int t);

}  // namespace koszul
