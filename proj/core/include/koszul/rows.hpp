#pragma once

#include <vector>

#include "koszul/bicomplex.hpp"
#include "koszul/module.hpp"

namespace koszul {

/// N(t): N^p = Ker(C^{p,0} -> C^{p,1}) with the maps induced by d_phi.
/// Position p is counted from the anchor column. Needs rows 0 and 1.
ModuleComplex extract_n(const Bicomplex& k);

/// M(t): M^p = Coker(B^{p,-1} -> B^{p,0}) with the induced maps. Positions
/// start where row -1 does, which may be left of the anchor. Needs rows -2
/// and -1.
ModuleComplex extract_m(const Bicomplex& k);

/// The map M(t) -> N(t) induced by the vertical map from row -1 to row 0,
/// one ModuleMap per position of M. Positions outside N map to the zero
/// module.
std::vector<ModuleMap> nu_morphism(const Bicomplex& k, const ModuleComplex& m, const ModuleComplex& n);

/// Maps between two module complexes by position: maps[i] starts at
/// position source.start + i and lands in the target module at the same
/// position (the zero module where the target has none).
struct ModuleMorphism {
  ModuleComplex source, target;
  std::vector<ModuleMap> maps;
};

/// The isomorphism M(t) -> C_lambda-bar(rho - t): (identity on the H-part)
/// (x) omega on the exterior part, with signs chosen so that every square
/// commutes. Squares and both directions of every component map are
/// certified (CertificateFailure otherwise).
ModuleMorphism identification_m(const RingPtr& ring, const PolyMatrix& chi, const PolyMatrix& lambda, int t);

/// mu : C_lambda-bar(rho - t) -> N(t), the map induced by nu_psi composed
/// with the inverse of identification_m. Signs are fixed so that squares
/// commute; every square is certified.
ModuleMorphism build_mu(const RingPtr& ring, const PolyMatrix& chi, const PolyMatrix& lambda, int t);

/// Hom(-, R) of a complex of cokernels; position p goes to -p.
ModuleComplex hom_dual(const ModuleComplex& c);

/// Homology of column anchor+p at row q >= 1 (zero for q = 0). Needs rows
/// q-1 .. q+1.
PresentedModule column_homology(const Bicomplex& k, int p, int q);

/// The complex C_lambda-bar(t) of modules exterior^b M (x) S(H-script)
/// with M = Coker chi, for chi : F -> G (n x m) and lambda : G -> H
/// (l x n), lambda * chi = 0. Positions follow the isomorphism with
/// M(rho - t), so they agree with extract_m on K(rho - t).
ModuleComplex build_c_barlambda(const RingPtr& ring, const PolyMatrix& chi, const PolyMatrix& lambda, int t);

}  // namespace koszul
