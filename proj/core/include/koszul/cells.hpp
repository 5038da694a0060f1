#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "koszul/matrix.hpp"
#include "koszul/multilinear.hpp"

namespace koszul {

enum class HKind { Divided, SymDual };  // D_a(H) or S_a(H*)
enum class FKind { Sym, SymDual };      // S_c(F) or S_c(F)*

/// Tensor shape H-part (x) exterior^b G (x) F-part.
struct CellShape {
  HKind h = HKind::Divided;
  int a = 0;
  int b = 0;
  FKind f = FKind::Sym;
  int c = 0;
  friend bool operator==(const CellShape&, const CellShape&) = default;
};

/// Basis degrees making phi (n x l) and psi (m x n) homogeneous of the
/// natural degrees: deg psi_ij = deg e_j - deg f_i, deg phi_jk = deg h_k -
/// deg e_j. Unconstrained basis elements start at 0.
struct DegreeData {
  bool graded = false;
  std::vector<int> f, g, h;
};

DegreeData infer_degrees(const PolyMatrix& phi, const PolyMatrix& psi);

/// Explicit matrices for the maps d_phi, nu^phi, d_psi, nu_psi between
/// cells H-part (x) exterior G (x) F-part. Bases: H-part multisets outer,
/// G subsets middle, F-part multisets inner, each lexicographic.
///
/// Either H or F may have rank zero: that is how the standalone complexes
/// C_psi(t) (l = 0) and D_phi(t) (m = 0) are produced.
class CellEngine {
 public:
  CellEngine(RingPtr ring, PolyMatrix phi, PolyMatrix psi, DegreeData deg);
  /// Infers the degree data.
  CellEngine(RingPtr ring, PolyMatrix phi, PolyMatrix psi);

  int n() const { return n_; }
  int l() const { return l_; }
  int m() const { return m_; }
  const RingPtr& ring() const { return ring_; }
  const DegreeData& degrees() const { return deg_; }
  const PolyMatrix& phi() const { return phi_; }
  const PolyMatrix& psi() const { return psi_; }

  int rank(const CellShape& s) const;
  /// Generator degrees; empty when ungraded.
  std::vector<int> twists(const CellShape& s) const;
  std::string label(const CellShape& s) const;
  /// Basis element names such as "d[1;0]*e[1,2]*s[2]".
  std::vector<std::string> basis_labels(const CellShape& s) const;

  /// d_phi, or nu^phi when src is D_0(H) and tgt is S_0(H*). Unsigned.
  PolyMatrix horizontal(const CellShape& src, const CellShape& tgt) const;
  /// d_psi, or nu_psi when src carries S_0(F)* and tgt S_0(F). Unsigned.
  PolyMatrix vertical(const CellShape& src, const CellShape& tgt) const;

  const Poly& det_psi(const ml::Subset& t) const { return det_psi_.at(t); }
  const Poly& det_phi(const ml::Subset& u) const { return det_phi_.at(u); }

 private:
  struct Enum {
    std::vector<std::vector<int>> list;
    std::map<std::vector<int>, int> index;
  };
  const Enum& multiset_enum(int n, int p) const;
  const Enum& subset_enum(int n, int p) const;
  struct Basis {
    const Enum* h;
    const Enum* g;
    const Enum* f;
    int index(int ih, int ig, int iff) const {
      return (ih * static_cast<int>(g->list.size()) + ig) * static_cast<int>(f->list.size()) + iff;
    }
  };
  Basis basis(const CellShape& s) const;

  RingPtr ring_;
  PolyMatrix phi_, psi_;
  int n_, l_, m_;
  DegreeData deg_;
  std::map<ml::Subset, Poly> det_psi_, det_phi_;
  mutable std::map<std::pair<int, int>, Enum> multisets_, subsets_;
};

}  // namespace koszul
