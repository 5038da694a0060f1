#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "koszul/complex.hpp"
#include "koszul/groebner.hpp"
#include "koszul/matrix.hpp"

namespace koszul {

/// Subquotient (im gens + im rels) / im rels of a free module R^r, with
/// optional generator degrees (twists) of the ambient basis. A cokernel is
/// the case gens = identity. Groebner bases are computed once per value
/// and shared between copies.
class PresentedModule {
 public:
  static PresentedModule cokernel(RingPtr ring, PolyMatrix rels, std::vector<int> twists = {});
  static PresentedModule free(RingPtr ring, int rank, std::vector<int> twists = {});
  static PresentedModule subquotient(RingPtr ring, PolyMatrix gens, PolyMatrix rels, std::vector<int> twists = {});

  const RingPtr& ring() const { return ring_; }
  int ambient_rank() const { return rank_; }
  const PolyMatrix& gens() const { return gens_; }
  const PolyMatrix& rels() const { return rels_; }
  const std::vector<int>& twists() const { return twists_; }
  bool graded() const { return rank_ == 0 || !twists_.empty(); }
  bool is_cokernel() const { return plain_; }

  bool is_zero() const;
  /// Whether an ambient column lies in the relation submodule.
  bool in_relations(const std::vector<Poly>& column) const;
  /// Whether an ambient column lies in im gens + im rels.
  bool in_submodule(const std::vector<Poly>& column) const;

  /// Degrees of the generator columns (zero columns dropped). Throws
  /// UngradedError for missing twists or inhomogeneous columns.
  std::vector<int> generator_degrees() const;
  /// dim_Q of the graded pieces in degrees lo..hi.
  std::vector<long> hilbert_values(int lo, int hi) const;

  /// Equivalent module written as a cokernel (costs a syzygy computation).
  PresentedModule as_cokernel() const;

  const std::vector<ModVec>& rel_gb() const;
  const std::vector<ModVec>& sub_gb() const;
  const ModuleOrder& order() const { return ord_; }

 private:
  PresentedModule(RingPtr ring, int rank, PolyMatrix gens, PolyMatrix rels, std::vector<int> twists, bool plain);
  void check_degrees(const PolyMatrix& m, const char* what) const;

  struct Cache;
  RingPtr ring_;
  int rank_;
  PolyMatrix gens_, rels_;
  std::vector<int> twists_;
  bool plain_;
  ModuleOrder ord_;
  std::shared_ptr<Cache> cache_;
};

/// Generators of the kernel of A as columns (source rank x k).
PolyMatrix syzygies(const PolyMatrix& a, const RingPtr& ring);

/// A matrix z with a * z = b, or nothing when some column of b is not in
/// the image of a.
std::optional<PolyMatrix> lift(const PolyMatrix& a, const PolyMatrix& b, const RingPtr& ring);

/// Hilbert function from the first nonzero degree on, D+1 values.
struct HilbertProfile {
  bool zero = true;
  int first_degree = 0;
  std::vector<long> values;
};
HilbertProfile hilbert_profile(const PresentedModule& m, int D = 8);
/// Both zero, or equal profiles after aligning the first nonzero degree.
bool hf_equal(const PresentedModule& a, const PresentedModule& b, int D = 8);

/// Homomorphism induced by a matrix on the ambient free modules. The
/// constructor certifies that gens land in the target submodule and rels
/// in the target relations (CertificateFailure otherwise).
class ModuleMap {
 public:
  ModuleMap(PresentedModule source, PresentedModule target, PolyMatrix matrix);
  const PresentedModule& source() const { return src_; }
  const PresentedModule& target() const { return tgt_; }
  const PolyMatrix& matrix() const { return a_; }

 private:
  PresentedModule src_, tgt_;
  PolyMatrix a_;
};

PresentedModule kernel(const ModuleMap& f);
PresentedModule image(const ModuleMap& f);
PresentedModule cokernel(const ModuleMap& f);

struct MapPredicates {
  bool injective = false;
  bool surjective = false;
  bool iso = false;
};
MapPredicates map_predicates(const ModuleMap& f);

/// Complex of presented modules; maps[i] : mods[i] -> mods[i+1]. mods[0]
/// sits at position `start`.
struct ModuleComplex {
  std::vector<PresentedModule> mods;
  std::vector<ModuleMap> maps;
  int start = 0;

  int length() const { return static_cast<int>(mods.size()); }
  /// Throws CertificateFailure when some composite is not zero.
  void certify() const;
  /// Homology at list index i.
  PresentedModule homology_at(int i) const;
  /// Homology at a position; outside the stored range this is the zero
  /// module over `ring`.
  PresentedModule homology_at_position(int pos, const RingPtr& ring) const;
};

ModuleComplex as_module_complex(const FreeComplex& c);

/// S_p(Coker psi) for psi : G -> F (m x n): p >= 1 gives
/// Coker(S_{p-1}F (x) G -> S_p F); p = 0 gives R/I_psi; p = -1 gives the
/// exterior power of Coker psi^T of degree n-m+1. f_deg and g_deg are the
/// basis degrees (empty: inferred when the entries allow it).
PresentedModule sym_power_cokernel(const RingPtr& ring, const PolyMatrix& psi, int p, std::vector<int> f_deg = {},
                                   std::vector<int> g_deg = {});
/// Exterior power of M = Coker(chi : F -> G) (chi is n x m), presented as
/// Coker(ext^{p-1} G (x) F -> ext^p G). g_deg as above.
PresentedModule ext_power_cokernel(const RingPtr& ring, const PolyMatrix& chi, int p, std::vector<int> g_deg = {},
                                   std::vector<int> f_deg = {});
/// Free module of the given twists tensored with m (block diagonal).
PresentedModule tensor_free(const std::vector<int>& free_twists, const PresentedModule& m);

}  // namespace koszul
