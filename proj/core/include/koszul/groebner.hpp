#pragma once

#include <vector>

#include "koszul/matrix.hpp"
#include "koszul/poly.hpp"

namespace koszul {

/// One term c * m * e_comp of a vector in a free module R^rank.
struct ModTerm {
  Monomial mono;
  int comp = 0;
  Rational coeff;
};

/// Terms sorted strictly decreasing in a ModuleOrder, no zero coefficients.
using ModVec = std::vector<ModTerm>;

/// Position-over-term extension of a monomial order: a lower component
/// index always wins, ties go to the monomial order. Consequently every
/// term in components [0, cutoff) dominates every term in [cutoff, rank),
/// which is what syzygy extraction relies on.
class ModuleOrder {
 public:
  explicit ModuleOrder(MonomialOrder mono) : mono_(std::move(mono)) {}

  const MonomialOrder& mono() const { return mono_; }
  int compare(const Monomial& a, int ca, const Monomial& b, int cb) const {
    if (ca != cb) return ca < cb ? 1 : -1;
    return mono_.compare(a, b);
  }
  int compare(const ModTerm& a, const ModTerm& b) const { return compare(a.mono, a.comp, b.mono, b.comp); }

 private:
  MonomialOrder mono_;
};

struct GBOptions {
  /// Degree shift per component, used for the sugar of each term.
  std::vector<int> weights;
  /// When >= 0, components >= cutoff form an elimination block: elements
  /// whose leading term falls in it are set aside instead of processed.
  int elim_cutoff = -1;
};

struct GBResult {
  /// Reduced, monic, sorted decreasing by leading term. In elimination
  /// mode these are the elements led by the upper block and are not
  /// interreduced.
  std::vector<ModVec> basis;
  /// Elimination mode only: vectors supported entirely in the lower block.
  std::vector<ModVec> eliminated;
};

GBResult groebner(std::vector<ModVec> gens, const ModuleOrder& ord, const GBOptions& opt = {});

/// Full normal form modulo a Groebner basis (any order of elements).
ModVec normal_form(ModVec f, const std::vector<ModVec>& gb, const ModuleOrder& ord);

ModVec sorted_vec(std::vector<ModTerm> terms, const ModuleOrder& ord);
ModVec column_vec(const PolyMatrix& m, int col, const ModuleOrder& ord, int comp_offset = 0);
std::vector<ModVec> columns_of(const PolyMatrix& m, const ModuleOrder& ord);
/// Back to a dense column of the given rank.
std::vector<Poly> vec_to_column(const ModVec& v, const RingPtr& ring, int rank, int comp_offset = 0);
ModVec poly_vec(const Poly& p);
Poly vec_poly(const ModVec& v, const RingPtr& ring);

}  // namespace koszul
