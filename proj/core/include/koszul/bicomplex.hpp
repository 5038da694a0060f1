#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "koszul/cells.hpp"

namespace koszul {

/// Sign rule for the spliced maps.
///  Derived: nu^phi in row L_q or U_q carries (-1)^{q(l+1)}; nu_psi in the
///  column of D_a(H) carries (-1)^{a(m+1)}, in the column of S_i(H*)
///  (-1)^{lm+1+i(m+1)}.
///  Stated: nu^phi in row q carries (-1)^{ql}, nu_psi in column p (counted
///  from the anchor) carries (-1)^{pm}.
///  Plain: no signs at all.
/// Only Derived anticommutes in general; the others exist so tests can
/// show that.
enum class SignRule { Derived, Stated, Plain };

/// One cell of the bicomplex grid.
struct BiCell {
  CellShape shape;
  int rank = 0;
  std::vector<int> twists;
  std::string label;
};

/// Finite window of the Koszul bicomplex K(t) for H -phi-> G -psi-> F.
///
/// Rows: row q >= 0 is D_phi(t-q) (x) S_q(F); row -1-j is
/// D_phi(t+m+j) (x) S_j(F)*. Vertical maps go from row r to row r+1, so
/// nu_psi runs from row -1 to row 0.
/// Columns: column c <= t holds D_{t-c}(H), column c > t holds
/// S_{c-t-1}(H*); horizontal maps go from c to c+1 and nu^phi from t to
/// t+1. Every square anticommutes; this is checked at construction.
class Bicomplex {
 public:
  /// Rows -upper .. lower-1 are materialized. Throws DomainError when
  /// psi * phi != 0 and CertificateFailure when a square fails.
  Bicomplex(RingPtr ring, PolyMatrix phi, PolyMatrix psi, int t, int upper, int lower,
            SignRule rule = SignRule::Derived);

  const CellEngine& engine() const { return eng_; }
  int t() const { return t_; }
  int row_min() const { return -upper_; }
  int row_max() const { return lower_ - 1; }
  /// Column of C^{0,0} (and B^{0,0}): 0, t+1 or 1-l.
  int anchor() const;
  /// Columns where a row can be nonzero.
  std::pair<int, int> column_range(int row) const;

  /// Shape at (col,row); rank 0 when the cell vanishes.
  CellShape shape(int col, int row) const;
  const BiCell& cell(int col, int row) const;
  /// (col,row) -> (col+1,row), signed.
  const PolyMatrix& horizontal(int col, int row) const;
  /// (col,row) -> (col,row+1), signed.
  const PolyMatrix& vertical(int col, int row) const;

  int squares_checked() const { return squares_; }

 private:
  bool in_window(int row) const { return row >= -upper_ && row < lower_; }
  int sign_nu_phi(int row) const;
  int sign_nu_psi(int col) const;

  CellEngine eng_;
  int t_, upper_, lower_;
  SignRule rule_;
  int squares_ = 0;
  mutable std::map<std::pair<int, int>, BiCell> cells_;
  mutable std::map<std::pair<int, int>, PolyMatrix> hor_, ver_;
};

/// Throws DomainError naming the first nonzero entry of psi * phi.
void require_composable(const PolyMatrix& phi, const PolyMatrix& psi);

}  // namespace koszul
