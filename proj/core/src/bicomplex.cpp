#include "koszul/bicomplex.hpp"

#include <algorithm>

#include "koszul/errors.hpp"

namespace koszul {

void require_composable(const PolyMatrix& phi, const PolyMatrix& psi) {
  if (psi.cols() != phi.rows()) throw DomainError("psi and phi are not composable");
  PolyMatrix prod = psi * phi;
  for (int i = 0; i < prod.rows(); ++i)
    for (int k = 0; k < prod.cols(); ++k)
      if (!prod(i, k).is_zero())
        throw DomainError("psi*phi != 0: entry (" + std::to_string(i + 1) + "," + std::to_string(k + 1) +
                          ") = " + prod(i, k).to_string());
}

namespace {
int parity_sign(long e) { return e % 2 == 0 ? 1 : -1; }
}  // namespace

Bicomplex::Bicomplex(RingPtr ring, PolyMatrix phi, PolyMatrix psi, int t, int upper, int lower, SignRule rule)
    : eng_((require_composable(phi, psi), CellEngine(std::move(ring), std::move(phi), std::move(psi)))),
      t_(t),
      upper_(std::max(0, upper)),
      lower_(std::max(0, lower)),
      rule_(rule) {
  // build every map in the window and certify
  for (int row = row_min(); row <= row_max(); ++row) {
    auto [lo, hi] = column_range(row);
    for (int c = lo - 1; c <= hi; ++c) {
      const auto& h = horizontal(c, row);
      if (c + 1 <= hi && !(horizontal(c + 1, row) * h).is_zero())
        throw CertificateFailure("row " + std::to_string(row) + ": d^2 != 0 at column " + std::to_string(c));
      if (row < row_max()) {
        const auto& v = vertical(c, row);
        if (row + 1 < row_max() && !(vertical(c, row + 1) * v).is_zero())
          throw CertificateFailure("column " + std::to_string(c) + ": d^2 != 0 at row " + std::to_string(row));
        PolyMatrix a = vertical(c + 1, row) * h;
        PolyMatrix b = horizontal(c, row + 1) * v;
        if (!(a + b).is_zero())
          throw CertificateFailure("square at column " + std::to_string(c) + ", row " + std::to_string(row) +
                                   " does not anticommute");
        ++squares_;
      }
    }
  }
}

int Bicomplex::anchor() const {
  if (t_ >= 0) return 0;
  if (t_ >= -eng_.l()) return t_ + 1;
  return 1 - eng_.l();
}

CellShape Bicomplex::shape(int col, int row) const {
  CellShape s;
  int extra;
  if (col <= t_) {
    s.h = HKind::Divided;
    s.a = t_ - col;
    extra = 0;
  } else {
    s.h = HKind::SymDual;
    s.a = col - t_ - 1;
    extra = eng_.l() - 1;
  }
  if (row >= 0) {
    s.f = FKind::Sym;
    s.c = row;
    s.b = col - row + extra;
  } else {
    int j = -1 - row;
    s.f = FKind::SymDual;
    s.c = j;
    s.b = col + eng_.m() + j + extra;
  }
  return s;
}

std::pair<int, int> Bicomplex::column_range(int row) const {
  int n = eng_.n(), l = eng_.l();
  int off = row >= 0 ? row : -eng_.m() + row + 1;  // col = b + off on the D side
  // D side: col = b + off with b in [0,n], col <= t; S side: col = b + off - l + 1, col > t
  int lo = std::min(off, off - l + 1), hi = std::max(off + n, off + n - l + 1);
  while (lo <= hi && eng_.rank(shape(lo, row)) == 0) ++lo;
  while (hi >= lo && eng_.rank(shape(hi, row)) == 0) --hi;
  return {lo, hi};
}

const BiCell& Bicomplex::cell(int col, int row) const {
  auto key = std::make_pair(col, row);
  auto it = cells_.find(key);
  if (it != cells_.end()) return it->second;
  BiCell c;
  c.shape = shape(col, row);
  c.rank = in_window(row) ? eng_.rank(c.shape) : 0;
  if (c.rank > 0) {
    c.twists = eng_.twists(c.shape);
    c.label = eng_.label(c.shape);
  }
  return cells_.emplace(key, std::move(c)).first->second;
}

int Bicomplex::sign_nu_phi(int row) const {
  if (rule_ == SignRule::Plain) return 1;
  int q = row >= 0 ? row : -1 - row;
  if (rule_ == SignRule::Stated) return parity_sign(static_cast<long>(row) * eng_.l());
  return parity_sign(static_cast<long>(q) * (eng_.l() + 1));
}

int Bicomplex::sign_nu_psi(int col) const {
  if (rule_ == SignRule::Plain) return 1;
  long m = eng_.m(), l = eng_.l();
  if (rule_ == SignRule::Stated) return parity_sign((col - anchor()) * m);
  if (col <= t_) return parity_sign((t_ - col) * (m + 1));
  return parity_sign(l * m + 1 + (col - t_ - 1) * (m + 1));
}

const PolyMatrix& Bicomplex::horizontal(int col, int row) const {
  auto key = std::make_pair(col, row);
  auto it = hor_.find(key);
  if (it != hor_.end()) return it->second;
  const BiCell& s = cell(col, row);
  const BiCell& d = cell(col + 1, row);
  PolyMatrix m(d.rank, s.rank);
  if (s.rank > 0 && d.rank > 0) {
    m = eng_.horizontal(s.shape, d.shape);
    if (col == t_ && sign_nu_phi(row) < 0) m = -m;
  }
  return hor_.emplace(key, std::move(m)).first->second;
}

const PolyMatrix& Bicomplex::vertical(int col, int row) const {
  auto key = std::make_pair(col, row);
  auto it = ver_.find(key);
  if (it != ver_.end()) return it->second;
  const BiCell& s = cell(col, row);
  const BiCell& d = cell(col, row + 1);
  PolyMatrix m(d.rank, s.rank);
  if (s.rank > 0 && d.rank > 0) {
    m = eng_.vertical(s.shape, d.shape);
    if (row == -1 && sign_nu_psi(col) < 0) m = -m;
  }
  return ver_.emplace(key, std::move(m)).first->second;
}

}  // namespace koszul
