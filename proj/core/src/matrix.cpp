#include "koszul/matrix.hpp"

#include "koszul/parse.hpp"

namespace koszul {

PolyMatrix hconcat(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows()) throw DomainError("hconcat row mismatch");
  PolyMatrix r(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

PolyMatrix identity_matrix(const RingPtr& ring, int n) {
  PolyMatrix r(n, n);
  for (int i = 0; i < n; ++i) r(i, i) = Poly::constant(ring, 1);
  return r;
}

PolyMatrix scalar_matrix(const RingPtr& ring, const QMatrix& q) {
  PolyMatrix r(q.rows(), q.cols());
  for (int i = 0; i < q.rows(); ++i)
    for (int j = 0; j < q.cols(); ++j) r(i, j) = Poly::constant(ring, q(i, j));
  return r;
}

PolyMatrix parse_matrix(const std::vector<std::vector<std::string>>& rows, const RingPtr& ring) {
  int nr = static_cast<int>(rows.size());
  int nc = nr ? static_cast<int>(rows[0].size()) : 0;
  PolyMatrix m(nr, nc);
  for (int i = 0; i < nr; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != nc) throw ParseError("ragged matrix");
    for (int j = 0; j < nc; ++j) m(i, j) = parse_poly(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], ring);
  }
  return m;
}

std::vector<std::vector<std::string>> matrix_strings(const PolyMatrix& m) {
  std::vector<std::vector<std::string>> out(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[static_cast<std::size_t>(i)].push_back(m(i, j).to_string());
  return out;
}

namespace {

template <class T, class Zero, class IsZero>
T det_rec(const Matrix<T>& m, const std::vector<int>& rows, std::vector<int>& cols, const Zero& zero,
          const IsZero& is_zero) {
  std::size_t n = rows.size();
  if (n == 0) return zero(true);
  if (n == 1) return m(rows[0], cols[0]);
  // expand along the row with most zeros
  std::size_t best = 0;
  int best_zeros = -1;
  for (std::size_t r = 0; r < n; ++r) {
    int z = 0;
    for (int c : cols) z += is_zero(m(rows[r], c)) ? 1 : 0;
    if (z > best_zeros) {
      best_zeros = z;
      best = r;
    }
  }
  std::vector<int> sub_rows;
  for (std::size_t r = 0; r < n; ++r)
    if (r != best) sub_rows.push_back(rows[r]);
  T acc = zero(false);
  for (std::size_t k = 0; k < n; ++k) {
    const T& e = m(rows[best], cols[k]);
    if (is_zero(e)) continue;
    int c = cols[k];
    cols.erase(cols.begin() + static_cast<long>(k));
    T minor = det_rec(m, sub_rows, cols, zero, is_zero);
    cols.insert(cols.begin() + static_cast<long>(k), c);
    if ((best + k) % 2 == 0) {
      acc += e * minor;
    } else {
      acc -= e * minor;
    }
  }
  return acc;
}

}  // namespace

Poly determinant(const PolyMatrix& m, const RingPtr& ring) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  std::vector<int> rows, cols;
  for (int i = 0; i < m.rows(); ++i) {
    rows.push_back(i);
    cols.push_back(i);
  }
  return det_rec(
      m, rows, cols, [&](bool one) { return one ? Poly::constant(ring, 1) : Poly(ring); },
      [](const Poly& p) { return p.is_zero(); });
}

Rational determinant(const QMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  // exact Gaussian elimination
  QMatrix a = m;
  int n = a.rows();
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (a(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      Rational f = a(r, c) / a(c, c);
      for (int j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

PolyMatrix submatrix(const PolyMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  PolyMatrix r(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) r(static_cast<int>(i), static_cast<int>(j)) = m(rows[i], cols[j]);
  return r;
}

bool entries_homogeneous(const PolyMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_homogeneous()) return false;
  return true;
}

}  // namespace koszul
