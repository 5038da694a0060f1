#include "koszul/complex.hpp"

#include <algorithm>
#include <functional>

#include "koszul/errors.hpp"
#include "koszul/ideal.hpp"

namespace koszul {

std::optional<int> FreeComplex::first_nonzero_composite() const {
  for (std::size_t i = 0; i + 1 < maps.size(); ++i)
    if (!(maps[i + 1] * maps[i]).is_zero()) return static_cast<int>(i);
  return std::nullopt;
}

void FreeComplex::certify() const {
  if (auto bad = first_nonzero_composite())
    throw CertificateFailure(name + ": d^2 != 0 at position " + std::to_string(*bad));
}

namespace {

PolyMatrix empty_psi(int n) { return PolyMatrix(0, n); }
PolyMatrix empty_phi(int n) { return PolyMatrix(n, 0); }

Component make_component(const CellEngine& eng, const CellShape& s) {
  Component c;
  c.shape = s;
  c.label = eng.label(s);
  c.rank = eng.rank(s);
  c.twists = eng.twists(s);
  return c;
}

FreeComplex assemble(const CellEngine& eng, const std::vector<CellShape>& shapes,
                     const std::function<PolyMatrix(const CellShape&, const CellShape&)>& map, std::string name) {
  std::size_t lo = 0, hi = shapes.size();
  while (lo < hi && eng.rank(shapes[lo]) == 0) ++lo;
  while (hi > lo && eng.rank(shapes[hi - 1]) == 0) --hi;
  FreeComplex fc;
  fc.ring = eng.ring();
  fc.name = std::move(name);
  fc.graded = eng.degrees().graded;
  for (std::size_t i = lo; i < hi; ++i) {
    fc.comps.push_back(make_component(eng, shapes[i]));
    if (i + 1 < hi) fc.maps.push_back(map(shapes[i], shapes[i + 1]));
  }
  fc.certify();
  return fc;
}

std::vector<CellShape> c_psi_shapes(int n, int m, int t) {
  std::vector<CellShape> out;
  for (int p = n - t - m; p >= std::max(0, -t - m); --p) out.push_back({HKind::Divided, 0, t + m + p, FKind::SymDual, p});
  for (int q = std::max(0, t - n); q <= t; ++q) out.push_back({HKind::Divided, 0, t - q, FKind::Sym, q});
  return out;
}

std::vector<CellShape> d_phi_shapes(int n, int l, int t) {
  std::vector<CellShape> out;
  for (int p = 0; p <= std::min(t, n); ++p) out.push_back({HKind::Divided, t - p, p, FKind::Sym, 0});
  for (int p = std::max(0, -t - l); p <= n - t - l; ++p) out.push_back({HKind::SymDual, p, t + l + p, FKind::Sym, 0});
  return out;
}

void check_ring(const RingPtr& ring, const PolyMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!same_ring(ring, m(i, j).ring())) throw RingMismatch("matrix entry from another ring");
}

// Component i of the right half of C_psi(t), as a plain complex.
FreeComplex right_half(const CellEngine& eng, int t) {
  std::vector<CellShape> shapes;
  for (int q = std::max(0, t - eng.n()); q <= t; ++q) shapes.push_back({HKind::Divided, 0, t - q, FKind::Sym, q});
  return assemble(
      eng, shapes, [&](const CellShape& a, const CellShape& b) { return eng.vertical(a, b); }, "right half");
}

PolyMatrix kron_identity(const QMatrix& q, int k, const RingPtr& ring) {
  PolyMatrix out(q.rows() * k, q.cols() * k);
  for (int i = 0; i < q.rows(); ++i)
    for (int j = 0; j < q.cols(); ++j) {
      if (q(i, j) == 0) continue;
      for (int s = 0; s < k; ++s) out(i * k + s, j * k + s) = Poly::constant(ring, q(i, j));
    }
  return out;
}

}  // namespace

FreeComplex build_c_psi(const RingPtr& ring, const PolyMatrix& psi, int t) {
  check_ring(ring, psi);
  CellEngine eng(ring, empty_phi(psi.cols()), psi);
  return assemble(
      eng, c_psi_shapes(psi.cols(), psi.rows(), t),
      [&](const CellShape& a, const CellShape& b) { return eng.vertical(a, b); }, "C_psi(" + std::to_string(t) + ")");
}

FreeComplex build_d_phi(const RingPtr& ring, const PolyMatrix& phi, int t) {
  check_ring(ring, phi);
  CellEngine eng(ring, phi, empty_psi(phi.rows()));
  return assemble(
      eng, d_phi_shapes(phi.rows(), phi.cols(), t),
      [&](const CellShape& a, const CellShape& b) { return eng.horizontal(a, b); }, "D_phi(" + std::to_string(t) + ")");
}

FreeComplex dualize(const FreeComplex& c) {
  FreeComplex d;
  d.ring = c.ring;
  d.graded = c.graded;
  d.name = c.name.size() > 1 && c.name.back() == '*' ? c.name.substr(0, c.name.size() - 1) : c.name + "*";
  for (auto it = c.comps.rbegin(); it != c.comps.rend(); ++it) {
    Component k = *it;
    k.dual = !k.dual;
    if (k.label.size() > 3 && k.label.front() == '(' && k.label.substr(k.label.size() - 2) == ")*") {
      k.label = k.label.substr(1, k.label.size() - 3);
    } else {
      k.label = "(" + k.label + ")*";
    }
    for (auto& w : k.twists) w = -w;
    d.comps.push_back(std::move(k));
  }
  for (auto it = c.maps.rbegin(); it != c.maps.rend(); ++it) d.maps.push_back(it->transpose());
  return d;
}

FreeComplex build_en(const RingPtr& ring, const PolyMatrix& psi, int t) {
  check_ring(ring, psi);
  int n = psi.cols(), m = psi.rows();
  if (t < 0 || t > n - m) throw DomainError("C^t(psi) needs 0 <= t <= n - m");
  CellEngine eng(ring, empty_phi(n), psi);
  int tp = n - m - t;
  FreeComplex left = dualize(right_half(eng, tp));
  FreeComplex right = right_half(eng, t);
  // splice: entry (T, Z) = sum over U = complement of Z u T of sign(Z, T, U) det psi_U
  auto zs = ml::subsets(n, tp), ts = ml::subsets(n, t);
  PolyMatrix nu(static_cast<int>(ts.size()), static_cast<int>(zs.size()));
  for (std::size_t j = 0; j < zs.size(); ++j)
    for (std::size_t i = 0; i < ts.size(); ++i) {
      ml::Subset zt = zs[j];
      zt.insert(zt.end(), ts[i].begin(), ts[i].end());
      ml::Subset u;
      for (int x = 0; x < n; ++x)
        if (std::find(zt.begin(), zt.end(), x) == zt.end()) u.push_back(x);
      if (static_cast<int>(u.size()) != m) continue;
      ml::Subset all = zt;
      all.insert(all.end(), u.begin(), u.end());
      int s = ml::concat_sign(all, {});
      if (s == 0) continue;
      nu(static_cast<int>(i), static_cast<int>(j)) = eng.det_psi(u) * Rational(s);
    }
  if (eng.degrees().graded) {
    // degree of det psi_U plus the twists of T and Z is independent of T, Z
    int shift = 0;
    for (int x : eng.degrees().g) shift += x;
    for (int x : eng.degrees().f) shift -= x;
    for (auto& c : left.comps)
      for (auto& w : c.twists) w += shift;
  }
  FreeComplex en;
  en.ring = ring;
  en.name = "C^" + std::to_string(t) + "(psi)";
  en.graded = eng.degrees().graded;
  en.comps = left.comps;
  en.maps = left.maps;
  en.maps.push_back(nu);
  en.comps.insert(en.comps.end(), right.comps.begin(), right.comps.end());
  en.maps.insert(en.maps.end(), right.maps.begin(), right.maps.end());
  en.certify();
  return en;
}

bool is_split_exact(const FreeComplex& c) {
  if (c.comps.empty()) return true;
  if (c.first_nonzero_composite()) return false;
  int need = c.comps.back().rank;
  for (int i = static_cast<int>(c.maps.size()) - 1; i >= 0; --i) {
    if (need < 0 || need > c.comps[i].rank) return false;
    if (need > 0 && !minors_ideal(c.maps[i], need, c.ring).is_unit()) return false;
    need = c.comps[i].rank - need;
  }
  return need == 0;
}

SquareReport check_squares(const ComplexMorphism& f) {
  SquareReport rep;
  const auto& s = f.source;
  const auto& t = f.target;
  if (s.length() != t.length() || static_cast<int>(f.maps.size()) != s.length()) {
    rep.ok = false;
    rep.first_bad = 0;
    return rep;
  }
  for (std::size_t i = 0; i + 1 < f.maps.size(); ++i) {
    PolyMatrix lhs = f.maps[i + 1] * s.maps[i];
    PolyMatrix rhs = t.maps[i] * f.maps[i];
    int sign;
    if (lhs == rhs) {
      sign = lhs.is_zero() ? 0 : 1;
    } else if (lhs == -rhs) {
      sign = -1;
    } else {
      sign = 2;
    }
    if (sign == 2) {
      rep.ok = false;
      if (!rep.first_bad) rep.first_bad = static_cast<int>(i);
      rep.signs.push_back(0);
    } else {
      rep.signs.push_back(sign);
    }
  }
  return rep;
}

bool is_isomorphism(const ComplexMorphism& f) {
  for (const auto& m : f.maps) {
    if (m.rows() != m.cols()) return false;
    if (m.rows() == 0) continue;
    Poly d = determinant(m, f.source.ring);
    if (!d.is_unit()) return false;
  }
  return true;
}

ComplexMorphism identification_morphism(const RingPtr& ring, const PolyMatrix& psi, int t) {
  int n = psi.cols(), m = psi.rows();
  ComplexMorphism f{build_c_psi(ring, psi, t), build_en(ring, psi, t), {}};
  if (f.source.length() != f.target.length()) throw CertificateFailure("identification: lengths differ");
  for (const auto& c : f.source.comps) {
    if (c.shape.f == FKind::SymDual) {
      int k = static_cast<int>(ml::multichoose(m, c.shape.c));
      f.maps.push_back(kron_identity(ml::omega_matrix(n, c.shape.b), k, ring));
    } else {
      f.maps.push_back(identity_matrix(ring, c.rank));
    }
  }
  return f;
}

ComplexMorphism duality_morphism(const RingPtr& ring, const PolyMatrix& psi, int t) {
  int n = psi.cols(), m = psi.rows();
  ComplexMorphism f{build_c_psi(ring, psi, t), dualize(build_c_psi(ring, psi, n - m - t)), {}};
  if (f.source.length() != f.target.length()) throw CertificateFailure("duality: lengths differ");
  for (const auto& c : f.source.comps) {
    int k = static_cast<int>(ml::multichoose(m, c.shape.c));
    f.maps.push_back(kron_identity(ml::omega_matrix(n, c.shape.b), k, ring));
  }
  return f;
}

ComplexMorphism build_tau(const RingPtr& ring, const PolyMatrix& psi, int t) {
  int n = psi.cols(), m = psi.rows();
  ComplexMorphism f{build_d_phi(ring, psi.transpose(), t), dualize(build_c_psi(ring, psi, t)), {}};
  f.source.name = "D_psi*(" + std::to_string(t) + ")";
  if (f.source.length() != f.target.length()) throw CertificateFailure("tau: lengths differ");
  for (const auto& c : f.source.comps) {
    // source basis: F-side multiset outer, G subset inner; target: swapped
    int nh = static_cast<int>(ml::multichoose(m, c.shape.a));
    int ng = static_cast<int>(ml::binomial(n, c.shape.b));
    PolyMatrix p(c.rank, c.rank);
    for (int ih = 0; ih < nh; ++ih)
      for (int ig = 0; ig < ng; ++ig) p(ig * nh + ih, ih * ng + ig) = Poly::constant(ring, 1);
    f.maps.push_back(std::move(p));
  }
  return f;
}

}  // namespace koszul
