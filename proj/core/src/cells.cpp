#include "koszul/cells.hpp"

#include <deque>

#include "koszul/errors.hpp"

namespace koszul {

DegreeData infer_degrees(const PolyMatrix& phi, const PolyMatrix& psi) {
  int m = psi.rows(), n = psi.cols(), l = phi.cols();
  if (phi.rows() != n) throw DomainError("phi and psi do not compose");
  DegreeData d;
  int total = m + n + l;
  std::vector<int> deg(static_cast<std::size_t>(total), 0);
  std::vector<bool> seen(static_cast<std::size_t>(total), false);
  // edges: (u, v, w) meaning deg v - deg u = w
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(total));
  auto add_edge = [&](int u, int v, const Poly& p) -> bool {
    if (p.is_zero()) return true;
    if (!p.is_homogeneous()) return false;
    int w = p.total_degree();
    adj[static_cast<std::size_t>(u)].push_back({v, w});
    adj[static_cast<std::size_t>(v)].push_back({u, -w});
    return true;
  };
  bool ok = true;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) ok = add_edge(i, m + j, psi(i, j)) && ok;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < l; ++k) ok = add_edge(m + j, m + n + k, phi(j, k)) && ok;
  for (int s = 0; s < total && ok; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    seen[static_cast<std::size_t>(s)] = true;
    std::deque<int> queue{s};
    while (!queue.empty() && ok) {
      int u = queue.front();
      queue.pop_front();
      for (auto [v, w] : adj[static_cast<std::size_t>(u)]) {
        int want = deg[static_cast<std::size_t>(u)] + w;
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = true;
          deg[static_cast<std::size_t>(v)] = want;
          queue.push_back(v);
        } else if (deg[static_cast<std::size_t>(v)] != want) {
          ok = false;
          break;
        }
      }
    }
  }
  if (!ok) return d;
  d.graded = true;
  d.f.assign(deg.begin(), deg.begin() + m);
  d.g.assign(deg.begin() + m, deg.begin() + m + n);
  d.h.assign(deg.begin() + m + n, deg.end());
  return d;
}

CellEngine::CellEngine(RingPtr ring, PolyMatrix phi, PolyMatrix psi)
    : CellEngine(ring, phi, psi, infer_degrees(phi, psi)) {}

CellEngine::CellEngine(RingPtr ring, PolyMatrix phi, PolyMatrix psi, DegreeData deg)
    : ring_(std::move(ring)),
      phi_(std::move(phi)),
      psi_(std::move(psi)),
      n_(psi_.cols()),
      l_(phi_.cols()),
      m_(psi_.rows()),
      deg_(std::move(deg)) {
  if (phi_.rows() != n_) throw DomainError("phi must have as many rows as psi has columns");
  std::vector<int> all_f, all_h;
  for (int i = 0; i < m_; ++i) all_f.push_back(i);
  for (int k = 0; k < l_; ++k) all_h.push_back(k);
  for (const auto& t : ml::subsets(n_, m_)) det_psi_.emplace(t, determinant(submatrix(psi_, all_f, t), ring_));
  for (const auto& u : ml::subsets(n_, l_)) det_phi_.emplace(u, determinant(submatrix(phi_, u, all_h), ring_));
}

const CellEngine::Enum& CellEngine::multiset_enum(int n, int p) const {
  auto key = std::make_pair(n, p);
  auto it = multisets_.find(key);
  if (it != multisets_.end()) return it->second;
  Enum e;
  e.list = ml::multisets(n, p);
  for (std::size_t i = 0; i < e.list.size(); ++i) e.index.emplace(e.list[i], static_cast<int>(i));
  return multisets_.emplace(key, std::move(e)).first->second;
}

const CellEngine::Enum& CellEngine::subset_enum(int n, int p) const {
  auto key = std::make_pair(n, p);
  auto it = subsets_.find(key);
  if (it != subsets_.end()) return it->second;
  Enum e;
  e.list = ml::subsets(n, p);
  for (std::size_t i = 0; i < e.list.size(); ++i) e.index.emplace(e.list[i], static_cast<int>(i));
  return subsets_.emplace(key, std::move(e)).first->second;
}

CellEngine::Basis CellEngine::basis(const CellShape& s) const {
  return {&multiset_enum(l_, s.a), &subset_enum(n_, s.b), &multiset_enum(m_, s.c)};
}

int CellEngine::rank(const CellShape& s) const {
  if (s.a < 0 || s.c < 0 || s.b < 0 || s.b > n_) return 0;
  return static_cast<int>(ml::multichoose(l_, s.a) * ml::binomial(n_, s.b) * ml::multichoose(m_, s.c));
}

std::vector<int> CellEngine::twists(const CellShape& s) const {
  std::vector<int> out;
  if (!deg_.graded || rank(s) == 0) return out;
  int hsum = 0, fsum = 0;
  for (int x : deg_.h) hsum += x;
  for (int x : deg_.f) fsum += x;
  Basis bs = basis(s);
  for (const auto& hm : bs.h->list) {
    int dh = 0;
    for (int k : hm) dh += deg_.h[static_cast<std::size_t>(k)];
    if (s.h == HKind::SymDual) dh = -dh - hsum;
    for (const auto& S : bs.g->list) {
      int dg = 0;
      for (int j : S) dg += deg_.g[static_cast<std::size_t>(j)];
      for (const auto& fm : bs.f->list) {
        int df = 0;
        for (int i : fm) df += deg_.f[static_cast<std::size_t>(i)];
        if (s.f == FKind::SymDual) df = -df - fsum;
        out.push_back(dh + dg + df);
      }
    }
  }
  return out;
}

std::string CellEngine::label(const CellShape& s) const {
  std::string out;
  if (l_ > 0) {
    out += s.h == HKind::Divided ? "D_" + std::to_string(s.a) + "(H)" : "S_" + std::to_string(s.a) + "(H*)";
    out += "⊗";
  }
  out += "∧^" + std::to_string(s.b) + "G";
  if (m_ > 0) {
    out += "⊗";
    out += s.f == FKind::Sym ? "S_" + std::to_string(s.c) + "(F)" : "S_" + std::to_string(s.c) + "(F)*";
  }
  return out;
}

std::vector<std::string> CellEngine::basis_labels(const CellShape& s) const {
  std::vector<std::string> out;
  if (rank(s) == 0) return out;
  Basis bs = basis(s);
  for (const auto& hm : bs.h->list)
    for (const auto& S : bs.g->list)
      for (const auto& fm : bs.f->list) {
        std::string x;
        if (l_ > 0) x += ml::divided_label(hm, l_) + "*";
        x += ml::subset_label(S);
        if (m_ > 0) x += "*" + ml::multiset_label(fm);
        out.push_back(x);
      }
  return out;
}

PolyMatrix CellEngine::horizontal(const CellShape& src, const CellShape& tgt) const {
  int rs = rank(src), rt = rank(tgt);
  PolyMatrix out(rt, rs);
  if (src.f != tgt.f || src.c != tgt.c) throw DomainError("horizontal map changes the F-part");
  const bool nu = src.h == HKind::Divided && src.a == 0 && tgt.h == HKind::SymDual && tgt.a == 0;
  if (nu) {
    if (tgt.b != src.b + l_) throw DomainError("nu^phi shape mismatch");
  } else if (src.h != tgt.h || tgt.b != src.b + 1 ||
             (src.h == HKind::Divided ? tgt.a != src.a - 1 : tgt.a != src.a + 1)) {
    throw DomainError("d_phi shape mismatch");
  }
  if (rs == 0 || rt == 0) return out;
  Basis bs = basis(src), bt = basis(tgt);
  for (std::size_t ih = 0; ih < bs.h->list.size(); ++ih)
    for (std::size_t ig = 0; ig < bs.g->list.size(); ++ig)
      for (std::size_t iff = 0; iff < bs.f->list.size(); ++iff) {
        int col = bs.index(static_cast<int>(ih), static_cast<int>(ig), static_cast<int>(iff));
        const auto& S = bs.g->list[ig];
        if (nu) {
          for (const auto& [U, det] : det_phi_) {
            if (det.is_zero()) continue;
            auto w = ml::wedge_basis(U, S);
            if (!w) continue;
            int row = bt.index(0, bt.g->index.at(w->second), static_cast<int>(iff));
            out(row, col) += det * Rational(w->first);
          }
          continue;
        }
        const auto& hm = bs.h->list[ih];
        for (int k = 0; k < l_; ++k) {
          ml::Multiset next;
          if (src.h == HKind::Divided) {
            auto r = ml::multiset_remove(hm, k);
            if (!r) continue;
            next = std::move(*r);
          } else {
            next = ml::multiset_add(hm, k);
          }
          int th = bt.h->index.at(next);
          for (int i = 0; i < n_; ++i) {
            const Poly& e = phi_(i, k);
            if (e.is_zero()) continue;
            auto w = ml::wedge_basis({i}, S);
            if (!w) continue;
            int row = bt.index(th, bt.g->index.at(w->second), static_cast<int>(iff));
            out(row, col) += e * Rational(w->first);
          }
        }
      }
  return out;
}

PolyMatrix CellEngine::vertical(const CellShape& src, const CellShape& tgt) const {
  int rs = rank(src), rt = rank(tgt);
  PolyMatrix out(rt, rs);
  if (src.h != tgt.h || src.a != tgt.a) throw DomainError("vertical map changes the H-part");
  const bool nu = src.f == FKind::SymDual && src.c == 0 && tgt.f == FKind::Sym && tgt.c == 0;
  if (nu) {
    if (tgt.b != src.b - m_) throw DomainError("nu_psi shape mismatch");
  } else if (src.f != tgt.f || tgt.b != src.b - 1 ||
             (src.f == FKind::Sym ? tgt.c != src.c + 1 : tgt.c != src.c - 1)) {
    throw DomainError("d_psi shape mismatch");
  }
  if (rs == 0 || rt == 0) return out;
  Basis bs = basis(src), bt = basis(tgt);
  for (std::size_t ih = 0; ih < bs.h->list.size(); ++ih)
    for (std::size_t ig = 0; ig < bs.g->list.size(); ++ig)
      for (std::size_t iff = 0; iff < bs.f->list.size(); ++iff) {
        int col = bs.index(static_cast<int>(ih), static_cast<int>(ig), static_cast<int>(iff));
        const auto& S = bs.g->list[ig];
        if (nu) {
          for (const auto& [T, det] : det_psi_) {
            if (det.is_zero()) continue;
            auto c = ml::contract_basis(S, T);
            if (!c) continue;
            int row = bt.index(static_cast<int>(ih), bt.g->index.at(c->second), 0);
            out(row, col) += det * Rational(c->first);
          }
          continue;
        }
        const auto& fm = bs.f->list[iff];
        for (std::size_t pos = 0; pos < S.size(); ++pos) {
          int s = S[pos];
          ml::Subset rest = S;
          rest.erase(rest.begin() + static_cast<long>(pos));
          int tg = bt.g->index.at(rest);
          Rational sign = pos % 2 ? -1 : 1;
          for (int i = 0; i < m_; ++i) {
            const Poly& e = psi_(i, s);
            if (e.is_zero()) continue;
            ml::Multiset next;
            if (src.f == FKind::Sym) {
              next = ml::multiset_add(fm, i);
            } else {
              auto r = ml::multiset_remove(fm, i);
              if (!r) continue;
              next = std::move(*r);
            }
            int row = bt.index(static_cast<int>(ih), tg, bt.f->index.at(next));
            out(row, col) += e * sign;
          }
        }
      }
  return out;
}

}  // namespace koszul
