#include "koszul/rows.hpp"

#include "koszul/errors.hpp"
#include "koszul/multilinear.hpp"

namespace koszul {

namespace {

PresentedModule free_cell(const Bicomplex& k, int col, int row) {
  const BiCell& c = k.cell(col, row);
  return PresentedModule::free(k.engine().ring(), c.rank, c.twists);
}

void need_rows(const Bicomplex& k, int lo, int hi) {
  if (k.row_min() > lo || k.row_max() < hi)
    throw DomainError("bicomplex window must contain rows " + std::to_string(lo) + ".." + std::to_string(hi));
}

int anchor_for(int t, int l) {
  if (t >= 0) return 0;
  if (t >= -l) return t + 1;
  return 1 - l;
}

}  // namespace

ModuleComplex extract_n(const Bicomplex& k) {
  need_rows(k, 0, 1);
  ModuleComplex out;
  int c0 = k.anchor();
  auto [lo, hi] = k.column_range(0);
  if (lo < c0) throw CertificateFailure("row 0 extends left of the anchor");
  for (int c = c0; c <= hi; ++c)
    out.mods.push_back(kernel(ModuleMap(free_cell(k, c, 0), free_cell(k, c, 1), k.vertical(c, 0))));
  for (int c = c0; c < hi; ++c) {
    std::size_t i = static_cast<std::size_t>(c - c0);
    out.maps.emplace_back(out.mods[i], out.mods[i + 1], k.horizontal(c, 0));
  }
  out.start = 0;
  out.certify();
  return out;
}

ModuleComplex extract_m(const Bicomplex& k) {
  need_rows(k, -2, -1);
  ModuleComplex out;
  auto [lo, hi] = k.column_range(-1);
  for (int c = lo; c <= hi; ++c) {
    const BiCell& cell = k.cell(c, -1);
    out.mods.push_back(PresentedModule::cokernel(k.engine().ring(), k.vertical(c, -2), cell.twists));
  }
  for (int c = lo; c < hi; ++c) {
    std::size_t i = static_cast<std::size_t>(c - lo);
    out.maps.emplace_back(out.mods[i], out.mods[i + 1], k.horizontal(c, -1));
  }
  out.start = lo - k.anchor();
  out.certify();
  return out;
}

std::vector<ModuleMap> nu_morphism(const Bicomplex& k, const ModuleComplex& m, const ModuleComplex& n) {
  need_rows(k, -1, 0);
  std::vector<ModuleMap> out;
  const RingPtr& ring = k.engine().ring();
  for (int i = 0; i < m.length(); ++i) {
    int pos = m.start + i;
    int c = k.anchor() + pos;
    int j = pos - n.start;
    PresentedModule tgt = j >= 0 && j < n.length() ? n.mods[static_cast<std::size_t>(j)]
                                                    : PresentedModule::free(ring, 0, {});
    PolyMatrix a = tgt.ambient_rank() == 0 ? PolyMatrix(0, m.mods[static_cast<std::size_t>(i)].ambient_rank())
                                           : k.vertical(c, -1);
    out.emplace_back(m.mods[static_cast<std::size_t>(i)], tgt, a);
  }
  return out;
}

PresentedModule column_homology(const Bicomplex& k, int p, int q) {
  const RingPtr& ring = k.engine().ring();
  if (q < 0) throw DomainError("column homology needs q >= 0");
  int c = k.anchor() + p;
  if (q == 0) return PresentedModule::free(ring, 0, {});
  need_rows(k, q - 1, q + 1);
  PresentedModule here = free_cell(k, c, q);
  PresentedModule z = kernel(ModuleMap(here, free_cell(k, c, q + 1), k.vertical(c, q)));
  return PresentedModule::subquotient(ring, z.gens(), k.vertical(c, q - 1), here.twists());
}

ModuleComplex build_c_barlambda(const RingPtr& ring, const PolyMatrix& chi, const PolyMatrix& lambda, int t) {
  int n = lambda.cols(), l = lambda.rows(), m = chi.cols();
  if (chi.rows() != n) throw DomainError("chi and lambda do not compose");
  if (!(lambda * chi).is_zero()) throw DomainError("lambda * chi != 0");
  if (l == 0) throw DomainError("lambda needs at least one row");
  DegreeData d = infer_degrees(lambda.transpose(), chi.transpose());
  DegreeData dl;
  if (d.graded) {
    dl.graded = true;
    for (int x : d.h) dl.f.push_back(-x);
    for (int x : d.g) dl.g.push_back(-x);
  }
  CellEngine eng(ring, PolyMatrix(n, 0), lambda, dl);

  std::vector<CellShape> shapes;
  std::vector<int> pos;
  int rho = n - m - l, tp = rho - t, c0 = anchor_for(tp, l);
  for (int p = n - t - l; p >= std::max(0, -t - l); --p) {
    shapes.push_back({HKind::Divided, 0, t + l + p, FKind::SymDual, p});
    pos.push_back(tp - p - c0);
  }
  for (int q = std::max(0, t - n); q <= t; ++q) {
    shapes.push_back({HKind::Divided, 0, t - q, FKind::Sym, q});
    pos.push_back(tp + 1 + q - c0);
  }

  ModuleComplex out;
  for (const auto& s : shapes) {
    int rank = eng.rank(s);
    int nf = rank == 0 ? 0 : rank / static_cast<int>(ml::binomial(n, s.b));
    PolyMatrix base = ext_power_cokernel(ring, chi, s.b).rels();
    PolyMatrix rels(rank, base.cols() * nf);
    for (int i = 0; i < base.rows(); ++i)
      for (int j = 0; j < base.cols(); ++j) {
        if (base(i, j).is_zero()) continue;
        for (int f = 0; f < nf; ++f) rels(i * nf + f, j * nf + f) = base(i, j);
      }
    out.mods.push_back(PresentedModule::cokernel(ring, rels, eng.twists(s)));
  }
  for (std::size_t i = 0; i + 1 < shapes.size(); ++i)
    out.maps.emplace_back(out.mods[i], out.mods[i + 1], eng.vertical(shapes[i], shapes[i + 1]));
  out.start = pos.empty() ? 0 : pos.front();
  out.certify();
  return out;
}

namespace {

/// Signs s_i with s_{i+1} f_{i+1} a_i = b_i s_i f_i for every square, where
/// a is the source differential and b the target one. Throws when a square
/// does not commute up to sign.
void fix_signs(std::vector<PolyMatrix>& f, const std::vector<PolyMatrix>& a, const std::vector<PolyMatrix>& b,
               const char* what) {
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    PolyMatrix lhs = f[i + 1] * a[i], rhs = b[i] * f[i];
    if (lhs == rhs) continue;
    if (lhs == -rhs) {
      f[i + 1] = -f[i + 1];
      continue;
    }
    throw CertificateFailure(std::string(what) + ": square " + std::to_string(i) + " does not commute up to sign");
  }
}

std::vector<PolyMatrix> matrices(const ModuleComplex& c) {
  std::vector<PolyMatrix> out;
  for (const auto& m : c.maps) out.push_back(m.matrix());
  return out;
}

}  // namespace

ModuleMorphism identification_m(const RingPtr& ring, const PolyMatrix& chi, const PolyMatrix& lambda, int t) {
  int n = chi.rows(), m = chi.cols(), l = lambda.rows();
  Bicomplex k(ring, lambda.transpose(), chi.transpose(), t, 2, 1);
  ModuleMorphism out{extract_m(k), build_c_barlambda(ring, chi, lambda, n - m - l - t), {}};
  const auto& src = out.source;
  const auto& tgt = out.target;
  if (src.start != tgt.start || src.length() != tgt.length())
    throw CertificateFailure("M(t) and C_lambda-bar(rho-t) occupy different positions");
  std::vector<PolyMatrix> phi;
  for (int i = 0; i < src.length(); ++i) {
    const BiCell& cell = k.cell(k.anchor() + src.start + i, -1);
    int b = cell.shape.b;
    int nh = static_cast<int>(ml::multichoose(l, cell.shape.a));
    int ng = static_cast<int>(ml::binomial(n, b));
    QMatrix w = ml::omega_matrix(n, b);
    QMatrix q(cell.rank, cell.rank);
    for (int ih = 0; ih < nh; ++ih)
      for (int ig = 0; ig < ng; ++ig)
        for (int it = 0; it < w.rows(); ++it)
          if (w(it, ig) != 0) q(it * nh + ih, ih * ng + ig) = w(it, ig);
    phi.push_back(scalar_matrix(ring, q));
  }
  fix_signs(phi, matrices(src), matrices(tgt), "identification");
  for (int i = 0; i < src.length(); ++i) {
    auto si = static_cast<std::size_t>(i);
    out.maps.emplace_back(src.mods[si], tgt.mods[si], phi[si]);
    ModuleMap back(tgt.mods[si], src.mods[si], phi[si].transpose());  // certifies the inverse
    (void)back;
  }
  return out;
}

ModuleMorphism build_mu(const RingPtr& ring, const PolyMatrix& chi, const PolyMatrix& lambda, int t) {
  ModuleMorphism id = identification_m(ring, chi, lambda, t);
  Bicomplex k(ring, lambda.transpose(), chi.transpose(), t, 2, 2);
  ModuleMorphism out{id.target, extract_n(k), {}};
  const auto& src = out.source;
  const auto& tgt = out.target;
  std::vector<PolyMatrix> f, tmaps;
  std::vector<PresentedModule> tmods;
  for (int i = 0; i < src.length(); ++i) {
    int pos = src.start + i;
    int j = pos - tgt.start;
    auto si = static_cast<std::size_t>(i);
    if (j >= 0 && j < tgt.length()) {
      tmods.push_back(tgt.mods[static_cast<std::size_t>(j)]);
      f.push_back(k.vertical(k.anchor() + pos, -1) * id.maps[si].matrix().transpose());
    } else {
      tmods.push_back(PresentedModule::free(ring, 0, {}));
      f.push_back(PolyMatrix(0, src.mods[si].ambient_rank()));
    }
  }
  for (std::size_t i = 0; i + 1 < tmods.size(); ++i) {
    int a = tmods[i + 1].ambient_rank(), b = tmods[i].ambient_rank();
    int col = k.anchor() + src.start + static_cast<int>(i);
    tmaps.push_back(a > 0 && b > 0 ? k.horizontal(col, 0) : PolyMatrix(a, b));
  }
  fix_signs(f, matrices(src), tmaps, "mu");
  for (int i = 0; i < src.length(); ++i)
    out.maps.emplace_back(src.mods[static_cast<std::size_t>(i)], tmods[static_cast<std::size_t>(i)],
                          f[static_cast<std::size_t>(i)]);
  return out;
}

ModuleComplex hom_dual(const ModuleComplex& c) {
  ModuleComplex out;
  int len = c.length();
  for (int i = len - 1; i >= 0; --i) {
    const auto& m = c.mods[static_cast<std::size_t>(i)];
    if (!m.is_cokernel()) throw DomainError("hom_dual needs cokernel presentations");
    std::vector<int> tw;
    for (int x : m.twists()) tw.push_back(-x);
    const RingPtr& ring = m.ring();
    if (m.rels().cols() == 0) {
      out.mods.push_back(PresentedModule::free(ring, m.ambient_rank(), tw));
    } else {
      PolyMatrix z = syzygies(m.rels().transpose(), ring);
      out.mods.push_back(PresentedModule::subquotient(ring, z, PolyMatrix(m.ambient_rank(), 0), tw));
    }
  }
  for (int i = 0; i + 1 < len; ++i)
    out.maps.emplace_back(out.mods[static_cast<std::size_t>(i)], out.mods[static_cast<std::size_t>(i + 1)],
                          c.maps[static_cast<std::size_t>(len - 2 - i)].matrix().transpose());
  out.start = -(c.start + len - 1);
  out.certify();
  return out;
}

}  // namespace koszul
