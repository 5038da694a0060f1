#include "koszul/module.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "koszul/errors.hpp"
#include "koszul/ideal.hpp"
#include "koszul/multilinear.hpp"

namespace koszul {

struct PresentedModule::Cache {
  std::once_flag rel_once, sub_once;
  std::vector<ModVec> rel, sub;
};

namespace {

std::vector<ModVec> nonzero_columns(const PolyMatrix& m, const ModuleOrder& ord) {
  std::vector<ModVec> out;
  for (auto& v : columns_of(m, ord))
    if (!v.empty()) out.push_back(std::move(v));
  return out;
}

std::vector<Poly> column(const PolyMatrix& m, int j) {
  std::vector<Poly> out;
  out.reserve(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) out.push_back(m(i, j));
  return out;
}

ModVec to_vec(const std::vector<Poly>& col, const ModuleOrder& ord) {
  std::vector<ModTerm> terms;
  for (std::size_t i = 0; i < col.size(); ++i)
    for (const auto& t : col[i].terms()) terms.push_back({t.mono, static_cast<int>(i), t.coeff});
  return sorted_vec(std::move(terms), ord);
}


// Degree of a column w.r.t. row twists; nullopt for the zero column.
std::optional<int> column_degree(const PolyMatrix& m, int j, const std::vector<int>& tw) {
  std::optional<int> d;
  for (int i = 0; i < m.rows(); ++i) {
    const Poly& e = m(i, j);
    if (e.is_zero()) continue;
    if (!e.is_homogeneous()) throw UngradedError("inhomogeneous entry " + e.to_string());
    int di = e.total_degree() + tw[static_cast<std::size_t>(i)];
    if (d && *d != di) throw UngradedError("column of mixed degree");
    d = di;
  }
  return d;
}

PolyMatrix syz_impl(const PolyMatrix& a, const RingPtr& ring, const std::vector<int>& row_w,
                    const std::vector<int>& col_w) {
  int r = a.rows(), k = a.cols();
  if (r == 0) return identity_matrix(ring, k);
  if (k == 0) return PolyMatrix(k, 0);
  ModuleOrder ord(ring->order());
  std::vector<ModVec> gens;
  for (int j = 0; j < k; ++j) {
    ModVec v = column_vec(a, j, ord);
    v.push_back({Monomial(), r + j, Rational(1)});
    gens.push_back(sorted_vec(std::move(v), ord));
  }
  GBOptions opt;
  opt.elim_cutoff = r;
  if (!row_w.empty() && !col_w.empty()) {
    opt.weights = row_w;
    opt.weights.insert(opt.weights.end(), col_w.begin(), col_w.end());
  }
  auto res = groebner(std::move(gens), ord, opt);
  PolyMatrix out(k, static_cast<int>(res.eliminated.size()));
  for (std::size_t c = 0; c < res.eliminated.size(); ++c) {
    auto col = vec_to_column(res.eliminated[c], ring, k, r);
    for (int i = 0; i < k; ++i) out(i, static_cast<int>(c)) = std::move(col[static_cast<std::size_t>(i)]);
  }
  return out;
}

// Column degrees of m when possible, empty otherwise (zero columns get 0).
std::vector<int> try_column_degrees(const PolyMatrix& m, const std::vector<int>& tw) {
  if (tw.empty() && m.rows() > 0) return {};
  std::vector<int> out;
  try {
    for (int j = 0; j < m.cols(); ++j) out.push_back(column_degree(m, j, tw).value_or(0));
  } catch (const UngradedError&) {
    return {};
  }
  return out;
}

void for_each_monomial(int nvars, int deg, const std::function<void(const Monomial&)>& fn) {
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == nvars - 1) {
      e[static_cast<std::size_t>(i)] = left;
      fn(Monomial(std::span<const int>(e)));
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[static_cast<std::size_t>(i)] = a;
      rec(i + 1, left - a);
    }
  };
  if (nvars == 0) {
    if (deg == 0) fn(Monomial());
    return;
  }
  rec(0, deg);
}

// Standard monomials of F / (gb) in degree d.
long standard_count(const std::vector<ModVec>& gb, const std::vector<int>& tw, int nvars, int d) {
  std::vector<std::vector<Monomial>> leads(tw.size());
  for (const auto& g : gb) leads[static_cast<std::size_t>(g.front().comp)].push_back(g.front().mono);
  long total = 0;
  for (std::size_t i = 0; i < tw.size(); ++i) {
    int e = d - tw[i];
    if (e < 0) continue;
    const auto& li = leads[i];
    bool unit = std::any_of(li.begin(), li.end(), [](const Monomial& m) { return m.is_one(); });
    if (unit) continue;
    for_each_monomial(nvars, e, [&](const Monomial& mono) {
      for (const auto& l : li)
        if (l.divides(mono)) return;
      ++total;
    });
  }
  return total;
}

PolyMatrix block_diag(const PolyMatrix& m, int copies) {
  PolyMatrix out(m.rows() * copies, m.cols() * copies);
  for (int c = 0; c < copies; ++c)
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) out(c * m.rows() + i, c * m.cols() + j) = m(i, j);
  return out;
}

}  // namespace

PresentedModule::PresentedModule(RingPtr ring, int rank, PolyMatrix gens, PolyMatrix rels, std::vector<int> twists,
                                 bool plain)
    : ring_(std::move(ring)),
      rank_(rank),
      gens_(std::move(gens)),
      rels_(std::move(rels)),
      twists_(std::move(twists)),
      plain_(plain),
      ord_(ring_->order()),
      cache_(std::make_shared<Cache>()) {
  if (gens_.rows() != rank_ || rels_.rows() != rank_) throw DomainError("module matrices do not fit the ambient rank");
  if (!twists_.empty() && static_cast<int>(twists_.size()) != rank_) throw DomainError("twist count differs from rank");
}

PresentedModule PresentedModule::cokernel(RingPtr ring, PolyMatrix rels, std::vector<int> twists) {
  int r = rels.rows();
  auto id = identity_matrix(ring, r);
  return PresentedModule(std::move(ring), r, std::move(id), std::move(rels), std::move(twists), true);
}

PresentedModule PresentedModule::free(RingPtr ring, int rank, std::vector<int> twists) {
  return cokernel(std::move(ring), PolyMatrix(rank, 0), std::move(twists));
}

PresentedModule PresentedModule::subquotient(RingPtr ring, PolyMatrix gens, PolyMatrix rels, std::vector<int> twists) {
  int r = gens.rows();
  return PresentedModule(std::move(ring), r, std::move(gens), std::move(rels), std::move(twists), false);
}

const std::vector<ModVec>& PresentedModule::rel_gb() const {
  std::call_once(cache_->rel_once, [this] {
    GBOptions opt;
    opt.weights = twists_;
    cache_->rel = groebner(nonzero_columns(rels_, ord_), ord_, opt).basis;
  });
  return cache_->rel;
}

const std::vector<ModVec>& PresentedModule::sub_gb() const {
  std::call_once(cache_->sub_once, [this] {
    GBOptions opt;
    opt.weights = twists_;
    cache_->sub = groebner(nonzero_columns(hconcat(gens_, rels_), ord_), ord_, opt).basis;
  });
  return cache_->sub;
}

bool PresentedModule::in_relations(const std::vector<Poly>& col) const {
  return normal_form(to_vec(col, ord_), rel_gb(), ord_).empty();
}

bool PresentedModule::in_submodule(const std::vector<Poly>& col) const {
  if (plain_) return true;
  return normal_form(to_vec(col, ord_), sub_gb(), ord_).empty();
}

bool PresentedModule::is_zero() const {
  for (int j = 0; j < gens_.cols(); ++j)
    if (!in_relations(column(gens_, j))) return false;
  return true;
}

void PresentedModule::check_degrees(const PolyMatrix& m, const char* what) const {
  if (!graded()) throw UngradedError(std::string(what) + ": module has no twists");
  for (int j = 0; j < m.cols(); ++j) column_degree(m, j, twists_);
}

std::vector<int> PresentedModule::generator_degrees() const {
  check_degrees(rels_, "relations");
  if (!graded()) throw UngradedError("module has no twists");
  std::vector<int> out;
  for (int j = 0; j < gens_.cols(); ++j)
    if (auto d = column_degree(gens_, j, twists_)) out.push_back(*d);
  return out;
}

std::vector<long> PresentedModule::hilbert_values(int lo, int hi) const {
  check_degrees(rels_, "relations");
  check_degrees(gens_, "generators");
  std::vector<long> out;
  int nv = ring_->nvars();
  for (int d = lo; d <= hi; ++d) {
    long v = standard_count(rel_gb(), twists_, nv, d);
    if (!plain_) v -= standard_count(sub_gb(), twists_, nv, d);
    out.push_back(v);
  }
  return out;
}

PresentedModule PresentedModule::as_cokernel() const {
  if (plain_) return *this;
  auto s = syz_impl(hconcat(gens_, rels_), ring_, {}, {});
  PolyMatrix k1 = s.row_block(0, gens_.cols());
  std::vector<int> tw;
  if (graded()) {
    for (int j = 0; j < gens_.cols(); ++j) tw.push_back(column_degree(gens_, j, twists_).value_or(0));
  }
  return cokernel(ring_, k1, tw);
}

PolyMatrix syzygies(const PolyMatrix& a, const RingPtr& ring) { return syz_impl(a, ring, {}, {}); }

std::optional<PolyMatrix> lift(const PolyMatrix& a, const PolyMatrix& b, const RingPtr& ring) {
  if (a.rows() != b.rows()) throw DomainError("lift: row counts differ");
  int r = a.rows(), k = a.cols();
  PolyMatrix z(k, b.cols());
  if (r == 0) return z;
  ModuleOrder ord(ring->order());
  std::vector<ModVec> gens;
  for (int j = 0; j < k; ++j) {
    ModVec v = column_vec(a, j, ord);
    v.push_back({Monomial(), r + j, Rational(1)});
    gens.push_back(sorted_vec(std::move(v), ord));
  }
  GBOptions opt;
  opt.elim_cutoff = r;
  auto res = groebner(std::move(gens), ord, opt);
  for (int c = 0; c < b.cols(); ++c) {
    ModVec nf = normal_form(column_vec(b, c, ord), res.basis, ord);
    if (!nf.empty() && nf.front().comp < r) return std::nullopt;
    auto col = vec_to_column(nf, ring, k, r);
    for (int i = 0; i < k; ++i) z(i, c) = -col[static_cast<std::size_t>(i)];
  }
  if (!(a * z + (-b)).is_zero()) throw CertificateFailure("lift does not reproduce the target");
  return z;
}

HilbertProfile hilbert_profile(const PresentedModule& m, int D) {
  HilbertProfile p;
  p.values.assign(static_cast<std::size_t>(D + 1), 0);
  auto degs = m.generator_degrees();
  if (degs.empty() || m.is_zero()) return p;
  int lo = *std::min_element(degs.begin(), degs.end());
  int hi = *std::max_element(degs.begin(), degs.end());
  auto head = m.hilbert_values(lo, hi);
  for (std::size_t i = 0; i < head.size(); ++i)
    if (head[i] != 0) {
      p.zero = false;
      p.first_degree = lo + static_cast<int>(i);
      p.values = m.hilbert_values(p.first_degree, p.first_degree + D);
      return p;
    }
  return p;
}

bool hf_equal(const PresentedModule& a, const PresentedModule& b, int D) {
  auto pa = hilbert_profile(a, D), pb = hilbert_profile(b, D);
  if (pa.zero || pb.zero) return pa.zero == pb.zero;
  return pa.values == pb.values;
}

ModuleMap::ModuleMap(PresentedModule source, PresentedModule target, PolyMatrix matrix)
    : src_(std::move(source)), tgt_(std::move(target)), a_(std::move(matrix)) {
  if (a_.rows() != tgt_.ambient_rank() || a_.cols() != src_.ambient_rank())
    throw DomainError("map matrix does not fit the modules");
  if (!tgt_.is_cokernel()) {
    PolyMatrix ag = a_ * src_.gens();
    for (int j = 0; j < ag.cols(); ++j)
      if (!tgt_.in_submodule(column(ag, j)))
        throw CertificateFailure("generator " + std::to_string(j) + " leaves the target submodule");
  }
  PolyMatrix ar = a_ * src_.rels();
  for (int j = 0; j < ar.cols(); ++j)
    if (!tgt_.in_relations(column(ar, j)))
      throw CertificateFailure("relation " + std::to_string(j) + " does not map into the target relations");
}

PresentedModule kernel(const ModuleMap& f) {
  const auto& s = f.source();
  const auto& t = f.target();
  PolyMatrix ag = f.matrix() * s.gens();
  int k = ag.cols();
  std::vector<int> row_w = t.twists(), col_w;
  if (!row_w.empty()) {
    col_w = try_column_degrees(ag, row_w);
    auto rel_w = try_column_degrees(t.rels(), row_w);
    if (col_w.empty() || rel_w.empty()) {
      row_w.clear();
      col_w.clear();
    } else {
      col_w.insert(col_w.end(), rel_w.begin(), rel_w.end());
    }
  }
  PolyMatrix syz = syz_impl(hconcat(ag, t.rels()), s.ring(), row_w, col_w);
  PolyMatrix u = syz.row_block(0, k);
  PolyMatrix gens = s.is_cokernel() ? u : s.gens() * u;
  return PresentedModule::subquotient(s.ring(), gens, s.rels(), s.twists());
}

PresentedModule image(const ModuleMap& f) {
  return PresentedModule::subquotient(f.target().ring(), f.matrix() * f.source().gens(), f.target().rels(),
                                      f.target().twists());
}

PresentedModule cokernel(const ModuleMap& f) {
  const auto& t = f.target();
  PolyMatrix rels = hconcat(t.rels(), f.matrix() * f.source().gens());
  if (t.is_cokernel()) return PresentedModule::cokernel(t.ring(), rels, t.twists());
  return PresentedModule::subquotient(t.ring(), t.gens(), rels, t.twists());
}

MapPredicates map_predicates(const ModuleMap& f) {
  MapPredicates p;
  p.injective = kernel(f).is_zero();
  p.surjective = cokernel(f).is_zero();
  p.iso = p.injective && p.surjective;
  return p;
}

void ModuleComplex::certify() const {
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    PolyMatrix comp = maps[i + 1].matrix() * maps[i].matrix() * mods[i].gens();
    const auto& tgt = mods[i + 2];
    for (int j = 0; j < comp.cols(); ++j)
      if (!tgt.in_relations(column(comp, j)))
        throw CertificateFailure("composite of maps " + std::to_string(i) + " and " + std::to_string(i + 1) +
                                 " is not zero");
  }
}

PresentedModule ModuleComplex::homology_at(int i) const {
  if (i < 0 || i >= length()) throw DomainError("homology position out of range");
  PresentedModule k = static_cast<std::size_t>(i) < maps.size() ? kernel(maps[static_cast<std::size_t>(i)])
                                                                 : mods[static_cast<std::size_t>(i)];
  if (i == 0) return k;
  const auto& in = maps[static_cast<std::size_t>(i - 1)];
  PolyMatrix rels = hconcat(k.rels(), in.matrix() * in.source().gens());
  if (k.is_cokernel()) return PresentedModule::cokernel(k.ring(), rels, k.twists());
  return PresentedModule::subquotient(k.ring(), k.gens(), rels, k.twists());
}

PresentedModule ModuleComplex::homology_at_position(int pos, const RingPtr& ring) const {
  int i = pos - start;
  if (i < 0 || i >= length()) return PresentedModule::free(ring, 0, {});
  return homology_at(i);
}

ModuleComplex as_module_complex(const FreeComplex& c) {
  ModuleComplex out;
  for (const auto& comp : c.comps) out.mods.push_back(PresentedModule::free(c.ring, comp.rank, comp.twists));
  for (std::size_t i = 0; i < c.maps.size(); ++i) out.maps.emplace_back(out.mods[i], out.mods[i + 1], c.maps[i]);
  return out;
}

PresentedModule ext_power_cokernel(const RingPtr& ring, const PolyMatrix& chi, int p, std::vector<int> g_deg,
                                   std::vector<int> f_deg) {
  int n = chi.rows(), m = chi.cols();
  if (p < 0 || p > n) throw DomainError("exterior power degree out of range");
  if (g_deg.empty()) {
    auto d = infer_degrees(chi, PolyMatrix(0, n));
    if (d.graded) g_deg = d.g;
  }
  (void)f_deg;
  auto tgt = ml::subsets(n, p);
  auto src = p > 0 ? ml::subsets(n, p - 1) : std::vector<ml::Subset>{};
  std::map<ml::Subset, int> idx;
  for (std::size_t i = 0; i < tgt.size(); ++i) idx[tgt[i]] = static_cast<int>(i);
  PolyMatrix rels(static_cast<int>(tgt.size()), static_cast<int>(src.size()) * m);
  for (std::size_t s = 0; s < src.size(); ++s)
    for (int k = 0; k < m; ++k) {
      int col = static_cast<int>(s) * m + k;
      for (int i = 0; i < n; ++i) {
        if (chi(i, k).is_zero()) continue;
        auto w = ml::wedge_basis({i}, src[s]);
        if (!w) continue;
        rels(idx.at(w->second), col) += chi(i, k) * Rational(w->first);
      }
    }
  std::vector<int> tw;
  if (!g_deg.empty())
    for (const auto& s : tgt) {
      int d = 0;
      for (int j : s) d += g_deg[static_cast<std::size_t>(j)];
      tw.push_back(d);
    }
  return PresentedModule::cokernel(ring, rels, tw);
}

PresentedModule sym_power_cokernel(const RingPtr& ring, const PolyMatrix& psi, int p, std::vector<int> f_deg,
                                   std::vector<int> g_deg) {
  int m = psi.rows(), n = psi.cols();
  if (p < -1) throw DomainError("symmetric power degree below -1");
  if (f_deg.empty() || g_deg.empty()) {
    auto d = infer_degrees(PolyMatrix(n, 0), psi);
    if (d.graded) {
      f_deg = d.f;
      g_deg = d.g;
    } else {
      f_deg.clear();
      g_deg.clear();
    }
  }
  if (p == -1) {
    int e = n - m + 1;
    if (e < 0 || e > n) return PresentedModule::free(ring, 0, {});
    std::vector<int> gd, fd;
    for (int x : g_deg) gd.push_back(-x);
    for (int x : f_deg) fd.push_back(-x);
    return ext_power_cokernel(ring, psi.transpose(), e, gd, fd);
  }
  if (p == 0) {
    auto gens = max_minors_ideal(psi, ring).generators();
    PolyMatrix rels(1, static_cast<int>(gens.size()));
    for (std::size_t j = 0; j < gens.size(); ++j) rels(0, static_cast<int>(j)) = gens[j];
    return PresentedModule::cokernel(ring, rels, f_deg.empty() ? std::vector<int>{} : std::vector<int>{0});
  }
  auto tgt = ml::multisets(m, p), src = ml::multisets(m, p - 1);
  std::map<ml::Multiset, int> idx;
  for (std::size_t i = 0; i < tgt.size(); ++i) idx[tgt[i]] = static_cast<int>(i);
  PolyMatrix rels(static_cast<int>(tgt.size()), static_cast<int>(src.size()) * n);
  for (std::size_t s = 0; s < src.size(); ++s)
    for (int j = 0; j < n; ++j) {
      int col = static_cast<int>(s) * n + j;
      for (int i = 0; i < m; ++i)
        if (!psi(i, j).is_zero()) rels(idx.at(ml::multiset_add(src[s], i)), col) += psi(i, j);
    }
  std::vector<int> tw;
  if (!f_deg.empty())
    for (const auto& a : tgt) {
      int d = 0;
      for (int i : a) d += f_deg[static_cast<std::size_t>(i)];
      tw.push_back(d);
    }
  return PresentedModule::cokernel(ring, rels, tw);
}

PresentedModule tensor_free(const std::vector<int>& free_twists, const PresentedModule& m) {
  int k = static_cast<int>(free_twists.size());
  std::vector<int> tw;
  if (m.graded() && m.ambient_rank() > 0)
    for (int c = 0; c < k; ++c)
      for (int w : m.twists()) tw.push_back(free_twists[static_cast<std::size_t>(c)] + w);
  PolyMatrix rels = block_diag(m.rels(), k);
  if (m.is_cokernel()) return PresentedModule::cokernel(m.ring(), rels, tw);
  return PresentedModule::subquotient(m.ring(), block_diag(m.gens(), k), rels, tw);
}

}  // namespace koszul
