#include "koszul/groebner.hpp"

#include <algorithm>
#include <map>

namespace koszul {

namespace {

// f[cur+1..] - c*m*g[1..], assuming the leading terms cancel exactly.
ModVec sub_mul_tail(const ModVec& f, std::size_t cur, const Rational& c, const Monomial& m, const ModVec& g,
                    const ModuleOrder& ord) {
  ModVec out;
  out.reserve(f.size() - cur + g.size());
  std::size_t i = cur + 1, j = 1;
  while (i < f.size() && j < g.size()) {
    Monomial gm = g[j].mono * m;
    int cmp = ord.compare(f[i].mono, f[i].comp, gm, g[j].comp);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, g[j].comp, -c * g[j].coeff});
      ++j;
    } else {
      Rational s = f[i].coeff - c * g[j].coeff;
      if (s != 0) out.push_back({gm, g[j].comp, s});
      ++i;
      ++j;
    }
  }
  for (; i < f.size(); ++i) out.push_back(f[i]);
  for (; j < g.size(); ++j) out.push_back({g[j].mono * m, g[j].comp, -c * g[j].coeff});
  return out;
}

ModVec scaled(const ModVec& g, const Monomial& m) {
  ModVec out = g;
  for (auto& t : out) t.mono = t.mono * m;
  return out;
}

void make_monic(ModVec& v) {
  if (v.empty() || v[0].coeff == 1) return;
  Rational inv = 1 / v[0].coeff;
  for (auto& t : v) t.coeff *= inv;
}

class Reducers {
 public:
  void add(const ModVec* g) { by_comp_[(*g)[0].comp].push_back(g); }
  void clear() { by_comp_.clear(); }
  const ModVec* find(const ModTerm& t) const {
    auto it = by_comp_.find(t.comp);
    if (it == by_comp_.end()) return nullptr;
    for (const ModVec* g : it->second)
      if ((*g)[0].mono.divides(t.mono)) return g;
    return nullptr;
  }

 private:
  std::map<int, std::vector<const ModVec*>> by_comp_;
};

// Reduces the leading term until it is irreducible or, with a cutoff,
// falls into the lower block. Afterwards reduces the remaining upper-block
// terms as a tail.
ModVec reduce(ModVec f, const Reducers& red, const ModuleOrder& ord, int cutoff) {
  ModVec rem;
  std::size_t cur = 0;
  while (cur < f.size()) {
    const ModTerm& lt = f[cur];
    if (cutoff >= 0 && lt.comp >= cutoff) break;
    const ModVec* g = red.find(lt);
    if (!g) {
      rem.push_back(lt);
      ++cur;
      continue;
    }
    Monomial m = (*g)[0].mono.quotient_of(lt.mono);
    Rational c = lt.coeff / (*g)[0].coeff;
    f = sub_mul_tail(f, cur, c, m, *g, ord);
    cur = 0;
  }
  for (; cur < f.size(); ++cur) rem.push_back(f[cur]);
  return rem;
}

struct Elem {
  ModVec v;
  int sugar = 0;
  bool active = true;
};

struct Pair {
  int i, j;
  Monomial lcm;
  int comp;
  int sugar;
};

class Engine {
 public:
  Engine(const ModuleOrder& ord, const GBOptions& opt) : ord_(ord), opt_(opt) {}

  GBResult run(std::vector<ModVec> gens) {
    std::vector<std::pair<int, ModVec>> input;
    for (const auto& g : gens)
      for (const auto& t : g)
        if (t.comp != 0) single_comp_ = false;
    for (auto& g : gens) {
      if (g.empty()) continue;
      int s = weighted_degree(g);
      input.emplace_back(s, std::move(g));
    }
    // low sugar first keeps intermediate growth down
    std::stable_sort(input.begin(), input.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [s, g] : input) insert(std::move(g), s);
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k)
        if (pair_less(pairs_[k], pairs_[best])) best = k;
      Pair p = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<long>(best));
      const ModVec& gi = elems_[static_cast<std::size_t>(p.i)].v;
      const ModVec& gj = elems_[static_cast<std::size_t>(p.j)].v;
      ModVec s = scaled(gi, gi[0].mono.quotient_of(p.lcm));
      s = sub_mul_tail(s, 0, 1, gj[0].mono.quotient_of(p.lcm), gj, ord_);
      insert(std::move(s), p.sugar);
    }
    return finish();
  }

 private:
  int weight(int comp) const {
    return comp < static_cast<int>(opt_.weights.size()) ? opt_.weights[static_cast<std::size_t>(comp)] : 0;
  }
  int weighted_degree(const ModVec& v) const {
    int d = 0;
    for (const auto& t : v) d = std::max(d, t.mono.degree() + weight(t.comp));
    return d;
  }
  bool in_lower_block(const ModTerm& t) const { return opt_.elim_cutoff >= 0 && t.comp >= opt_.elim_cutoff; }
  bool ideal_case() const {
    return opt_.elim_cutoff < 0 && single_comp_;
  }

  bool pair_less(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = ord_.compare(a.lcm, a.comp, b.lcm, b.comp);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  void rebuild_reducers() {
    reducers_.clear();
    for (const auto& e : elems_)
      if (e.active) reducers_.add(&e.v);
  }

  void insert(ModVec f, int sugar) {
    f = reduce(std::move(f), reducers_, ord_, opt_.elim_cutoff);
    if (f.empty()) return;
    if (in_lower_block(f[0])) {
      make_monic(f);
      eliminated_.push_back(std::move(f));
      return;
    }
    make_monic(f);
    update(std::move(f), sugar);
  }

  // Gebauer-Moeller installation of a new element.
  void update(ModVec h, int sugar) {
    int hi = static_cast<int>(elems_.size());
    const Monomial lth = h[0].mono;
    const int comp = h[0].comp;
    const bool use_product = ideal_case();

    std::vector<Pair> cand;
    for (int g = 0; g < hi; ++g) {
      const Elem& e = elems_[static_cast<std::size_t>(g)];
      if (!e.active || e.v[0].comp != comp) continue;
      const Monomial& ltg = e.v[0].mono;
      Monomial l = ltg.lcm(lth);
      int s = std::max(e.sugar + l.degree() - ltg.degree(), sugar + l.degree() - lth.degree());
      cand.push_back({g, hi, l, comp, s});
    }
    std::vector<Pair> kept;
    std::vector<bool> coprime_flag;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      bool cop = use_product && elems_[static_cast<std::size_t>(cand[a].i)].v[0].mono.coprime(lth);
      bool dominated = false;
      if (!cop) {
        for (std::size_t b = a + 1; b < cand.size() && !dominated; ++b)
          if (cand[b].lcm.divides(cand[a].lcm)) dominated = true;
        for (std::size_t b = 0; b < kept.size() && !dominated; ++b)
          if (kept[b].lcm.divides(cand[a].lcm)) dominated = true;
      }
      if (cop || !dominated) {
        kept.push_back(cand[a]);
        coprime_flag.push_back(cop);
      }
    }
    std::vector<Pair> next;
    for (const Pair& p : pairs_) {
      if (p.comp == comp && lth.divides(p.lcm)) {
        const Monomial& lti = elems_[static_cast<std::size_t>(p.i)].v[0].mono;
        const Monomial& ltj = elems_[static_cast<std::size_t>(p.j)].v[0].mono;
        if (!(lti.lcm(lth) == p.lcm) && !(ltj.lcm(lth) == p.lcm)) continue;
      }
      next.push_back(p);
    }
    for (std::size_t a = 0; a < kept.size(); ++a)
      if (!coprime_flag[a]) next.push_back(kept[a]);
    pairs_ = std::move(next);

    for (auto& e : elems_)
      if (e.active && e.v[0].comp == comp && lth.divides(e.v[0].mono)) e.active = false;
    elems_.push_back({std::move(h), sugar, true});
    rebuild_reducers();
  }

  GBResult finish() {
    GBResult res;
    res.eliminated = std::move(eliminated_);
    std::vector<ModVec> basis;
    for (auto& e : elems_)
      if (e.active) basis.push_back(e.v);
    if (opt_.elim_cutoff < 0) {
      for (std::size_t i = 0; i < basis.size(); ++i) {
        Reducers others;
        for (std::size_t j = 0; j < basis.size(); ++j)
          if (j != i) others.add(&basis[j]);
        ModVec tail(basis[i].begin() + 1, basis[i].end());
        ModVec r = reduce(std::move(tail), others, ord_, -1);
        r.insert(r.begin(), basis[i][0]);
        basis[i] = std::move(r);
      }
    }
    std::sort(basis.begin(), basis.end(),
              [&](const ModVec& a, const ModVec& b) { return ord_.compare(a[0], b[0]) > 0; });
    res.basis = std::move(basis);
    return res;
  }

  const ModuleOrder& ord_;
  const GBOptions& opt_;
  std::vector<Elem> elems_;
  std::vector<Pair> pairs_;
  std::vector<ModVec> eliminated_;
  Reducers reducers_;
  bool single_comp_ = true;
};

}  // namespace

GBResult groebner(std::vector<ModVec> gens, const ModuleOrder& ord, const GBOptions& opt) {
  return Engine(ord, opt).run(std::move(gens));
}

ModVec normal_form(ModVec f, const std::vector<ModVec>& gb, const ModuleOrder& ord) {
  Reducers red;
  for (const auto& g : gb)
    if (!g.empty()) red.add(&g);
  return reduce(std::move(f), red, ord, -1);
}

ModVec sorted_vec(std::vector<ModTerm> terms, const ModuleOrder& ord) {
  std::sort(terms.begin(), terms.end(), [&](const ModTerm& a, const ModTerm& b) { return ord.compare(a, b) > 0; });
  ModVec out;
  for (auto& t : terms) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

ModVec column_vec(const PolyMatrix& m, int col, const ModuleOrder& ord, int comp_offset) {
  std::vector<ModTerm> terms;
  for (int i = 0; i < m.rows(); ++i)
    for (const auto& t : m(i, col).terms()) terms.push_back({t.mono, i + comp_offset, t.coeff});
  return sorted_vec(std::move(terms), ord);
}

std::vector<ModVec> columns_of(const PolyMatrix& m, const ModuleOrder& ord) {
  std::vector<ModVec> out;
  out.reserve(static_cast<std::size_t>(m.cols()));
  for (int j = 0; j < m.cols(); ++j) out.push_back(column_vec(m, j, ord));
  return out;
}

std::vector<Poly> vec_to_column(const ModVec& v, const RingPtr& ring, int rank, int comp_offset) {
  std::vector<std::vector<Term>> parts(static_cast<std::size_t>(rank));
  for (const auto& t : v) {
    int c = t.comp - comp_offset;
    if (c < 0 || c >= rank) continue;
    parts[static_cast<std::size_t>(c)].push_back({t.mono, t.coeff});
  }
  std::vector<Poly> out;
  out.reserve(static_cast<std::size_t>(rank));
  for (auto& p : parts) out.push_back(Poly::from_terms(ring, std::move(p)));
  return out;
}

ModVec poly_vec(const Poly& p) {
  ModVec v;
  v.reserve(p.size());
  for (const auto& t : p.terms()) v.push_back({t.mono, 0, t.coeff});
  return v;
}

Poly vec_poly(const ModVec& v, const RingPtr& ring) {
  std::vector<Term> terms;
  for (const auto& t : v) terms.push_back({t.mono, t.coeff});
  return Poly::from_terms(ring, std::move(terms));
}

}  // namespace koszul
