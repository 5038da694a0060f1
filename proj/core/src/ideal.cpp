#include "koszul/ideal.hpp"

#include <mutex>

#include "koszul/errors.hpp"
#include "koszul/groebner.hpp"

namespace koszul {

int GradeValue::value() const {
  if (is_infinite()) throw DomainError("grade is infinite");
  return v_;
}

std::string GradeValue::to_string() const { return is_infinite() ? "INFINITE" : std::to_string(v_); }

struct IdealHandle::Cache {
  std::once_flag once;
  std::vector<Poly> gb;
};

IdealHandle::IdealHandle(RingPtr ring, std::vector<Poly> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens_) {
    if (!same_ring(g.ring(), ring_)) throw RingMismatch("generator from a different ring");
    if (!g.ring()) g = Poly(ring_);
  }
}

namespace {

std::vector<Poly> reduced_gb(const std::vector<Poly>& gens, const RingPtr& ring) {
  ModuleOrder ord(ring->order());
  std::vector<ModVec> in;
  for (const auto& g : gens)
    if (!g.is_zero()) in.push_back(poly_vec(g));
  auto res = groebner(std::move(in), ord);
  std::vector<Poly> out;
  for (const auto& v : res.basis) out.push_back(vec_poly(v, ring));
  return out;
}

}  // namespace

const std::vector<Poly>& IdealHandle::gb() const {
  std::call_once(cache_->once, [this] { cache_->gb = reduced_gb(gens_, ring_); });
  return cache_->gb;
}

bool IdealHandle::is_unit() const {
  const auto& g = gb();
  return g.size() == 1 && g[0].is_unit();
}

Poly IdealHandle::normal_form(const Poly& f) const {
  if (!same_ring(f.ring(), ring_)) throw RingMismatch("normal form across rings");
  ModuleOrder ord(ring_->order());
  std::vector<ModVec> g;
  for (const auto& p : gb()) g.push_back(poly_vec(p));
  return vec_poly(koszul::normal_form(poly_vec(f), g, ord), ring_);
}

bool IdealHandle::contains(const IdealHandle& other) const {
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

bool IdealHandle::same_as(const IdealHandle& other) const {
  if (!same_ring(ring_, other.ring_)) throw RingMismatch("comparing ideals across rings");
  return gb() == other.gb();
}

std::vector<Poly> groebner_basis(const IdealHandle& ideal, const MonomialOrder& ord) {
  if (ord == ideal.ring()->order()) return ideal.gb();
  RingPtr r = ideal.ring()->with_order(ord);
  std::vector<Poly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.with_ring(r));
  return reduced_gb(gens, r);
}

Poly normal_form(const Poly& f, const IdealHandle& ideal) { return ideal.normal_form(f); }

bool radical_contains(const IdealHandle& ideal, const Poly& f) {
  if (f.is_zero()) return true;
  const Ring& r = *ideal.ring();
  std::string fresh = "t_";
  while (r.index_of(fresh) >= 0) fresh += "_";
  RingPtr ext = r.with_extra_var(fresh);
  std::vector<Poly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.with_ring(ext));
  Poly t = Poly::variable(ext, r.nvars());
  gens.push_back(Poly::constant(ext, 1) - t * f.with_ring(ext));
  return IdealHandle(ext, std::move(gens)).is_unit();
}

int krull_dimension(const IdealHandle& ideal) {
  if (ideal.is_unit()) throw DomainError("dimension of the zero ring is undefined");
  int k = ideal.ring()->nvars();
  std::vector<unsigned> supports;
  for (const auto& g : ideal.gb()) {
    unsigned s = 0;
    const Monomial& lm = g.leading().mono;
    for (int i = 0; i < k; ++i)
      if (lm[i] > 0) s |= 1U << static_cast<unsigned>(i);
    supports.push_back(s);
  }
  int best = 0;
  for (unsigned mask = 0; mask < (1U << static_cast<unsigned>(k)); ++mask) {
    int bits = __builtin_popcount(mask);
    if (bits <= best) continue;
    bool independent = true;
    for (unsigned s : supports)
      if ((s & mask) == s) {
        independent = false;
        break;
      }
    if (independent) best = bits;
  }
  return best;
}

GradeValue grade_of_ideal(const IdealHandle& ideal) {
  if (ideal.is_unit()) return GradeValue::infinite();
  return GradeValue::finite(ideal.ring()->nvars() - krull_dimension(ideal));
}

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
  for (;;) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

IdealHandle minors_ideal(const PolyMatrix& m, int t, const RingPtr& ring) {
  if (t < 1 || t > std::min(m.rows(), m.cols())) throw DomainError("minor size out of range");
  std::vector<Poly> gens;
  for (const auto& rows : combinations(m.rows(), t))
    for (const auto& cols : combinations(m.cols(), t)) {
      Poly d = determinant(submatrix(m, rows, cols), ring);
      if (!d.is_zero()) gens.push_back(std::move(d));
    }
  return IdealHandle(ring, std::move(gens));
}

IdealHandle max_minors_ideal(const PolyMatrix& m, const RingPtr& ring) {
  int t = std::min(m.rows(), m.cols());
  if (t == 0) return IdealHandle(ring, {Poly::constant(ring, 1)});
  return minors_ideal(m, t, ring);
}

}  // namespace koszul
