#include "koszul/multilinear.hpp"

#include <algorithm>

#include "koszul/errors.hpp"
#include "koszul/ideal.hpp"

namespace koszul::ml {

std::vector<Subset> subsets(int n, int p) { return combinations(n, p); }

std::vector<Multiset> multisets(int n, int p) {
  std::vector<Multiset> out;
  if (p < 0 || (n <= 0 && p > 0)) return out;
  Multiset m(static_cast<std::size_t>(p), 0);
  for (;;) {
    out.push_back(m);
    int i = p - 1;
    while (i >= 0 && m[static_cast<std::size_t>(i)] == n - 1) --i;
    if (i < 0) break;
    int v = m[static_cast<std::size_t>(i)] + 1;
    for (int j = i; j < p; ++j) m[static_cast<std::size_t>(j)] = v;
  }
  return out;
}

long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long multichoose(int n, int p) {
  if (p < 0) return 0;
  if (p == 0) return 1;
  return binomial(n + p - 1, p);
}

int concat_sign(std::span<const int> a, std::span<const int> b) {
  std::vector<int> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  int inv = 0;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i] == all[j]) return 0;
      if (all[i] > all[j]) ++inv;
    }
  return inv % 2 ? -1 : 1;
}

std::optional<std::pair<int, Subset>> wedge_basis(const Subset& a, const Subset& b) {
  int s = concat_sign(a, b);
  if (s == 0) return std::nullopt;
  Subset u = a;
  u.insert(u.end(), b.begin(), b.end());
  std::sort(u.begin(), u.end());
  return std::make_pair(s, u);
}

std::optional<std::pair<int, Subset>> contract_basis(const Subset& s, const Subset& t) {
  if (!std::includes(s.begin(), s.end(), t.begin(), t.end())) return std::nullopt;
  Subset rest;
  std::set_difference(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(rest));
  return std::make_pair(concat_sign(t, rest), rest);
}

Multiset multiset_add(const Multiset& m, int i) {
  Multiset r = m;
  r.insert(std::upper_bound(r.begin(), r.end(), i), i);
  return r;
}

std::optional<Multiset> multiset_remove(const Multiset& m, int i) {
  auto it = std::lower_bound(m.begin(), m.end(), i);
  if (it == m.end() || *it != i) return std::nullopt;
  Multiset r = m;
  r.erase(r.begin() + (it - m.begin()));
  return r;
}

std::vector<int> exponents(const Multiset& m, int n) {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  for (int i : m) e[static_cast<std::size_t>(i)]++;
  return e;
}

namespace {

std::string list_label(char tag, const std::vector<int>& v, int shift, char sep) {
  std::string s(1, tag);
  s += "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i] + shift);
  }
  return s + "]";
}

}  // namespace

std::string subset_label(const Subset& s) { return list_label('e', s, 1, ','); }
std::string multiset_label(const Multiset& m) { return list_label('s', m, 1, ','); }
std::string divided_label(const Multiset& m, int n) { return list_label('d', exponents(m, n), 0, ';'); }

ExtElem ExtElem::basis(int n, Subset s, Rational c) {
  ExtElem e;
  e.n = n;
  if (c != 0) e.terms.emplace(std::move(s), c);
  return e;
}

int ExtElem::degree() const {
  int d = -1;
  for (const auto& [s, c] : terms) {
    int k = static_cast<int>(s.size());
    if (d >= 0 && d != k) return -1;
    d = k;
  }
  return d;
}

ExtElem& ExtElem::operator+=(const ExtElem& o) {
  n = std::max(n, o.n);
  for (const auto& [s, c] : o.terms) {
    Rational& v = terms[s];
    v += c;
    if (v == 0) terms.erase(s);
  }
  return *this;
}

ExtElem operator*(const Rational& c, ExtElem a) {
  if (c == 0) a.terms.clear();
  for (auto& [s, v] : a.terms) v *= c;
  return a;
}

std::string ExtElem::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [s, c] : terms) {
    if (!out.empty()) out += " + ";
    out += c.get_str() + "*" + subset_label(s);
  }
  return out;
}

ExtElem wedge(const ExtElem& x, const ExtElem& y) {
  ExtElem r;
  r.n = std::max(x.n, y.n);
  for (const auto& [a, ca] : x.terms)
    for (const auto& [b, cb] : y.terms)
      if (auto w = wedge_basis(a, b)) r += ExtElem::basis(r.n, w->second, ca * cb * w->first);
  return r;
}

ExtElem contract(const ExtElem& y, const ExtElem& z_star) {
  ExtElem r;
  r.n = std::max(y.n, z_star.n);
  for (const auto& [s, cs] : y.terms)
    for (const auto& [t, ct] : z_star.terms)
      if (auto c = contract_basis(s, t)) r += ExtElem::basis(r.n, c->second, cs * ct * c->first);
  return r;
}

Rational pairing(const ExtElem& z_star, const ExtElem& x) {
  Rational acc = 0;
  for (const auto& [t, ct] : z_star.terms)
    for (const auto& [s, cs] : x.terms)
      if (t.size() == 1 && s == t) acc += ct * cs;
  return acc;
}

bool antiderivation_check(const ExtElem& x, const ExtElem& y, const ExtElem& z_star) {
  int d = x.degree();
  if (!x.is_zero() && d < 0) throw DomainError("antiderivation check needs a homogeneous x");
  ExtElem lhs = contract(wedge(x, y), z_star);
  ExtElem rhs = wedge(contract(x, z_star), y) + Rational(d % 2 ? -1 : 1) * wedge(x, contract(y, z_star));
  return lhs == rhs;
}

bool assoc_check(const std::vector<ExtElem>& xs, const ExtElem& y, const std::vector<ExtElem>& z_stars) {
  for (const auto& x : xs)
    for (const auto& z : z_stars)
      if (pairing(z, x) != 0) throw DomainError("assoc_check precondition: some z*(x) is nonzero");
  int n = y.n;
  for (const auto& x : xs) n = std::max(n, x.n);
  ExtElem xprod = ExtElem::basis(n, {});
  for (const auto& x : xs) xprod = wedge(xprod, x);
  ExtElem zprod = ExtElem::basis(n, {});
  for (const auto& z : z_stars) zprod = wedge(zprod, z);
  std::size_t l = xs.size(), p = z_stars.size();
  ExtElem lhs = wedge(xprod, contract(y, zprod));
  ExtElem rhs = Rational((l * p) % 2 ? -1 : 1) * contract(wedge(xprod, y), zprod);
  return lhs == rhs;
}

QMatrix theta_matrix(int n, int p) {
  if (p < 0 || p > n) throw DomainError("theta degree out of range");
  int k = static_cast<int>(binomial(n, p));
  QMatrix m(k, k, 0);
  for (int i = 0; i < k; ++i) m(i, i) = 1;
  return m;
}

QMatrix omega_matrix(int n, int p) {
  if (p < 0 || p > n) throw DomainError("omega degree out of range");
  auto src = subsets(n, p);
  auto tgt = subsets(n, n - p);
  QMatrix m(static_cast<int>(tgt.size()), static_cast<int>(src.size()), 0);
  for (std::size_t j = 0; j < src.size(); ++j)
    for (std::size_t i = 0; i < tgt.size(); ++i) {
      int s = concat_sign(src[j], tgt[i]);
      if (s != 0) m(static_cast<int>(i), static_cast<int>(j)) = s;
    }
  return m;
}

DivElem DivElem::basis(int n, Multiset m, Rational c) {
  DivElem e;
  e.n = n;
  if (c != 0) e.terms.emplace(std::move(m), c);
  return e;
}

DivElem& DivElem::operator+=(const DivElem& o) {
  n = std::max(n, o.n);
  for (const auto& [m, c] : o.terms) {
    Rational& v = terms[m];
    v += c;
    if (v == 0) terms.erase(m);
  }
  return *this;
}

DivElem divided_action(const std::vector<Rational>& h_star, const DivElem& c) {
  DivElem r;
  r.n = c.n;
  for (const auto& [m, cm] : c.terms)
    for (std::size_t j = 0; j < h_star.size(); ++j) {
      if (h_star[j] == 0) continue;
      if (auto d = multiset_remove(m, static_cast<int>(j))) r += DivElem::basis(r.n, *d, cm * h_star[j]);
    }
  return r;
}

DivElem divided_product(const DivElem& a, const DivElem& b) {
  DivElem r;
  r.n = std::max(a.n, b.n);
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      auto ea = exponents(ma, r.n), eb = exponents(mb, r.n);
      Rational coeff = ca * cb;
      for (int i = 0; i < r.n; ++i)
        coeff *= static_cast<long>(binomial(ea[static_cast<std::size_t>(i)] + eb[static_cast<std::size_t>(i)], ea[static_cast<std::size_t>(i)]));
      Multiset m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      std::sort(m.begin(), m.end());
      r += DivElem::basis(r.n, m, coeff);
    }
  return r;
}

}  // namespace koszul::ml
