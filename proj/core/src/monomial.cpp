#include "koszul/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "koszul/errors.hpp"

namespace koszul {

Monomial::Monomial(std::span<const int> exps) {
  if (exps.size() > kMaxVars) throw DomainError("too many variables");
  for (std::size_t i = 0; i < exps.size(); ++i) set(static_cast<int>(i), exps[i]);
}

Monomial Monomial::var(int i, int power) {
  Monomial m;
  m.set(i, power);
  return m;
}

void Monomial::set(int i, int e) {
  if (i < 0 || i >= kMaxVars) throw DomainError("variable index out of range");
  if (e < 0 || e > 0xFFFF) throw DomainError("exponent out of range");
  deg_ += e - exp_[static_cast<std::size_t>(i)];
  exp_[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(e);
}

bool Monomial::divides(const Monomial& o) const {
  if (deg_ > o.deg_) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (exp_[i] > o.exp_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& o) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (exp_[i] != 0 && o.exp_[i] != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    int e = exp_[i] + o.exp_[i];
    if (e > 0xFFFF) throw DomainError("exponent overflow");
    r.exp_[i] = static_cast<std::uint16_t>(e);
  }
  r.deg_ = deg_ + o.deg_;
  return r;
}

Monomial Monomial::quotient_of(const Monomial& num) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp_[i] = static_cast<std::uint16_t>(num.exp_[i] - exp_[i]);
  r.deg_ = num.deg_ - deg_;
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r;
  int d = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    r.exp_[i] = std::max(exp_[i], o.exp_[i]);
    d += r.exp_[i];
  }
  r.deg_ = d;
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (auto e : exp_) h = (h ^ e) * 1099511628211ULL;
  return h;
}

std::string order_name(OrderKind k) {
  switch (k) {
    case OrderKind::Grevlex: return "grevlex";
    case OrderKind::Lex: return "lex";
    case OrderKind::Grlex: return "grlex";
  }
  return "grevlex";
}

OrderKind order_from_name(const std::string& s) {
  if (s == "grevlex") return OrderKind::Grevlex;
  if (s == "lex") return OrderKind::Lex;
  if (s == "grlex") return OrderKind::Grlex;
  throw DomainError("unknown monomial order '" + s + "'");
}

MonomialOrder::MonomialOrder(OrderKind kind, int nvars) : kind_(kind), perm_(static_cast<std::size_t>(nvars)) {
  std::iota(perm_.begin(), perm_.end(), 0);
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<int> perm) : kind_(kind), perm_(std::move(perm)) {
  std::vector<int> s = perm_;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != static_cast<int>(i)) throw DomainError("variable permutation is not a permutation");
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ != OrderKind::Lex && a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  if (kind_ == OrderKind::Grevlex) {
    for (auto it = perm_.rbegin(); it != perm_.rend(); ++it) {
      int d = a[*it] - b[*it];
      if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
  }
  for (int v : perm_) {
    int d = a[v] - b[v];
    if (d != 0) return d < 0 ? -1 : 1;
  }
  return 0;
}

}  // namespace koszul
