#include "koszul/poly.hpp"

#include <algorithm>
#include <sstream>

#include "koszul/errors.hpp"

namespace koszul {

Ring::Ring(std::vector<std::string> vars, MonomialOrder order) : vars_(std::move(vars)), order_(std::move(order)) {
  if (vars_.size() > static_cast<std::size_t>(kMaxVars)) throw DomainError("at most 16 variables are supported");
  if (order_.perm().size() != vars_.size()) throw DomainError("order permutation size differs from variable count");
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j]) throw DomainError("duplicate variable '" + vars_[i] + "'");
}

RingPtr Ring::make(std::vector<std::string> vars, OrderKind kind) {
  int n = static_cast<int>(vars.size());
  return std::make_shared<const Ring>(std::move(vars), MonomialOrder(kind, n));
}

int Ring::index_of(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

std::string Ring::descriptor() const {
  std::string s = order_name(order_.kind()) + "(";
  for (std::size_t i = 0; i < order_.perm().size(); ++i) {
    if (i) s += ",";
    s += vars_[static_cast<std::size_t>(order_.perm()[i])];
  }
  return s + ")";
}

RingPtr Ring::with_order(const MonomialOrder& ord) const { return std::make_shared<const Ring>(vars_, ord); }

RingPtr Ring::with_extra_var(const std::string& name) const {
  auto v = vars_;
  v.push_back(name);
  auto perm = order_.perm();
  perm.push_back(static_cast<int>(vars_.size()));
  return std::make_shared<const Ring>(std::move(v), MonomialOrder(order_.kind(), std::move(perm)));
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return !a || !b || a == b || *a == *b; }

Poly Poly::constant(RingPtr ring, const Rational& c) { return term(std::move(ring), Monomial{}, c); }

Poly Poly::variable(RingPtr ring, int i) {
  if (i < 0 || i >= ring->nvars()) throw DomainError("variable index out of range");
  return term(std::move(ring), Monomial::var(i), 1);
}

Poly Poly::term(RingPtr ring, const Monomial& m, const Rational& c) {
  Poly p(std::move(ring));
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
  Poly p(std::move(ring));
  const auto& ord = p.ring_->order();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Rational Poly::constant_coeff() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return 0;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Poly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

const RingPtr& Poly::common_ring(const Poly& o) const {
  if (!same_ring(ring_, o.ring_))
    throw RingMismatch("operands live in " + ring_->descriptor() + " and " + o.ring_->descriptor());
  return ring_ ? ring_ : o.ring_;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// a + sign*b, both sorted decreasing.
std::vector<Term> merge_terms(const std::vector<Term>& a, std::span<const Term> b, int sign,
                              const MonomialOrder& ord) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = ord.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, sign > 0 ? b[j].coeff : Rational(-b[j].coeff)});
      ++j;
    } else {
      Rational s = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (s != 0) out.push_back({a[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].mono, sign > 0 ? b[j].coeff : Rational(-b[j].coeff)});
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  ring_ = common_ring(o);
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, 1, ring_->order());
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  ring_ = common_ring(o);
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, -1, ring_->order());
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  ring_ = common_ring(o);
  if (terms_.empty()) return *this;
  if (o.terms_.empty()) {
    terms_.clear();
    return *this;
  }
  if (o.terms_.size() == 1) {
    *this = mul_term(o.terms_[0].mono, o.terms_[0].coeff);
    return *this;
  }
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, a.coeff * b.coeff});
  *this = from_terms(ring_, std::move(prod));
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Poly Poly::mul_term(const Monomial& m, const Rational& c) const {
  Poly r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

Poly Poly::pow(unsigned e) const {
  if (!ring_) {
    if (e == 0) throw DomainError("0^0 of a ring-less zero polynomial");
    return *this;
  }
  Poly result = constant(ring_, 1), base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

Poly Poly::with_ring(const RingPtr& r) const {
  if (ring_) {
    const auto& a = ring_->vars();
    const auto& b = r->vars();
    if (a.size() > b.size() || !std::equal(a.begin(), a.end(), b.begin()))
      throw RingMismatch("variables of " + ring_->descriptor() + " are not a prefix of " + r->descriptor());
  }
  return from_terms(r, terms_);
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.terms_.empty()) return true;
  if (!same_ring(a.ring_, b.ring_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::string monomial_to_string(const Monomial& m, const Ring& r) {
  std::string s;
  for (int i = 0; i < r.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += r.vars()[static_cast<std::size_t>(i)];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    bool neg = t.coeff < 0;
    Rational a = neg ? Rational(-t.coeff) : t.coeff;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_to_string(t.mono, *ring_);
    if (mono.empty()) {
      s += rational_to_string(a);
    } else if (a == 1) {
      s += mono;
    } else {
      s += rational_to_string(a) + "*" + mono;
    }
  }
  return s;
}

}  // namespace koszul
