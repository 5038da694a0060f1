#pragma once

#include <gmpxx.h>

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "koszul/monomial.hpp"

namespace koszul {

using Rational = mpq_class;

/// Variable names plus the monomial order used for every Groebner basis
/// computed over this ring. Rings compare structurally.
class Ring {
 public:
  Ring(std::vector<std::string> vars, MonomialOrder order);

  static std::shared_ptr<const Ring> make(std::vector<std::string> vars,
                                          OrderKind kind = OrderKind::Grevlex);

  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const MonomialOrder& order() const { return order_; }
  /// -1 when the name is not a variable.
  int index_of(const std::string& name) const;
  /// "grevlex(x,y,z)"
  std::string descriptor() const;

  std::shared_ptr<const Ring> with_order(const MonomialOrder& ord) const;
  /// Same order kind, one extra variable appended last.
  std::shared_ptr<const Ring> with_extra_var(const std::string& name) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.vars_ == b.vars_ && a.order_ == b.order_;
  }

 private:
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

bool same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse polynomial over Q. Terms are kept strictly decreasing in the
/// ring order with no zero coefficients, so equality is term-wise. A
/// default-constructed Poly is the zero of an unspecified ring and adopts
/// the ring of whatever it is combined with.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly constant(RingPtr ring, const Rational& c);
  static Poly variable(RingPtr ring, int i);
  static Poly term(RingPtr ring, const Monomial& m, const Rational& c);
  /// Takes arbitrary terms, sorts and merges them.
  static Poly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Nonzero constant.
  bool is_unit() const { return terms_.size() == 1 && terms_[0].mono.is_one(); }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }
  Rational constant_coeff() const;

  /// -1 for the zero polynomial.
  int total_degree() const;
  /// Zero counts as homogeneous.
  bool is_homogeneous() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly pow(unsigned e) const;
  Poly mul_term(const Monomial& m, const Rational& c) const;

  /// Same polynomial in a ring whose variable list extends this one's.
  Poly with_ring(const RingPtr& r) const;

  friend bool operator==(const Poly& a, const Poly& b);

  std::string to_string() const;

 private:
  const RingPtr& common_ring(const Poly& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

std::string rational_to_string(const Rational& q);
std::string monomial_to_string(const Monomial& m, const Ring& r);

}  // namespace koszul
