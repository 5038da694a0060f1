#pragma once

#include <memory>
#include <string>
#include <vector>

#include "koszul/matrix.hpp"
#include "koszul/poly.hpp"

namespace koszul {

/// Finite non-negative integer or INFINITE (the grade of the unit ideal).
class GradeValue {
 public:
  static GradeValue infinite() { return GradeValue(-1); }
  static GradeValue finite(int g) { return GradeValue(g); }

  bool is_infinite() const { return v_ < 0; }
  /// Throws DomainError when infinite.
  int value() const;
  std::string to_string() const;

  friend bool operator==(const GradeValue&, const GradeValue&) = default;
  /// Comparisons with integers treat INFINITE as larger than all of them.
  bool operator>(int k) const { return is_infinite() || v_ > k; }
  bool operator>=(int k) const { return is_infinite() || v_ >= k; }
  bool operator<(int k) const { return !is_infinite() && v_ < k; }
  bool operator<=(int k) const { return !is_infinite() && v_ <= k; }
  bool operator==(int k) const { return !is_infinite() && v_ == k; }

 private:
  explicit GradeValue(int v) : v_(v) {}
  int v_;
};

/// Ideal of a polynomial ring with a lazily computed reduced Groebner basis
/// in the ring's monomial order. Copies share the cache.
class IdealHandle {
 public:
  IdealHandle(RingPtr ring, std::vector<Poly> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }
  const std::vector<Poly>& gb() const;

  bool is_unit() const;
  bool is_zero() const { return gb().empty(); }
  Poly normal_form(const Poly& f) const;
  bool contains(const Poly& f) const { return normal_form(f).is_zero(); }
  bool contains(const IdealHandle& other) const;
  /// Same ideal, decided by reduced basis equality.
  bool same_as(const IdealHandle& other) const;

 private:
  struct Cache;
  RingPtr ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Reduced Groebner basis in an arbitrary order on the ideal's variables.
std::vector<Poly> groebner_basis(const IdealHandle& ideal, const MonomialOrder& ord);
Poly normal_form(const Poly& f, const IdealHandle& ideal);
bool radical_contains(const IdealHandle& ideal, const Poly& f);
/// Dimension of R/I. Throws DomainError for the unit ideal.
int krull_dimension(const IdealHandle& ideal);
/// Height, which equals grade in a polynomial ring.
GradeValue grade_of_ideal(const IdealHandle& ideal);
/// Ideal of all t x t minors.
IdealHandle minors_ideal(const PolyMatrix& m, int t, const RingPtr& ring);
/// Ideal of maximal minors; the unit ideal for a matrix with a zero dimension.
IdealHandle max_minors_ideal(const PolyMatrix& m, const RingPtr& ring);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int k);

}  // namespace koszul
