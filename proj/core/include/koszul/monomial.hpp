#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace koszul {

inline constexpr int kMaxVars = 16;

/// Exponent vector with a cached total degree. Unused slots are zero, so
/// arithmetic never needs the ring's variable count.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const int> exps);

  static Monomial var(int i, int power = 1);

  int operator[](int i) const { return exp_[static_cast<std::size_t>(i)]; }
  void set(int i, int e);
  int degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  bool divides(const Monomial& o) const;
  bool coprime(const Monomial& o) const;
  Monomial operator*(const Monomial& o) const;
  /// Requires divides(*this, num); caller's responsibility.
  Monomial quotient_of(const Monomial& num) const;
  Monomial lcm(const Monomial& o) const;

  std::size_t hash() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint16_t, kMaxVars> exp_{};
  int deg_ = 0;
};

enum class OrderKind { Grevlex, Lex, Grlex };

std::string order_name(OrderKind k);
OrderKind order_from_name(const std::string& s);

/// Total multiplicative order. perm lists variables from most to least
/// significant; the default is the identity.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(OrderKind kind, int nvars);
  MonomialOrder(OrderKind kind, std::vector<int> perm);

  OrderKind kind() const { return kind_; }
  const std::vector<int>& perm() const { return perm_; }

  /// Negative, zero or positive as a is smaller, equal or larger than b.
  int compare(const Monomial& a, const Monomial& b) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  OrderKind kind_ = OrderKind::Grevlex;
  std::vector<int> perm_;
};

}  // namespace koszul
