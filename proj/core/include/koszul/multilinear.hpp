#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "koszul/matrix.hpp"
#include "koszul/poly.hpp"

// Basis combinatorics for exterior, symmetric and divided powers of a free
// module with a fixed standard basis. Indices are 0-based internally; the
// printed forms e[..], s[..], d[..] are 1-based.
//
// Enumeration order: p-subsets and p-multisets of {0..n-1} in lexicographic
// order. Every matrix in the library is written in these bases.
namespace koszul::ml {

using Subset = std::vector<int>;
using Multiset = std::vector<int>;

std::vector<Subset> subsets(int n, int p);
std::vector<Multiset> multisets(int n, int p);
long binomial(int n, int k);
/// Number of p-multisets of an n-set; zero for p < 0.
long multichoose(int n, int p);

/// Sign of the permutation sorting a++b; zero when an index repeats.
int concat_sign(std::span<const int> a, std::span<const int> b);

/// e_A ^ e_B as (sign, A u B); nullopt when A and B meet.
std::optional<std::pair<int, Subset>> wedge_basis(const Subset& a, const Subset& b);
/// e_S -> e_T* as (sign, S \ T); nullopt unless T is contained in S.
std::optional<std::pair<int, Subset>> contract_basis(const Subset& s, const Subset& t);

Multiset multiset_add(const Multiset& m, int i);
/// nullopt when i does not occur.
std::optional<Multiset> multiset_remove(const Multiset& m, int i);
std::vector<int> exponents(const Multiset& m, int n);

std::string subset_label(const Subset& s);
std::string multiset_label(const Multiset& m);
/// d[k1;..;kn]: divided-power exponents.
std::string divided_label(const Multiset& m, int n);

/// Rational linear combination of exterior basis elements.
struct ExtElem {
  int n = 0;
  std::map<Subset, Rational> terms;

  static ExtElem basis(int n, Subset s, Rational c = 1);
  bool is_zero() const { return terms.empty(); }
  /// -1 for zero or mixed degree.
  int degree() const;
  ExtElem& operator+=(const ExtElem& o);
  friend ExtElem operator+(ExtElem a, const ExtElem& b) { return a += b; }
  friend ExtElem operator*(const Rational& c, ExtElem a);
  friend bool operator==(const ExtElem& a, const ExtElem& b) { return a.n == b.n && a.terms == b.terms; }
  std::string to_string() const;
};

ExtElem wedge(const ExtElem& x, const ExtElem& y);
/// y -> z*, z* read as an element of the exterior algebra of the dual.
ExtElem contract(const ExtElem& y, const ExtElem& z_star);
/// Pairing z*(x) for degree-one elements.
Rational pairing(const ExtElem& z_star, const ExtElem& x);

bool antiderivation_check(const ExtElem& x, const ExtElem& y, const ExtElem& z_star);
/// Throws DomainError when some z_j*(x_i) != 0.
bool assoc_check(const std::vector<ExtElem>& xs, const ExtElem& y, const std::vector<ExtElem>& z_stars);

QMatrix theta_matrix(int n, int p);
/// Rows indexed by (n-p)-subsets T (dual basis), columns by p-subsets S;
/// entry = sign(S, T) when T is the complement of S.
QMatrix omega_matrix(int n, int p);

/// Rational combination of divided-power basis monomials, keyed by the
/// multiset listing each h_i with multiplicity equal to its exponent.
struct DivElem {
  int n = 0;
  std::map<Multiset, Rational> terms;

  static DivElem basis(int n, Multiset m, Rational c = 1);
  friend bool operator==(const DivElem& a, const DivElem& b) { return a.n == b.n && a.terms == b.terms; }
  DivElem& operator+=(const DivElem& o);
};

/// h* acting as a derivation, h* = sum_j coeffs[j] h_j*.
DivElem divided_action(const std::vector<Rational>& h_star, const DivElem& c);
/// Product in D(H): h^(a) h^(b) = C(a+b, a) h^(a+b) per variable.
DivElem divided_product(const DivElem& a, const DivElem& b);

}  // namespace koszul::ml
