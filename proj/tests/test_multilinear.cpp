#include "doctest.h"
#include "koszul/errors.hpp"
#include "koszul/multilinear.hpp"

using namespace koszul;
using namespace koszul::ml;

namespace {

ExtElem E(int n, Subset s, Rational c = 1) { return ExtElem::basis(n, std::move(s), c); }

// Oracle: the permutation-sum definition of contraction for a single basis
// element e_S contracted by e_T*, summing over all orderings of S that are
// increasing on the first |T| and on the remaining positions.
ExtElem contract_by_definition(int n, const Subset& s, const Subset& t) {
  ExtElem r;
  r.n = n;
  std::size_t k = s.size(), p = t.size();
  if (p > k) return r;
  // choose which positions of S go first
  for (const auto& first : subsets(static_cast<int>(k), static_cast<int>(p))) {
    std::vector<int> order;
    std::vector<bool> used(k, false);
    for (int i : first) {
      order.push_back(i);
      used[static_cast<std::size_t>(i)] = true;
    }
    for (std::size_t i = 0; i < k; ++i)
      if (!used[i]) order.push_back(static_cast<int>(i));
    int inv = 0;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b) inv += order[a] > order[b];
    // det(t_j*(s_sigma(i))) for standard basis vectors is +-1 or 0
    std::vector<int> chosen;
    for (int i : first) chosen.push_back(s[static_cast<std::size_t>(i)]);
    if (chosen != t) continue;  // det of a permutation matrix between sorted lists
    Subset rest;
    for (std::size_t i = p; i < k; ++i) rest.push_back(s[static_cast<std::size_t>(order[i])]);
    r += E(n, rest, inv % 2 ? -1 : 1);
  }
  return r;
}

}  // namespace

TEST_CASE("enumeration order is lexicographic") {
  CHECK(subsets(4, 2) == std::vector<Subset>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(multisets(2, 2) == std::vector<Multiset>{{0, 0}, {0, 1}, {1, 1}});
  CHECK(multisets(3, 0) == std::vector<Multiset>{{}});
  CHECK(multisets(0, 1).empty());
  CHECK(multichoose(3, 2) == 6);
  CHECK(binomial(5, 2) == 10);
  for (int n = 0; n <= 5; ++n)
    for (int p = 0; p <= 4; ++p) {
      CHECK(static_cast<long>(subsets(n, p).size()) == binomial(n, p));
      CHECK(static_cast<long>(multisets(n, p).size()) == multichoose(n, p));
    }
  CHECK(subset_label({0, 2, 3}) == "e[1,3,4]");
  CHECK(multiset_label({0, 0, 1}) == "s[1,1,2]");
  CHECK(divided_label({0, 0, 1}, 2) == "d[2;1]");
}

TEST_CASE("contraction examples") {
  CHECK(contract(E(2, {0, 1}), E(2, {0})) == E(2, {1}));
  CHECK(contract(E(2, {0, 1}), E(2, {1})) == E(2, {0}, -1));
  CHECK(contract(E(2, {0, 1}), E(2, {0, 1})) == E(2, {}));
  ExtElem x = E(3, {0, 2}, 3) + E(3, {1}, -2);
  CHECK(contract(x, E(3, {})) == x);
  CHECK(contract(E(3, {0}), E(3, {0, 1})).is_zero());
}

TEST_CASE("contraction matches the permutation-sum definition") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= n; ++k)
      for (const auto& s : subsets(n, k))
        for (int p = 0; p <= n; ++p)
          for (const auto& t : subsets(n, p)) CHECK(contract(E(n, s), E(n, t)) == contract_by_definition(n, s, t));
}

TEST_CASE("antiderivation identity") {
  ExtElem lhs = contract(wedge(E(2, {0}), E(2, {1})), E(2, {1}));
  CHECK(lhs == E(2, {0}, -1));
  CHECK(antiderivation_check(E(2, {0}), E(2, {1}), E(2, {1})));
  CHECK(antiderivation_check(E(3, {}), E(3, {0, 2}) + E(3, {1}), E(3, {2})));
  // degree-2 x, degree-1 y in rank 4, every basis z*
  ExtElem x = E(4, {0, 1}, 2) + E(4, {1, 3}, -1) + E(4, {2, 3});
  ExtElem y = E(4, {0}) + E(4, {2}, 5);
  for (int j = 0; j < 4; ++j) CHECK(antiderivation_check(x, y, E(4, {j})));
  for (int n = 1; n <= 4; ++n)
    for (int a = 0; a <= n; ++a)
      for (const auto& sa : subsets(n, a))
        for (int b = 0; a + b <= n; ++b)
          for (const auto& sb : subsets(n, b))
            for (int j = 0; j < n; ++j) CHECK(antiderivation_check(E(n, sa), E(n, sb), E(n, {j})));
}

TEST_CASE("associativity with disjoint supports") {
  CHECK(assoc_check({E(3, {0})}, E(3, {1, 2}), {E(3, {1})}));
  CHECK(wedge(E(3, {0}), contract(E(3, {1, 2}), E(3, {1}))) == E(3, {0, 2}));
  CHECK(assoc_check({}, E(3, {0, 1}) + E(3, {2}), {}));
  CHECK_THROWS_AS(assoc_check({E(3, {0})}, E(3, {1}), {E(3, {0})}), DomainError);
  CHECK(assoc_check({E(4, {0}), E(4, {1})}, E(4, {2, 3}) + E(4, {3}), {E(4, {3})}));
  CHECK(assoc_check({E(4, {0})}, E(4, {1, 2, 3}), {E(4, {1}), E(4, {3})}));
}

TEST_CASE("right-module law") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= n; ++k)
      for (const auto& y : subsets(n, k))
        for (int p = 0; p <= 2; ++p)
          for (const auto& a : subsets(n, p))
            for (int q = 0; q <= 2; ++q)
              for (const auto& b : subsets(n, q))
                CHECK(contract(contract(E(n, y), E(n, a)), E(n, b)) == contract(E(n, y), wedge(E(n, a), E(n, b))));
}

TEST_CASE("theta and its compatibility with contraction") {
  CHECK(theta_matrix(3, 2) == QMatrix(3, 3, 0) + [] {
          QMatrix i(3, 3, 0);
          for (int k = 0; k < 3; ++k) i(k, k) = 1;
          return i;
        }());
  CHECK(theta_matrix(4, 0).rows() == 1);
  CHECK(theta_matrix(4, 4)(0, 0) == 1);
  CHECK_THROWS_AS(theta_matrix(3, 4), DomainError);
  for (int n = 1; n <= 4; ++n)
    for (int q = 0; q <= 2; ++q)
      for (const auto& ys : subsets(n, q))
        for (int p = 0; p + q <= n; ++p) {
          auto src = subsets(n, p), tgt = subsets(n, p + q);
          // left multiplication by y* on the dual exterior algebra
          QMatrix left(static_cast<int>(tgt.size()), static_cast<int>(src.size()), 0);
          // contraction by y*: from degree p+q down to p
          QMatrix contr(static_cast<int>(src.size()), static_cast<int>(tgt.size()), 0);
          for (std::size_t j = 0; j < src.size(); ++j)
            for (std::size_t i = 0; i < tgt.size(); ++i) {
              auto w = wedge(E(n, ys), E(n, src[j]));
              if (auto it = w.terms.find(tgt[i]); it != w.terms.end())
                left(static_cast<int>(i), static_cast<int>(j)) = it->second;
              auto c = contract(E(n, tgt[i]), E(n, ys));
              if (auto it = c.terms.find(src[j]); it != c.terms.end())
                contr(static_cast<int>(j), static_cast<int>(i)) = it->second;
            }
          CHECK(theta_matrix(n, p + q) * left == contr.transpose() * theta_matrix(n, p));
        }
}

TEST_CASE("omega maps") {
  QMatrix w = omega_matrix(2, 1);
  // rows: e1*, e2* of the complementary degree; columns: e1, e2
  CHECK(w(1, 0) == 1);   // omega(e1 ^ e2)
  CHECK(w(0, 1) == -1);  // omega(e2 ^ e1)
  CHECK(omega_matrix(3, 0)(0, 0) == 1);
  QMatrix w31 = omega_matrix(3, 1);
  CHECK(w31(2, 0) == 1);  // (e1, e2^e3)
  for (int n = 0; n <= 5; ++n)
    for (int p = 0; p <= n; ++p) {
      Rational d = determinant(omega_matrix(n, p));
      CHECK((d == 1 || d == -1));
    }
  CHECK_THROWS_AS(omega_matrix(2, 3), DomainError);
}

TEST_CASE("top-form contraction agrees with the orientation pairing") {
  for (int n = 1; n <= 4; ++n) {
    Subset all;
    for (int i = 0; i < n; ++i) all.push_back(i);
    for (int p = 0; p <= n; ++p) {
      QMatrix w = omega_matrix(n, p);
      auto src = subsets(n, p), tgt = subsets(n, n - p);
      for (std::size_t j = 0; j < src.size(); ++j)
        for (std::size_t i = 0; i < tgt.size(); ++i) {
          auto top = contract(wedge(E(n, src[j]), E(n, tgt[i])), E(n, all));
          Rational v = top.terms.empty() ? Rational(0) : top.terms.begin()->second;
          CHECK(v == w(static_cast<int>(i), static_cast<int>(j)));
        }
    }
  }
}

TEST_CASE("divided power derivation") {
  auto D = [](int n, Multiset m) { return DivElem::basis(n, std::move(m)); };
  CHECK(divided_action({1, 0}, D(2, {0, 0, 0})) == D(2, {0, 0}));
  CHECK(divided_action({0, 1}, D(2, {0, 0})) == DivElem{2, {}});
  CHECK(divided_action({1, 0}, D(2, {0, 1})) == D(2, {1}));
  CHECK(divided_action({1}, D(1, {})) == DivElem{1, {}});
  // commutativity exhaustively for rank <= 3, degree <= 3
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= 3; ++k)
      for (const auto& m : multisets(n, k))
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            std::vector<Rational> ha(static_cast<std::size_t>(n), 0), hb(static_cast<std::size_t>(n), 0);
            ha[static_cast<std::size_t>(a)] = 1;
            hb[static_cast<std::size_t>(b)] = 1;
            CHECK(divided_action(ha, divided_action(hb, D(n, m))) == divided_action(hb, divided_action(ha, D(n, m))));
          }
  // Leibniz rule against the divided product
  for (int n = 1; n <= 3; ++n)
    for (int k1 = 0; k1 <= 2; ++k1)
      for (int k2 = 0; k2 <= 2; ++k2)
        for (const auto& u : multisets(n, k1))
          for (const auto& v : multisets(n, k2))
            for (int j = 0; j < n; ++j) {
              std::vector<Rational> h(static_cast<std::size_t>(n), 0);
              h[static_cast<std::size_t>(j)] = 1;
              DivElem lhs = divided_action(h, divided_product(D(n, u), D(n, v)));
              DivElem rhs = divided_product(divided_action(h, D(n, u)), D(n, v));
              rhs += divided_product(D(n, u), divided_action(h, D(n, v)));
              CHECK(lhs == rhs);
            }
}
