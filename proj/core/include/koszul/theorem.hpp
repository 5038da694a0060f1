#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "koszul/cells.hpp"
#include "koszul/ideal.hpp"
#include "koszul/module.hpp"

namespace koszul {

/// Numerical data of a pair lambda * chi = 0 with chi : F -> G (n x m) and
/// lambda : G -> H (l x n). g = grade I_chi, h = grade I_lambda.
struct Profile {
  int n = 0, m = 0, l = 0;
  int r = 0, s = 0, rho = 0;
  GradeValue g = GradeValue::finite(0);
  GradeValue h = GradeValue::finite(0);
  /// r + 1 - g, absent when g is infinite.
  std::optional<int> k;
};

/// A composition-zero pair. psi = chi^T and phi = lambda^T are the maps
/// H -> G -> F of the bicomplex.
class Instance {
 public:
  /// Throws DomainError when lambda * chi != 0 or the shapes disagree.
  static Instance make(RingPtr ring, PolyMatrix chi, PolyMatrix lambda, std::string provenance = "user");
  /// Same, starting from phi (n x l) and psi (m x n).
  static Instance from_phi_psi(RingPtr ring, const PolyMatrix& phi, const PolyMatrix& psi,
                               std::string provenance = "user");
  /// {"ring": ["x","y"], "order": "grevlex", "chi": [[...]], "lambda": [[...]]}
  /// or with "phi"/"psi" instead. Throws ParseError or DomainError.
  static Instance from_json(const std::string& text);

  const RingPtr& ring() const { return ring_; }
  const PolyMatrix& chi() const { return chi_; }
  const PolyMatrix& lambda() const { return lambda_; }
  PolyMatrix psi() const { return chi_.transpose(); }
  PolyMatrix phi() const { return lambda_.transpose(); }
  const Profile& profile() const { return prof_; }
  const IdealHandle& i_chi() const { return i_chi_; }
  const IdealHandle& i_lambda() const { return i_lambda_; }
  /// Basis degrees of F, G, H (the bicomplex's conventions).
  const DegreeData& degrees() const { return deg_; }
  const std::string& provenance() const { return prov_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  void add_warning(std::string w) { warnings_.push_back(std::move(w)); }

  std::string to_json() const;
  /// 16 hex digits, stable across runs.
  std::string digest() const;

 private:
  Instance(RingPtr ring, PolyMatrix chi, PolyMatrix lambda, std::string prov);

  RingPtr ring_;
  PolyMatrix chi_, lambda_;
  IdealHandle i_chi_, i_lambda_;
  Profile prof_;
  DegreeData deg_;
  std::string prov_;
  std::vector<std::string> warnings_;
};

/// chi(1) = (x1..xn) over Q[x1..xk]; lambda = (x2,-x1,x4,-x3,...) for even
/// n and the zero row otherwise (with a warning). Throws DomainError when
/// n > k or n < 1.
Instance gen_regular_sequence(int k, int n);
/// chi = [[x,0],[y,x],[0,y]] with lambda its signed maximal minors
/// (y^2,-xy,x^2). Needs k >= 2.
Instance gen_hilbert_burch(int k);

enum class Status { Pass, Fail, Skipped };

struct Assertion {
  std::string id;
  Status status = Status::Pass;
  /// Reason for a skip, or what was compared.
  std::string detail;
};

struct Report {
  std::string theorem;
  std::string digest;
  std::vector<Assertion> assertions;
  std::vector<std::pair<std::string, HilbertProfile>> tables;

  bool ok() const;
  int count(Status s) const;
  void check(std::string id, bool cond, std::string detail = {});
  void skip(std::string id, std::string reason);
  /// Single JSON object on one line (or indented when pretty).
  std::string to_json(bool pretty = false) const;
};

struct CheckOptions {
  int degree_bound = 8;
  /// Caps the homology positions examined.
  std::optional<int> window;
};

enum class Side { Phi, Psi };

Report verify_restriction_inf(const Instance& inst);
Report verify_en_homology(const Instance& inst, Side side, int t, const CheckOptions& opt = {});
/// t >= 0, else DomainError.
Report verify_fundamental(const Instance& inst, int t, const CheckOptions& opt = {});
/// t >= 0, else DomainError.
Report verify_fundamental2(const Instance& inst, int t, const CheckOptions& opt = {});
/// t < 0, else DomainError.
Report verify_fundamental_negative(const Instance& inst, int t, const CheckOptions& opt = {});
Report verify_submaximal(const Instance& inst);
Report verify_hb_extension(const Instance& inst);
Report verify_maximal_homology(const Instance& inst, int t, const CheckOptions& opt = {});
Report verify_case_l_big(const Instance& inst, const CheckOptions& opt = {});
Report verify_grade_sensitivity_mu(const Instance& inst, int t, const CheckOptions& opt = {});

/// Ids accepted by run_theorem: restriction-inf, en-homology-psi,
/// en-homology-phi, fundamental, fundamental2, fundamental-negative,
/// submaximal, hb-extension, maximal-homology, case-l-big,
/// grade-sensitivity-mu.
std::vector<std::string> theorem_ids();
/// Dispatch by id; t is ignored by checkers that take none. Throws
/// DomainError for unknown ids.
Report run_theorem(const std::string& id, const Instance& inst, int t, const CheckOptions& opt = {});

struct ProductVerdict {
  enum class Kind { Guaranteed, NoGuarantee, Inapplicable };
  Kind kind = Kind::NoGuarantee;
  /// 1..4 for Guaranteed.
  int which = 0;
  /// "nonzero-guaranteed(case 2)", "no guarantee", "criterion inapplicable".
  std::string label;
};

/// Numerical criterion for AB != 0 with A l x n, B n x m, h = grade of the
/// maximal minors of A and g that of B. Throws DomainError when l > n,
/// m > n or a size is negative.
ProductVerdict certify_product_nonzero(int l, int m, int n, GradeValue h, GradeValue g, bool attest_proper = false);

}  // namespace koszul
