// koszul: command line front end. Every command prints JSON on stdout.
// Exit codes: 0 success (and all assertions passed), 1 a check failed,
// 2 bad input or usage.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "koszul/bicomplex.hpp"
#include "koszul/complex.hpp"
#include "koszul/errors.hpp"
#include "koszul/ideal.hpp"
#include "koszul/module.hpp"
#include "koszul/parse.hpp"
#include "koszul/theorem.hpp"

using namespace koszul;
using nlohmann::json;

namespace {

struct Input {
  std::string ring = "x,y";
  std::string order = "grevlex";
  std::string matrix;
  std::string matrix_file;
};

bool g_pretty = false;

void emit(const json& j) { std::cout << (g_pretty ? j.dump(2) : j.dump()) << "\n"; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RingPtr ring_of(const Input& in) {
  std::vector<std::string> vars;
  std::stringstream ss(in.ring);
  for (std::string v; std::getline(ss, v, ',');)
    if (!v.empty()) vars.push_back(v);
  if (vars.empty()) throw ParseError("--ring needs at least one variable");
  return Ring::make(vars, order_from_name(in.order));
}

PolyMatrix matrix_of(const Input& in, const RingPtr& ring) {
  std::string text = !in.matrix_file.empty() ? slurp(in.matrix_file) : in.matrix;
  if (text.empty()) throw ParseError("a matrix is required (--matrix or --matrix-file)");
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("matrix JSON: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw ParseError("matrix rows must be arrays");
    std::vector<std::string> row;
    for (const auto& e : r) row.push_back(e.is_string() ? e.get<std::string>() : e.dump());
    rows.push_back(row);
  }
  return parse_matrix(rows, ring);
}

json poly_list(const std::vector<Poly>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

json profile_json(const HilbertProfile& h) {
  if (h.zero) return json{{"zero", true}};
  return json{{"zero", false}, {"first_degree", h.first_degree}, {"values", h.values}};
}

json complex_json(const FreeComplex& c) {
  json comps = json::array();
  for (const auto& x : c.comps) comps.push_back({{"label", x.label}, {"rank", x.rank}, {"twists", x.twists}});
  json maps = json::array();
  for (const auto& m : c.maps) maps.push_back(matrix_strings(m));
  auto bad = c.first_nonzero_composite();
  return {{"name", c.name},         {"graded", c.graded}, {"components", comps},
          {"maps", maps},           {"d_squared_zero", !bad.has_value()}};
}

FreeComplex build(const std::string& kind, const RingPtr& ring, const PolyMatrix& a, int t) {
  if (kind == "c") return build_c_psi(ring, a, t);
  if (kind == "d") return build_d_phi(ring, a, t);
  if (kind == "en") return build_en(ring, a, t);
  throw ParseError("unknown complex kind: " + kind + " (expected c, d or en)");
}

GradeValue grade_arg(const std::string& s) {
  if (s == "inf" || s == "INFINITE" || s == "infinite") return GradeValue::infinite();
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size() || v < 0) throw ParseError("");
    return GradeValue::finite(v);
  } catch (...) {
    throw ParseError("grade must be a non-negative integer or inf: " + s);
  }
}

void add_input(CLI::App* sub, Input& in, bool matrix = true) {
  sub->add_option("--ring", in.ring, "Comma separated variable names")->capture_default_str();
  sub->add_option("--order", in.order, "grevlex, lex or grlex")->capture_default_str();
  if (matrix) {
    sub->add_option("--matrix", in.matrix, "Matrix as JSON rows of polynomial strings");
    sub->add_option("--matrix-file", in.matrix_file, "File holding the matrix JSON");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Koszul complexes, bicomplexes and their homology over Q[x1..xk]"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --pretty follow the subcommand
  app.add_flag("--pretty", g_pretty, "Indented output");

  int rc = 0;
  Input in;
  int t = 0;

  // grade
  std::vector<std::string> gens;
  auto* grade = app.add_subcommand("grade", "Grade of the ideal generated by the given polynomials");
  add_input(grade, in, false);
  grade->add_option("gens", gens, "Generators")->required();
  grade->callback([&] {
    auto ring = ring_of(in);
    std::vector<Poly> ps;
    for (const auto& g : gens) ps.push_back(parse_poly(g, ring));
    IdealHandle id(ring, ps);
    emit({{"ring", ring->descriptor()}, {"gb", poly_list(id.gb())}, {"grade", grade_of_ideal(id).to_string()}});
  });

  // minors
  int size = -1;
  auto* minors = app.add_subcommand("minors", "Ideal of minors and its grade");
  add_input(minors, in);
  minors->add_option("--size", size, "Minor size (default: maximal)");
  minors->callback([&] {
    auto ring = ring_of(in);
    auto a = matrix_of(in, ring);
    IdealHandle id = size < 0 ? max_minors_ideal(a, ring) : minors_ideal(a, size, ring);
    emit({{"generators", poly_list(id.generators())},
          {"gb", poly_list(id.gb())},
          {"grade", grade_of_ideal(id).to_string()}});
  });

  // build-c / build-d / build-en
  for (auto [name, kind, help] : {std::tuple{"build-c", "c", "C_psi(t) for an m x n matrix psi"},
                                  std::tuple{"build-d", "d", "D_phi(t) for an n x l matrix phi"},
                                  std::tuple{"build-en", "en", "Eagon-Northcott type complex C^t(psi)"}}) {
    auto* sub = app.add_subcommand(name, help);
    add_input(sub, in);
    sub->add_option("-t", t, "Twist parameter")->capture_default_str();
    sub->callback([&, kind] {
      auto ring = ring_of(in);
      auto c = build(kind, ring, matrix_of(in, ring), t);
      json j = complex_json(c);
      if (!j["d_squared_zero"].get<bool>()) rc = 1;
      emit(j);
    });
  }

  // homology
  std::string kind = "c";
  int degree_bound = 8;
  auto* hom = app.add_subcommand("homology", "Hilbert functions of the homology of a built complex");
  add_input(hom, in);
  hom->add_option("--complex", kind, "c, d or en")->capture_default_str();
  hom->add_option("-t", t, "Twist parameter")->capture_default_str();
  hom->add_option("--degree-bound", degree_bound, "Degrees reported per module")->capture_default_str();
  hom->callback([&] {
    auto ring = ring_of(in);
    auto c = build(kind, ring, matrix_of(in, ring), t);
    auto mc = as_module_complex(c);
    json out = json::array();
    for (int i = 0; i < mc.length(); ++i)
      out.push_back({{"position", i}, {"label", c.comps[static_cast<std::size_t>(i)].label},
                     {"homology", profile_json(hilbert_profile(mc.homology_at(i), degree_bound))}});
    emit({{"name", c.name}, {"homology", out}});
  });

  // bicomplex-check
  std::string instance_file;
  int upper = 2, lower = 2;
  auto* bic = app.add_subcommand("bicomplex-check", "Build a window of K(t) and certify all squares");
  bic->add_option("--instance", instance_file, "Instance JSON file")->required();
  bic->add_option("-t", t, "Twist parameter")->capture_default_str();
  bic->add_option("--upper", upper, "Upper rows")->capture_default_str();
  bic->add_option("--lower", lower, "Lower rows")->capture_default_str();
  bic->callback([&] {
    auto inst = Instance::from_json(slurp(instance_file));
    try {
      Bicomplex k(inst.ring(), inst.phi(), inst.psi(), t, upper, lower);
      emit({{"instance", inst.digest()}, {"t", t}, {"anchor", k.anchor()}, {"squares", k.squares_checked()}, {"ok", true}});
    } catch (const CertificateFailure& e) {
      emit({{"instance", inst.digest()}, {"t", t}, {"ok", false}, {"error", e.what()}});
      rc = 1;
    }
  });

  // certify-product
  int l = 0, m = 0, n = 0;
  std::string h = "0", g = "0";
  bool attest = false;
  auto* cert = app.add_subcommand("certify-product", "Numerical criterion for AB != 0");
  cert->set_help_flag("--help", "Print this help message and exit");  // frees -h
  cert->add_option("--l", l)->required();
  cert->add_option("--m", m)->required();
  cert->add_option("--n", n)->required();
  cert->add_option("--h", h, "grade I_A (integer or inf)")->required();
  cert->add_option("--g", g, "grade I_B (integer or inf)")->required();
  cert->add_flag("--attest-proper", attest, "Entries of A and B generate proper ideals");
  cert->callback([&] {
    auto v = certify_product_nonzero(l, m, n, grade_arg(h), grade_arg(g), attest);
    json j{{"verdict", v.label}, {"rho", n - m - l}};
    if (v.which) j["case"] = v.which;
    emit(j);
  });

  // verify
  std::string theorem;
  std::optional<int> window;
  auto* ver = app.add_subcommand("verify", "Check one theorem on an instance");
  ver->add_option("theorem", theorem, "Theorem id")->required()->check(CLI::IsMember(theorem_ids()));
  ver->add_option("--instance", instance_file, "Instance JSON file")->required();
  ver->add_option("-t", t, "Twist parameter")->capture_default_str();
  ver->add_option("--degree-bound", degree_bound, "Degrees compared in Hilbert functions")->capture_default_str();
  ver->add_option("--window", window, "Largest homology position examined");
  ver->callback([&] {
    auto inst = Instance::from_json(slurp(instance_file));
    CheckOptions opt;
    opt.degree_bound = degree_bound;
    opt.window = window;
    Report r = run_theorem(theorem, inst, t, opt);
    std::cout << r.to_json(g_pretty) << "\n";
    if (!r.ok()) rc = 1;
  });

  // gen
  std::string family;
  int k = 2, rank = 2;
  std::string out_file;
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("family", family, "regular-sequence or hilbert-burch")
      ->required()
      ->check(CLI::IsMember({"regular-sequence", "hilbert-burch"}));
  gen->add_option("-k", k, "Number of variables")->capture_default_str();
  gen->add_option("-n", rank, "Rank (regular-sequence)")->capture_default_str();
  gen->add_option("-o", out_file, "Write the instance here instead of stdout");
  gen->callback([&] {
    Instance inst = family == "hilbert-burch" ? gen_hilbert_burch(k) : gen_regular_sequence(k, rank);
    json j = json::parse(inst.to_json());
    j["digest"] = inst.digest();
    j["warnings"] = inst.warnings();
    if (out_file.empty()) {
      emit(j);
    } else {
      std::ofstream(out_file) << j.dump(2) << "\n";
      emit({{"written", out_file}, {"digest", inst.digest()}});
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const RingMismatch& e) {
    std::cerr << "ring mismatch: " << e.what() << "\n";
    return 2;
  } catch (const CertificateFailure& e) {
    std::cerr << "certificate failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
