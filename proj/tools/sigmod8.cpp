// sigmod8: batch front end.
//
//   sigmod8 invariants <file> --kind {z2form|z4q|z2q|intform|symcomplex}
//   sigmod8 bundle <file>
//   sigmod8 selfcheck [--max-dim N] [--trials T] [--seed S]
//
// Exit codes: 0 ok, 1 identity failure, 2 parse error, 3 precondition error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sigmod8/enhancements.hpp"
#include "sigmod8/error.hpp"
#include "sigmod8/fibration.hpp"
#include "sigmod8/intforms.hpp"
#include "sigmod8/selfcheck.hpp"
#include "sigmod8/symcomplex.hpp"
#include "sigmod8/text_format.hpp"
#include "sigmod8/z2forms.hpp"

using namespace sigmod8;

namespace {

constexpr int kExitIdentity = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;

struct Report {
  std::ostream& out;
  bool failed = false;

  template <class T>
  void value(const std::string& label, const T& v) {
    out << label << " = " << v << "\n";
  }
  void line(const std::string& text) { out << text << "\n"; }
  void check(const std::string& name, bool ok) {
    out << "check " << name << ": " << (ok ? "pass" : "FAIL") << "\n";
    failed = failed || !ok;
  }
};

long mod(long x, long m) { return ((x % m) + m) % m; }

std::string vec(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get_str();
  return out + ")";
}

std::string signed_str(long x) { return (x > 0 ? "+" : "") + std::to_string(x); }

void z2form_section(Report& r, const Z2SymForm& f) {
  r.value("dim", f.dim());
  r.value("parity", f.is_isotropic() ? "even" : "odd");
  if (!is_nonsingular(f)) {
    r.line("nonsingular: no");
    return;
  }
  r.line("nonsingular: yes");
  r.value("wu", wu_class(f).str());
  const auto d = decompose(f);
  r.line("decomposition: " + std::to_string(d.p) + "·P + " + std::to_string(d.k) + "·H");
  r.value("witt", witt_class_sym(f));
}

void z4_section(Report& r, const Z4Quadratic& q) {
  const int bk = bk_gauss(q);
  r.value("BK", bk);
  const auto c = bk_classify(q);
  r.line("classification: " + std::to_string(c.m) + "·q00 + " + std::to_string(c.n) + "·q22 + " +
         std::to_string(c.p_plus) + "·P1 + " + std::to_string(c.p_minus) + "·P-1");
  r.check("gauss-vs-classify", c.bk() == bk);
  const Z2Vec v = wu_class(q.form());
  const int qv = q(v);
  if (qv != 0) {
    r.line("wu-sublagrangian: undefined (q(v)=" + std::to_string(qv) + ")");
    return;
  }
  r.line("wu-sublagrangian: <" + v.str() + ">");
  const auto w = isotropic_subquotient(q).quadratic;
  r.value("dim(subquotient)", w.dim());
  const int a = arf(w);
  r.value("Arf(subquotient)", a);
  r.check("BK = 4 Arf", bk == 4 * a);
}

void cmd_z2form(Report& r, std::istream& in, const std::string& src) { z2form_section(r, parse_z2form(in, src)); }

void cmd_z2q(Report& r, std::istream& in, const std::string& src) {
  const auto h = parse_z2q(in, src);
  z2form_section(r, h.form());
  const int a = arf(h);
  r.value("Arf", a);
  const int bk = bk_gauss(double_enhancement(h));
  r.value("BK(2h)", bk);
  r.check("BK(2h) = 4 Arf", bk == 4 * a);
}

void cmd_z4q(Report& r, std::istream& in, const std::string& src) {
  const auto q = parse_z4q(in, src);
  z2form_section(r, q.form());
  z4_section(r, q);
}

void cmd_intform(Report& r, std::istream& in, const std::string& src) {
  const auto e = parse_intform(in, src);
  r.value("dim", e.dim());
  r.value("det", e.determinant().get_str());
  const long sigma = signature_exact(e);
  r.value("sigma", sigma);
  r.value("sigma mod 8", mod(sigma, 8));
  if (e.is_unimodular()) {
    const IntVector v = characteristic_vector(e);
    r.value("v", vec(v));
    const long vv = mod_nonneg(bilinear(e.matrix(), v, v), 8);
    r.value("phi(v,v) mod 8", vv);
    r.check("van der Blij", vv == mod(sigma, 8));
    const auto q = reduce_to_enhanced(e);
    z4_section(r, q);
    r.check("Morita", bk_gauss(q) == mod(sigma, 8));
    return;
  }
  if (e.determinant() == 0) {
    r.line("boundary: degenerate form");
    return;
  }
  const auto lf = boundary_linking_form(e);
  std::string orders;
  for (const auto& o : lf.orders()) orders += (orders.empty() ? "Z" : " + Z") + o.get_str();
  r.value("boundary", orders.empty() ? std::string("0") : orders);
  const int bk = bk_linking(lf);
  r.value("BK(boundary)", bk);
  r.check("BK(boundary) = sigma mod 8", bk == mod(sigma, 8));
}

void cmd_symcomplex(Report& r, std::istream& in, const std::string& src) {
  const auto c = parse_symcomplex(in, src);
  r.value("dimension", c.dimension());
  const auto s = validate_structure(c);
  r.line(std::string("structure: ") + (s.valid ? "valid" : "invalid"));
  for (const auto& v : s.violations) r.line("  " + v);
  if (!s.valid) throw Error(ErrorKind::InvalidInput, "structure relations fail");
  if (c.dimension() % 4 != 0) return;
  const auto classes = cohomology_mod2(c);
  r.value("dim H^mid(Z2)", classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i)
    r.line("P2(x" + std::to_string(i + 1) + ") = " + std::to_string(pontryagin_square(c, classes[i])));
  bool middle = true;
  for (int deg = 0; deg <= c.dimension(); ++deg)
    if (deg != c.dimension() / 2 && c.rank(deg) != 0) middle = false;
  if (!middle) return;
  const auto phi = c.phi(0, c.dimension() / 2);
  if (abs(determinant(phi)) != 1) return;
  const auto w = wu_and_mod4_signature(c);
  r.value("wu", vec(w.wu.v));
  r.value("P2(v)", w.p2);
  r.value("sigma", w.signature);
  r.check("sigma = P2(v) mod 4", w.consistent);
}

int run_invariants(const std::string& path, const std::string& kind) {
  static const std::map<std::string, void (*)(Report&, std::istream&, const std::string&)> handlers{
      {"z2form", cmd_z2form}, {"z2q", cmd_z2q},         {"z4q", cmd_z4q},
      {"intform", cmd_intform}, {"symcomplex", cmd_symcomplex}};
  std::ifstream in(path);
  if (!in) {
    std::cerr << path << ": cannot open file\n";
    return kExitParse;
  }
  std::ostringstream buf;
  Report r{buf};
  r.line("input: " + path + " (" + kind + ")");
  handlers.at(kind)(r, in, path);
  std::cout << buf.str();
  return r.failed ? kExitIdentity : 0;
}

int run_bundle(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << path << ": cannot open file\n";
    return kExitParse;
  }
  const auto m = parse_monodromy(in, path);
  const auto rep = bundle_report(m);
  std::cout << "input: " << path << " (fibre genus " << m.fibre_genus() << ", base genus " << m.base_genus()
            << ")\n";
  for (std::size_t i = 0; i < rep.handles.size(); ++i)
    std::cout << "handle " << i + 1 << ": " << signed_str(rep.wall_handles[i]) << "  (cocycle "
              << signed_str(rep.handles[i]) << ")\n";
  std::cout << "wall total = " << rep.wall_total << "\n";
  std::cout << "signature = " << rep.total << "\n";
  const bool z2 = z2_trivial_check(m);
  const bool z4 = z4_trivial_check(m);
  std::cout << "Z2-trivial: " << (z2 ? "yes" : "no") << "\n";
  std::cout << "Z4-trivial: " << (z4 ? "yes" : "no") << "\n";
  int status = 0;
  if (mod(rep.total, 4) != 0) {
    std::cout << "warning: signature is not divisible by 4; the monodromy data is suspect\n";
    status = kExitIdentity;
  }
  if (z4 && mod(rep.total, 8) != 0) {
    std::cout << "warning: Z4-trivial monodromy with signature not divisible by 8\n";
    status = kExitIdentity;
  }
  return status;
}

int run_selfcheck(std::size_t max_dim, std::size_t trials, std::uint64_t seed) {
  SelfcheckOptions opts;
  opts.max_dim = max_dim;
  opts.trials = trials;
  opts.seed = seed;
  int failed = 0;
  for (const auto& s : sigmod8::run_selfcheck(opts)) {
    std::cout << s.name << ": " << s.trials << " trials, ";
    if (s.passed()) {
      std::cout << "pass\n";
      continue;
    }
    ++failed;
    std::cout << s.failures << " FAILED\n";
    std::istringstream lines(s.counterexample);
    for (std::string l; std::getline(lines, l);) std::cout << "  " << l << "\n";
  }
  std::cout << (failed ? std::to_string(failed) + " suite(s) failed" : std::string("all suites pass")) << "\n";
  return failed ? kExitIdentity : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signature invariants mod 8: forms, enhancements, complexes and surface bundles"};
  app.require_subcommand(1);

  std::string path, kind;
  auto* inv = app.add_subcommand("invariants", "Print the invariants of a form, enhancement or complex");
  inv->add_option("path", path, "Input file")->required();
  inv->add_option("--kind", kind, "Input format")
      ->required()
      ->check(CLI::IsMember({"z2form", "z4q", "z2q", "intform", "symcomplex"}));

  auto* bundle = app.add_subcommand("bundle", "Signature of a surface bundle over a surface");
  bundle->add_option("path", path, "Monodromy file")->required();

  std::size_t max_dim = 5, trials = 50;
  std::uint64_t seed = 0;
  auto* self = app.add_subcommand("selfcheck", "Run the cross-module identity suites");
  self->add_option("--max-dim", max_dim, "Largest dimension tried")->check(CLI::PositiveNumber);
  self->add_option("--trials", trials, "Random trials per suite");
  self->add_option("--seed", seed, "PRNG seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*inv) return run_invariants(path, kind);
    if (*bundle) return run_bundle(path);
    return run_selfcheck(max_dim, trials, seed);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
}
