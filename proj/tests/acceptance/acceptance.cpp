// Acceptance suite: one PASS/FAIL line per criterion.
//
//   sigmod8_acceptance                 run all ten
//   sigmod8_acceptance --criterion 4   run one

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "oracles.hpp"
#include "sigmod8/enhancements.hpp"
#include "sigmod8/fibration.hpp"
#include "sigmod8/intforms.hpp"
#include "sigmod8/random.hpp"
#include "sigmod8/symcomplex.hpp"
#include "sigmod8/z2forms.hpp"

using namespace sigmod8;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

struct Criterion {
  int id;
  const char* title;
  double budget_s;  // 0 = no runtime bound
  std::function<Outcome()> run;
};

long mod(long x, long m) { return ((x % m) + m) % m; }

std::string str(long x) { return std::to_string(x); }

/// Every Z4 enhancement of `form`: q(e_i) in {lambda(e_i,e_i), lambda(e_i,e_i) + 2}.
template <class Fn>
void each_z4_enhancement(const Z2SymForm& form, Fn fn) {
  const std::size_t n = form.dim();
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    std::vector<int> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = (form(i, i) ? 1 : 0) + 2 * static_cast<int>((bits >> i) & 1u);
    fn(Z4Quadratic(form, std::move(values)));
  }
}

/// Every nonsingular symmetric Z2 form of dimension n with zero diagonal.
std::vector<Z2SymForm> all_isotropic(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<Z2SymForm> out;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<std::uint32_t> rows(n, 0);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1u) {
        rows[slots[s].first] |= 1u << slots[s].second;
        rows[slots[s].second] |= 1u << slots[s].first;
      }
    if (!oracle::invertible(rows, n)) continue;
    std::vector<Z2Vec> vecs;
    for (auto r : rows) vecs.push_back(Z2Vec::from_mask(n, r));
    out.emplace_back(std::move(vecs));
  }
  return out;
}

SymplecticMatrix sp(IntMatrix m) { return SymplecticMatrix(std::move(m)); }

Outcome wall_example(const std::vector<MonodromyPair>& pairs, const std::vector<RatMatrix>& expected) {
  Outcome o;
  const MonodromyData m(1, pairs);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto& [f, g] = pairs[i];
    const auto s = wall_form_closed(f, g * f.inverse() * g.inverse());
    o.expect(s.matrix() == expected[i], "handle " + str(static_cast<long>(i + 1)) + ": S differs from the expected matrix");
  }
  const auto report = bundle_report(m);
  if (!expected.empty()) {
    o.expect(report.wall_handles == std::vector<long>{2, -2},
             "per-handle Wall signatures " + str(report.wall_handles[0]) + ", " + str(report.wall_handles[1]));
  }
  const long total = bundle_signature(m);
  std::ostringstream msg;
  msg << "bundle_signature = " << total << " (expected 4); handles";
  for (long h : report.handles) msg << ' ' << h;
  msg << "; Wall handles";
  for (long h : report.wall_handles) msg << ' ' << h;
  msg << " (sum " << report.wall_total << ")";
  o.expect(total == 4, msg.str());
  return o;
}

const IntMatrix kF1{{0, 1}, {-1, 0}};
const IntMatrix kG1{{0, 1}, {-1, 1}};

Outcome criterion_1() {
  return wall_example({{sp(kF1), sp(kG1)}, {sp(IntMatrix{{0, -1}, {1, -1}}), sp(IntMatrix{{0, 1}, {-1, 0}})}},
                      {RatMatrix{{4, -3}, {-3, Rational(7, 2)}},
                       RatMatrix{{Rational(-4, 3), Rational(-2, 3)}, {Rational(-2, 3), Rational(-10, 3)}}});
}

Outcome criterion_2() {
  const IntMatrix d{{1, 1}, {1, 2}};
  const IntMatrix d_inv{{2, -1}, {-1, 1}};
  return wall_example({{sp(kF1), sp(kG1)}, {sp(-(d * kG1 * d_inv)), sp(d * kF1 * d_inv)}}, {});
}

Outcome criterion_3() {
  Outcome o;
  const auto e = IntSymForm::diagonal(4, 1);
  o.expect(signature_exact(e) == 4, "sigma = " + str(signature_exact(e)));
  o.expect(characteristic_vector(e) == IntVector{1, 1, 1, 1}, "v != (1,1,1,1)");
  const auto q = reduce_to_enhanced(e);
  o.expect(bk_gauss(q) == 4, "BK = " + str(bk_gauss(q)));
  const auto w = isotropic_subquotient(q).quadratic;
  o.expect(w.dim() == 2, "dim W = " + str(static_cast<long>(w.dim())));
  if (w.dim() == 2)
    for (std::uint64_t x = 1; x < 4; ++x) o.expect(w(Z2Vec::from_mask(2, x)) == 1, "h = 0 on a nonzero class");
  const int a = arf(w);
  o.expect(a == 1, "Arf = " + str(a));
  o.expect(mod(4 * a - signature_exact(e), 8) == 0, "4 Arf != sigma mod 8");
  return o;
}

Outcome criterion_4() {
  Outcome o;
  const IntSymForm m(IntMatrix{{4}});
  const auto lf = boundary_linking_form(m);
  o.expect(lf.rank() == 1 && lf.orders()[0] == 4, "T is not Z4");
  const int bk = bk_linking(lf);
  o.expect(bk == 1, "bk_linking = " + str(bk));
  o.expect(bk == mod(signature_exact(m), 8), "bk_linking != sigma mod 8");
  return o;
}

Outcome criterion_5() {
  Outcome o;
  std::size_t cases = 0, failures = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& f : oracle::all_nonsingular(n))
      each_z4_enhancement(f, [&](const Z4Quadratic& q) {
        ++cases;
        if (bk_classify(q).bk() != bk_gauss(q)) ++failures;
      });
  o.expect(failures == 0, str(static_cast<long>(failures)) + " of " + str(static_cast<long>(cases)) + " disagree");
  o.detail = o.pass ? str(static_cast<long>(cases)) + " enhancements" : o.detail;
  return o;
}

Outcome criterion_6() {
  Outcome o;
  std::size_t doubled = 0, sub = 0, failures = 0;
  for (std::size_t n = 2; n <= 6; n += 2)
    for (const auto& f : all_isotropic(n))
      for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        std::vector<int> values(n);
        for (std::size_t i = 0; i < n; ++i) values[i] = static_cast<int>((bits >> i) & 1u);
        const Z2Quadratic h(f, std::move(values));
        ++doubled;
        if (bk_gauss(double_enhancement(h)) != 4 * arf(h)) ++failures;
      }
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& f : oracle::all_nonsingular(n)) {
      const Z2Vec v = wu_class(f);
      each_z4_enhancement(f, [&](const Z4Quadratic& q) {
        if (q(v) != 0) return;
        ++sub;
        if (bk_gauss(q) != 4 * arf(isotropic_subquotient(q).quadratic)) ++failures;
      });
    }
  o.expect(failures == 0, str(static_cast<long>(failures)) + " failures");
  if (o.pass) o.detail = str(static_cast<long>(doubled)) + " doubled, " + str(static_cast<long>(sub)) + " subquotient cases";
  return o;
}

Outcome criterion_7() {
  Outcome o;
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    const auto e = random_unimodular(rng, static_cast<std::size_t>(rng.uniform(1, 8)));
    const long s = mod(signature_exact(e), 8);
    const IntVector v = characteristic_vector(e);
    const long vv = mod_nonneg(bilinear(e.matrix(), v, v), 8);
    const long bk = bk_gauss(reduce_to_enhanced(e));
    o.expect(s == vv && vv == bk, "trial " + str(t) + ": sigma " + str(s) + ", phi(v,v) " + str(vv) + ", BK " + str(bk));
  }
  return o;
}

Outcome criterion_8() {
  Outcome o;
  Rng rng(8);
  int checked = 0;
  while (checked < 50) {
    const auto h = static_cast<std::size_t>(rng.uniform(1, 3));
    const auto f = random_symplectic(rng, h);
    const auto g = random_symplectic(rng, h);
    if (determinant(RatMatrix::identity(2 * h) - to_rational(f.matrix())) == 0) continue;
    RatSymForm s;
    try {
      s = wall_form_closed(f, g);
    } catch (const std::logic_error&) {
      o.expect(false, "pair " + str(checked) + ": S is not symmetric");
      ++checked;
      continue;
    }
    const long closed = signature_exact(s);
    const long general = wall_form_general(f, g).signature;
    o.expect(closed == general, "pair " + str(checked) + ": closed " + str(closed) + ", general " + str(general));
    ++checked;
  }
  return o;
}

Outcome criterion_9() {
  Outcome o;
  Rng rng(9);
  for (int t = 0; t < 50; ++t) {
    const auto m = random_monodromy(rng, static_cast<std::size_t>(rng.uniform(1, 3)));
    const long s = bundle_signature(m);
    o.expect(mod(s, 4) == 0, "monodromy " + str(t) + ": signature " + str(s));
  }
  for (int t = 0; t < 50; ++t) {
    const auto m = random_monodromy(rng, static_cast<std::size_t>(rng.uniform(1, 3)), true);
    o.expect(z4_trivial_check(m), "doubled monodromy " + str(t) + " is not Z4-trivial");
    const long s = bundle_signature(m);
    o.expect(mod(s, 8) == 0, "Z4-trivial monodromy " + str(t) + ": signature " + str(s));
  }
  return o;
}

Outcome criterion_10() {
  Outcome o;
  Rng rng(10);
  std::size_t pairs = 0;
  for (int t = 0; t < 60; ++t) {
    const auto c = t % 2 == 0 ? random_middle_complex(rng, static_cast<std::size_t>(rng.uniform(1, 6)))
                              : random_two_degree_complex(rng, static_cast<std::size_t>(rng.uniform(1, 4)),
                                                          static_cast<std::size_t>(rng.uniform(1, 3)));
    const auto basis = cohomology_mod2(c);
    Mod2CohomologyClass zero{IntVector(c.rank(c.dimension() / 2 + 1)), IntVector(c.rank(c.dimension() / 2))};
    for (int s = 0; s < 8; ++s) {
      auto x = zero, y = zero;
      for (const auto& b : basis) {
        if (rng.coin()) x = x + b;
        if (rng.coin()) y = y + b;
      }
      const int lhs = static_cast<int>(
          mod(pontryagin_square(c, x + y) - pontryagin_square(c, x) - pontryagin_square(c, y), 4));
      o.expect(lhs == 2 * cup_product(c, x, y), "complex " + str(t) + ": quadraticity fails");
      ++pairs;
    }
  }
  for (int t = 0; t < 50; ++t) {
    const auto e = random_unimodular(rng, static_cast<std::size_t>(rng.uniform(1, 8)));
    const auto r = wu_and_mod4_signature(SymComplex::from_form(e, 1));
    o.expect(mod(r.signature, 4) == r.p2, "form " + str(t) + ": sigma " + str(r.signature) + ", P2(v) " + str(r.p2));
  }
  if (o.pass) o.detail = str(static_cast<long>(pairs)) + " pairs, 50 unimodular forms";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sigmod8 acceptance suite"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-10)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "genus-2 bundle, first example: S matrices, +2/-2, total 4", 1.0, criterion_1},
      {2, "genus-2 bundle, second example: total 4", 1.0, criterion_2},
      {3, "sum of four (Z,1): sigma, Wu class, BK, subquotient, Arf", 0.0, criterion_3},
      {4, "boundary of (Z,[4]): T = Z4, bk_linking = 1", 0.0, criterion_4},
      {5, "bk_classify vs bk_gauss, exhaustive to dim 5", 60.0, criterion_5},
      {6, "BK = 4 Arf, exhaustive (doubled to dim 6, subquotient to dim 5)", 0.0, criterion_6},
      {7, "Morita / van der Blij on 200 random unimodular forms", 30.0, criterion_7},
      {8, "Wall form closed vs general on 50 random pairs", 0.0, criterion_8},
      {9, "Meyer mod 4 and Z4-trivial mod 8", 0.0, criterion_9},
      {10, "Pontryagin square quadraticity and sigma = P2(v) mod 4", 0.0, criterion_10},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && secs >= c.budget_s) {
      if (o.pass) o.detail = "over the " + std::to_string(c.budget_s) + " s budget";
      o.pass = false;
    }
    std::printf("[%s] %2d  %s  (%.3f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs,
                o.detail.empty() ? "" : "  -- ", o.detail.c_str());
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
