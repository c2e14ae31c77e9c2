#include "sigmod8/selfcheck.hpp"

#include <algorithm>
#include <optional>

#include "sigmod8/enhancements.hpp"
#include "sigmod8/error.hpp"
#include "sigmod8/intforms.hpp"
#include "sigmod8/random.hpp"
#include "sigmod8/text_format.hpp"

namespace sigmod8 {

namespace {

using Outcome = std::optional<std::string>;  // failure description

struct Suite {
  std::string name;
  std::size_t min_size;
  std::size_t max_size;
  std::function<Outcome(Rng&, std::size_t)> run;
};

long mod8(long x) { return ((x % 8) + 8) % 8; }

std::vector<Suite> make_suites(const SelfcheckOptions& opt) {
  const std::size_t max_dim = std::max<std::size_t>(opt.max_dim, 1);
  const std::size_t max_even = std::max<std::size_t>(max_dim / 2, 1);
  const std::size_t max_genus = std::clamp<std::size_t>(max_dim / 2, 1, 3);
  std::vector<Suite> suites;

  suites.push_back({"morita", 1, max_dim, [](Rng& rng, std::size_t dim) -> Outcome {
                      const auto e = random_unimodular(rng, dim);
                      const long sigma = signature_exact(e);
                      const int bk = bk_gauss(reduce_to_enhanced(e));
                      if (mod8(sigma) == bk) return std::nullopt;
                      return format_intform(e) + "sigma = " + std::to_string(sigma) + ", BK = " + std::to_string(bk);
                    }});

  suites.push_back({"van-der-blij", 1, max_dim, [](Rng& rng, std::size_t dim) -> Outcome {
                      const auto e = random_unimodular(rng, dim);
                      const long sigma = signature_exact(e);
                      const int residue = van_der_blij_residue(e);
                      if (mod8(sigma) == residue) return std::nullopt;
                      return format_intform(e) + "sigma = " + std::to_string(sigma) +
                             ", phi(v,v) mod 8 = " + std::to_string(residue);
                    }});

  suites.push_back({"bk-4arf", 1, max_even, [](Rng& rng, std::size_t half) -> Outcome {
                      const auto h = random_z2_enhancement(rng, random_isotropic_z2(rng, 2 * half));
                      const int bk = bk_gauss(double_enhancement(h));
                      const int a = arf(h);
                      if (bk == 4 * a) return std::nullopt;
                      return format_z2q(h) + "BK(2h) = " + std::to_string(bk) + ", Arf = " + std::to_string(a);
                    }});

  suites.push_back({"gauss-vs-classify", 1, max_dim, [](Rng& rng, std::size_t dim) -> Outcome {
                      const auto q = random_z4_enhancement(rng, random_nonsingular_z2(rng, dim));
                      const int gauss = bk_gauss(q);
                      const int classified = bk_classify(q).bk();
                      if (gauss == classified) return std::nullopt;
                      return format_z4q(q) + "Gauss sum BK = " + std::to_string(gauss) +
                             ", classification BK = " + std::to_string(classified);
                    }});

  auto closed = opt.closed_wall;
  suites.push_back({"wall-closed-vs-general", 1, max_genus, [closed](Rng& rng, std::size_t genus) -> Outcome {
                      for (;;) {
                        const auto f = random_symplectic(rng, genus);
                        const auto g = random_symplectic(rng, genus);
                        const RatMatrix id = RatMatrix::identity(2 * genus);
                        if (determinant(id - to_rational(f.matrix())) == 0) continue;
                        const long s_closed = signature_exact(closed(f, g));
                        const long s_general = wall_form_general(f, g).signature;
                        if (s_closed == s_general) return std::nullopt;
                        return "f = " + to_string(f.matrix()) + "\ng = " + to_string(g.matrix()) +
                               "\nclosed = " + std::to_string(s_closed) + ", general = " + std::to_string(s_general);
                      }
                    }});
  return suites;
}

Outcome guarded(const Suite& suite, Rng& rng, std::size_t size) {
  try {
    return suite.run(rng, size);
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}

constexpr std::uint64_t kShrinkTag = 0x5348524eu;
constexpr std::size_t kShrinkAttempts = 64;

}  // namespace

std::vector<SuiteResult> run_selfcheck(const SelfcheckOptions& options) {
  std::vector<SuiteResult> results;
  const auto suites = make_suites(options);
  for (std::size_t s = 0; s < suites.size(); ++s) {
    const Suite& suite = suites[s];
    SuiteResult res{suite.name, options.trials, 0, {}};
    std::size_t first_failing_size = 0;
    for (std::size_t t = 0; t < options.trials; ++t) {
      Rng rng{options.seed, s, t};
      const auto size = static_cast<std::size_t>(
          rng.uniform(static_cast<long>(suite.min_size), static_cast<long>(suite.max_size)));
      if (auto fail = guarded(suite, rng, size)) {
        if (res.failures++ == 0) {
          res.counterexample = *fail;
          first_failing_size = size;
        }
      }
    }
    // Shrink: look for a failing instance at the smallest possible size.
    if (res.failures > 0) {
      bool shrunk = false;
      for (std::size_t size = suite.min_size; size < first_failing_size && !shrunk; ++size)
        for (std::size_t a = 0; a < kShrinkAttempts && !shrunk; ++a) {
          Rng rng{options.seed, s, kShrinkTag, size, a};
          if (auto fail = guarded(suite, rng, size)) {
            res.counterexample = *fail;
            shrunk = true;
          }
        }
    }
    results.push_back(std::move(res));
  }
  return results;
}

}  // namespace sigmod8
