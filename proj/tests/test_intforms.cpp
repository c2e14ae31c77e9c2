#include "doctest.h"

#include "sigmod8/error.hpp"
#include "sigmod8/intforms.hpp"
#include "sigmod8/random.hpp"

using namespace sigmod8;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidInput;
}

long mod8(long x) { return ((x % 8) + 8) % 8; }

IntSymForm form1(long a) { return IntSymForm(IntMatrix{{a}}); }

/// Even symmetric forms with |det| a power of two in [2, 2^10].
IntSymForm random_even_two_primary(Rng& rng, std::size_t dim) {
  for (;;) {
    IntMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      m(i, i) = 2 * rng.uniform(-3, 3);
      for (std::size_t j = i + 1; j < dim; ++j) m(i, j) = m(j, i) = rng.uniform(-3, 3);
    }
    const Integer d = abs(determinant(m));
    if (d < 2 || d > 1024 || mpz_popcount(d.get_mpz_t()) != 1) continue;
    return IntSymForm(m);
  }
}

}  // namespace

TEST_CASE("signature_exact examples") {
  CHECK(signature_exact(RatMatrix{{4, -3}, {-3, Rational(7, 2)}}) == 2);
  CHECK(signature_exact(RatMatrix{{Rational(-4, 3), Rational(-2, 3)}, {Rational(-2, 3), Rational(-10, 3)}}) == -2);
  CHECK(signature_exact(IntSymForm::hyperbolic()) == 0);
  CHECK(signature_exact(RatMatrix(0, 0)) == 0);
  CHECK(signature_exact(RatMatrix{{0, 0}, {0, 0}}) == 0);
  const auto in = inertia(RatMatrix{{1, 0, 0}, {0, 0, 0}, {0, 0, -2}});
  CHECK(in.positive == 1);
  CHECK(in.negative == 1);
  CHECK(in.zero == 1);
  CHECK(signature_exact(IntSymForm::diagonal(4, 1)) == 4);
}

TEST_CASE("signature is a congruence invariant") {
  Rng rng(81);
  for (int t = 0; t < 20; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 6));
    const RatMatrix m = to_rational(random_symmetric(rng, n, 4).matrix());
    const RatMatrix p = random_invertible_rational(rng, n);
    CHECK(signature_exact(p.transpose() * m * p) == signature_exact(m));
  }
}

TEST_CASE("signature under sums and tensor products") {
  Rng rng(82);
  for (int t = 0; t < 40; ++t) {
    const auto m = random_symmetric(rng, static_cast<std::size_t>(rng.uniform(1, 5)), 4);
    const auto n = random_symmetric(rng, static_cast<std::size_t>(rng.uniform(1, 4)), 4);
    CHECK(signature_exact(direct_sum(m, m.negated())) == 0);
    CHECK(signature_exact(tensor_product(m, n)) == signature_exact(m) * signature_exact(n));
  }
}

TEST_CASE("characteristic_vector") {
  CHECK(characteristic_vector(IntSymForm::diagonal(4, 1)) == IntVector{1, 1, 1, 1});
  CHECK(characteristic_vector(IntSymForm::hyperbolic()) == IntVector{0, 0});
  CHECK(kind_of([] { characteristic_vector(form1(2)); }) == ErrorKind::NotUnimodular);
  Rng rng(83);
  for (int t = 0; t < 50; ++t) {
    const auto e = random_unimodular(rng, static_cast<std::size_t>(rng.uniform(1, 6)));
    const IntVector v = characteristic_vector(e);
    for (std::size_t i = 0; i < e.dim(); ++i) {
      IntVector x(e.dim());
      x[i] = 1;
      CHECK(mod_nonneg(bilinear(e.matrix(), x, x) - bilinear(e.matrix(), x, v), 2) == 0);
    }
  }
}

TEST_CASE("random unimodular forms stay within the entry bound") {
  Rng rng(84);
  for (int t = 0; t < 50; ++t) {
    const auto e = random_unimodular(rng, 8);
    CHECK(e.is_unimodular());
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) CHECK(abs(e(i, j)) <= 32768);
  }
}

TEST_CASE("reduce_to_enhanced and the Morita congruence") {
  CHECK(bk_gauss(reduce_to_enhanced(form1(1))) == 1);
  const auto e4 = IntSymForm::diagonal(4, 1);
  CHECK(bk_gauss(reduce_to_enhanced(e4)) == 4);
  CHECK(signature_exact(e4) == 4);
  CHECK(kind_of([] { reduce_to_enhanced(form1(3)); }) == ErrorKind::NotUnimodular);
  Rng rng(85);
  for (int t = 0; t < 100; ++t) {
    const auto e = random_unimodular(rng, static_cast<std::size_t>(rng.uniform(1, 8)));
    REQUIRE(bk_gauss(reduce_to_enhanced(e)) == mod8(signature_exact(e)));
  }
}

TEST_CASE("van der Blij residue") {
  CHECK(van_der_blij_residue(IntSymForm::diagonal(4, 1)) == 4);
  CHECK(van_der_blij_residue(IntSymForm::hyperbolic()) == 0);
  CHECK(van_der_blij_residue(IntSymForm::diagonal(3, -1)) == 5);
  Rng rng(86);
  for (int t = 0; t < 100; ++t) {
    const auto e = random_unimodular(rng, static_cast<std::size_t>(rng.uniform(1, 8)));
    REQUIRE(van_der_blij_residue(e) == mod8(signature_exact(e)));
  }
}

TEST_CASE("boundary linking forms") {
  SUBCASE("(Z,[4])") {
    const auto lf = boundary_linking_form(form1(4));
    REQUIRE(lf.rank() == 1);
    CHECK(lf.orders()[0] == 4);
    CHECK(lf.b()(0, 0) == Rational(1, 4));
    CHECK(lf.q()[0] == Rational(1, 4));
    CHECK(lf.q()[0] / 2 == Rational(1, 8));
    CHECK(bk_linking(lf) == 1);
  }
  SUBCASE("(Z,[2])") {
    const auto lf = boundary_linking_form(form1(2));
    REQUIRE(lf.rank() == 1);
    CHECK(lf.orders()[0] == 2);
    CHECK(lf.b()(0, 0) == Rational(1, 2));
  }
  SUBCASE("unimodular boundary is trivial") {
    const auto lf = boundary_linking_form(IntSymForm::hyperbolic());
    CHECK(lf.rank() == 0);
    CHECK(lf.order() == 1);
    CHECK(bk_linking(lf) == 0);
  }
  SUBCASE("sum with the negative") {
    const auto lf = direct_sum(boundary_linking_form(form1(4)), boundary_linking_form(form1(-4)));
    CHECK(bk_linking(lf) == 0);
  }
  SUBCASE("errors") {
    CHECK(kind_of([] { boundary_linking_form(IntSymForm(IntMatrix{{0, 0}, {0, 2}})); }) == ErrorKind::DegenerateForm);
    CHECK(kind_of([] { boundary_linking_form(form1(3)); }) == ErrorKind::OddDiagonal);
    CHECK(kind_of([] { boundary_linking_form(form1(6)); }) == ErrorKind::NotTwoPrimary);
    const LinkingForm big({Integer(1) << 21}, RatMatrix{{Rational(1, Integer(1) << 21)}},
                          {Rational(1, Integer(1) << 21)});
    CHECK(kind_of([&] { bk_linking(big); }) == ErrorKind::GroupTooLarge);
    // Degenerate b: the Gauss sum 1 + e^{pi i} vanishes.
    const LinkingForm bad({2}, RatMatrix{{0}}, {Rational(1)});
    CHECK(kind_of([&] { bk_linking(bad); }) == ErrorKind::NoGaussMatch);
  }
  SUBCASE("evaluation") {
    const auto lf = boundary_linking_form(form1(4));
    CHECK(lf.q_value({2}) == 1);
    CHECK(lf.q_value({3}) == Rational(1, 4));
    CHECK(lf.b_value({1}, {3}) == Rational(3, 4));
  }
}

TEST_CASE("BK of the boundary is the signature mod 8") {
  Rng rng(87);
  for (int t = 0; t < 60; ++t) {
    const auto m = random_even_two_primary(rng, static_cast<std::size_t>(rng.uniform(1, 4)));
    const auto lf = boundary_linking_form(m);
    REQUIRE(lf.order() == abs(m.determinant()));
    REQUIRE(bk_linking(lf) == mod8(signature_exact(m)));
  }
}

TEST_CASE("tensor products") {
  CHECK(tensor_product(form1(1), form1(1)) == form1(1));
  CHECK(signature_exact(tensor_product(IntSymForm::diagonal(2, 1), IntSymForm::diagonal(2, 1))) == 4);
  const auto hz = tensor_product(IntSymForm::hyperbolic(), form1(1));
  CHECK(signature_exact(hz) == 0);
  CHECK(characteristic_vector(hz) == IntVector{0, 0});
}

TEST_CASE("multiplicativity defect") {
  SUBCASE("four copies of (Z,1) over an empty base") {
    const IntSymForm empty(IntMatrix(0, 0));
    const auto r = multiplicativity_defect(IntSymForm::diagonal(4, 1), empty, empty);
    CHECK(r.defect == 4);
    CHECK(r.arf == 1);
    CHECK(r.bk == 4);
  }
  SUBCASE("e = b (x) f") {
    const auto b = IntSymForm::diagonal(2, 1);
    const auto f = IntSymForm(IntMatrix{{1, 0}, {0, -1}});
    const auto r = multiplicativity_defect(tensor_product(b, f), b, f);
    CHECK(r.defect == 0);
    CHECK(r.arf == 0);
  }
  SUBCASE("errors") {
    CHECK(kind_of([] { multiplicativity_defect(form1(1), form1(1), form1(-1)); }) ==
          ErrorKind::NotMod4Multiplicative);
    CHECK(kind_of([] { multiplicativity_defect(form1(2), form1(1), form1(1)); }) == ErrorKind::NotUnimodular);
  }
  SUBCASE("random triples") {
    Rng rng(88);
    int checked = 0;
    while (checked < 60) {
      const auto e = random_unimodular(rng, static_cast<std::size_t>(rng.uniform(1, 6)));
      const auto b = random_unimodular(rng, static_cast<std::size_t>(rng.uniform(1, 3)));
      const auto f = random_unimodular(rng, static_cast<std::size_t>(rng.uniform(1, 3)));
      const long defect = signature_exact(e) - signature_exact(b) * signature_exact(f);
      if (((defect % 4) + 4) % 4 != 0) continue;
      const auto r = multiplicativity_defect(e, b, f);
      REQUIRE(mod8(r.defect) == 4 * r.arf);
      REQUIRE(r.bk == 4 * r.arf);
      ++checked;
    }
  }
}

TEST_CASE("linking form validation") {
  CHECK(kind_of([] { LinkingForm({3}, RatMatrix{{Rational(1, 3)}}, {Rational(1, 3)}); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { LinkingForm({4}, RatMatrix{{Rational(1, 4)}}, {Rational(1, 2)}); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { LinkingForm({4}, RatMatrix{{1}}, {}); }) == ErrorKind::InvalidInput);
}
