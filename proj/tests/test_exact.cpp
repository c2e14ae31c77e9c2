#include "doctest.h"

#include "sigmod8/exact.hpp"
#include "sigmod8/random.hpp"

using namespace sigmod8;

TEST_CASE("determinant over Z and Q") {
  CHECK(determinant(IntMatrix{{2, 1}, {1, 2}}) == 3);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}) == -3);
  CHECK(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
  CHECK(determinant(IntMatrix(0, 0)) == 1);
  CHECK(determinant(RatMatrix{{Rational(1, 2), 1}, {1, 4}}) == 1);
}

TEST_CASE("Bareiss agrees with rational elimination") {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 6));
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.uniform(-9, 9);
    CHECK(Rational(determinant(m)) == determinant(to_rational(m)));
  }
}

TEST_CASE("inverse") {
  Rng rng(12);
  for (int t = 0; t < 30; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 6));
    const RatMatrix m = random_invertible_rational(rng, n);
    const auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(m * *inv == RatMatrix::identity(n));
  }
  CHECK_FALSE(inverse(RatMatrix{{1, 2}, {2, 4}}));

  const auto u = inverse_unimodular(IntMatrix{{2, 1}, {1, 1}});
  REQUIRE(u);
  CHECK(*u == IntMatrix{{1, -1}, {-1, 2}});
  CHECK_FALSE(inverse_unimodular(IntMatrix{{2, 0}, {0, 1}}));
}

TEST_CASE("nullspace") {
  const RatMatrix m{{1, 2, 3}, {2, 4, 6}};
  const auto basis = nullspace(m);
  CHECK(basis.size() == 2);
  for (const auto& v : basis)
    for (const auto& e : m * v) CHECK(e == 0);
  CHECK(nullspace(RatMatrix::identity(3)).empty());
}

TEST_CASE("Smith normal form") {
  Rng rng(13);
  for (int t = 0; t < 60; ++t) {
    const auto r = static_cast<std::size_t>(rng.uniform(1, 5));
    const auto c = static_cast<std::size_t>(rng.uniform(1, 5));
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.uniform(-6, 6);
    const auto s = smith_normal_form(m);
    const IntMatrix d = s.u * m * s.v;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) CHECK(d(i, j) == 0);
    REQUIRE(s.diagonal.size() == std::min(r, c));
    for (std::size_t i = 0; i < s.diagonal.size(); ++i) {
      CHECK(d(i, i) == s.diagonal[i]);
      CHECK(s.diagonal[i] >= 0);
      if (i + 1 < s.diagonal.size() && s.diagonal[i] != 0) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
      if (s.diagonal[i] == 0 && i + 1 < s.diagonal.size()) CHECK(s.diagonal[i + 1] == 0);
    }
    CHECK(abs(determinant(s.u)) == 1);
    CHECK(abs(determinant(s.v)) == 1);
  }
  const auto s = smith_normal_form(IntMatrix{{4}});
  CHECK(s.diagonal == std::vector<Integer>{4});
}

TEST_CASE("residues and printing") {
  CHECK(mod_nonneg(Integer(-1), 4) == 3);
  CHECK(mod_nonneg(Integer(9), 8) == 1);
  CHECK(reduce_mod(Rational(-1, 4), 2) == Rational(7, 4));
  CHECK(reduce_mod(Rational(9, 4), 1) == Rational(1, 4));
  CHECK(to_string(Rational(7, 2)) == "7/2");
  CHECK(to_string(Rational(-3)) == "-3");
}

TEST_CASE("direct sum and Kronecker product") {
  const IntMatrix a{{1, 2}, {2, 3}};
  const IntMatrix b{{5}};
  CHECK(direct_sum(a, b) == IntMatrix{{1, 2, 0}, {2, 3, 0}, {0, 0, 5}});
  CHECK(kronecker(a, IntMatrix{{0, 1}, {1, 0}}) ==
        IntMatrix{{0, 1, 0, 2}, {1, 0, 2, 0}, {0, 2, 0, 3}, {2, 0, 3, 0}});
  CHECK(bilinear(a, IntVector{1, 1}, IntVector{1, 0}) == 3);
}
