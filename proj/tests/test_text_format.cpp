#include "doctest.h"

#include <sstream>

#include "sigmod8/error.hpp"
#include "sigmod8/random.hpp"
#include "sigmod8/text_format.hpp"

using namespace sigmod8;

namespace {

template <class Parse>
auto parse(Parse p, const std::string& text) {
  std::istringstream in(text);
  return p(in, "t.txt");
}

std::string parse_error(auto p, const std::string& text) {
  try {
    std::istringstream in(text);
    p(in, "t.txt");
  } catch (const ParseError& e) {
    return e.what();
  }
  FAIL("no parse error");
  return {};
}

const auto kZ2 = [](std::istream& in, const std::string& s) { return parse_z2form(in, s); };
const auto kZ4 = [](std::istream& in, const std::string& s) { return parse_z4q(in, s); };
const auto kZ2q = [](std::istream& in, const std::string& s) { return parse_z2q(in, s); };
const auto kInt = [](std::istream& in, const std::string& s) { return parse_intform(in, s); };
const auto kRat = [](std::istream& in, const std::string& s) { return parse_ratform(in, s); };
const auto kCx = [](std::istream& in, const std::string& s) { return parse_symcomplex(in, s); };
const auto kMono = [](std::istream& in, const std::string& s) { return parse_monodromy(in, s); };

}  // namespace

TEST_CASE("parse each format") {
  CHECK(parse(kZ2, "z2form 2\n0 1\n1 0\n") == Z2SymForm::H());
  const auto q = parse(kZ4, "# the form P with q = 1\nz4q 1\n1\n1\n");
  CHECK(q.basis_values() == std::vector<int>{1});
  const auto h = parse(kZ2q, "z2q 2\n0 1\n1 0\n1 1\n");
  CHECK(h.basis_values() == std::vector<int>{1, 1});
  CHECK(parse(kInt, "intform 2\n2 -1  # trailing comment\n-1 2\n") == IntSymForm(IntMatrix{{2, -1}, {-1, 2}}));
  const auto r = parse(kRat, "ratform 2\n4 -3\n-3 7/2\n");
  CHECK(r.matrix() == RatMatrix{{4, -3}, {-3, Rational(7, 2)}});
  const auto c = parse(kCx, "symcomplex 4\nranks 0 0 1 1 0\nd 3\n2\nphi0 2\n1\nphi1 3\n1\nphi1 2\n-1\n");
  CHECK(c.rank(2) == 1);
  CHECK(c.d(3) == IntMatrix{{2}});
  CHECK(validate_structure(c).valid);
  const auto m = parse(kMono, "monodromy 1 1\n1 0\n0 1\n1 0\n0 1\n");
  CHECK(m.base_genus() == 1);
}

TEST_CASE("errors name the file, the line and the expected token") {
  const auto e1 = parse_error(kZ2, "z2form 2\n0 1\n1 2\n");
  CHECK(e1 == "t.txt:3: expected 0 or 1, got '2'");
  const auto e2 = parse_error(kInt, "intform 2\n1 0\n");
  CHECK(e2.find("t.txt:3: expected") == 0);
  CHECK(e2.find("end of file") != std::string::npos);
  const auto e3 = parse_error(kInt, "intfrom 1\n1\n");
  CHECK(e3 == "t.txt:1: expected 'intform' header, got 'intfrom'");
  const auto e4 = parse_error(kRat, "ratform 1\n1/0\n");
  CHECK(e4.find("nonzero denominator") != std::string::npos);
  const auto e5 = parse_error(kZ4, "z4q 1\n1\n4\n");
  CHECK(e5.find("t.txt:3: expected a value in 0..3") == 0);
  const auto e6 = parse_error(kCx, "symcomplex 0\n1\nphi0 0\n1\nphi0 0\n1\n");
  CHECK(e6.find("t.txt:5:") == 0);
  const auto e7 = parse_error(kInt, "intform 1\n1\n1\n");
  CHECK(e7 == "t.txt:3: expected end of file, got '1'");
  const auto e8 = parse_error(kInt, "intform 2\n1 x\n0 1\n");
  CHECK(e8 == "t.txt:2: expected an integer, got 'x'");
}

TEST_CASE("semantic errors are library errors, not parse errors") {
  auto kind = [](auto p, const std::string& text) {
    try {
      parse(p, text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidInput;
  };
  CHECK(kind(kMono, "monodromy 1 1\n2 0\n0 1\n1 0\n0 1\n") == ErrorKind::NotSymplectic);
  CHECK(kind(kMono, "monodromy 1 1\n0 1\n-1 0\n0 1\n-1 1\n") == ErrorKind::CommutatorRelationViolated);
  CHECK_THROWS_AS(parse(kInt, "intform 2\n1 0\n1 1\n"), Error);
}

TEST_CASE("round trips") {
  Rng rng(111);
  for (int t = 0; t < 20; ++t) {
    const auto f = random_nonsingular_z2(rng, static_cast<std::size_t>(rng.uniform(1, 6)));
    CHECK(parse(kZ2, format_z2form(f)) == f);
    const auto q = random_z4_enhancement(rng, f);
    const auto q2 = parse(kZ4, format_z4q(q));
    CHECK(q2.form() == q.form());
    CHECK(q2.basis_values() == q.basis_values());
    const auto e = random_unimodular(rng, static_cast<std::size_t>(rng.uniform(1, 5)));
    CHECK(parse(kInt, format_intform(e)) == e);
    const RatSymForm r(RatMatrix{{Rational(1, 3), -2}, {-2, Rational(-5, 7)}});
    CHECK(parse(kRat, format_ratform(r)) == r);
    const auto m = random_monodromy(rng, static_cast<std::size_t>(rng.uniform(1, 2)));
    const auto m2 = parse(kMono, format_monodromy(m));
    REQUIRE(m2.pairs().size() == m.pairs().size());
    for (std::size_t i = 0; i < m.pairs().size(); ++i) {
      CHECK(m2.pairs()[i].f == m.pairs()[i].f);
      CHECK(m2.pairs()[i].g == m.pairs()[i].g);
    }
    const auto c = random_two_degree_complex(rng, 2, 1);
    const auto c2 = parse(kCx, format_symcomplex(c));
    for (int deg = 0; deg <= 4; ++deg) {
      CHECK(c2.rank(deg) == c.rank(deg));
      CHECK(c2.phi(0, deg) == c.phi(0, deg));
      CHECK(c2.phi(1, deg) == c.phi(1, deg));
    }
    CHECK(c2.d(3) == c.d(3));
  }
}
