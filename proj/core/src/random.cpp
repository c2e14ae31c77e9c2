#include "sigmod8/random.hpp"

#include <cstdlib>

#include "sigmod8/error.hpp"

namespace sigmod8 {

Rng::Rng(std::initializer_list<std::uint64_t> keys) {
  std::vector<std::uint32_t> words;
  for (auto k : keys) {
    words.push_back(static_cast<std::uint32_t>(k & 0xffffffffu));
    words.push_back(static_cast<std::uint32_t>(k >> 32));
  }
  std::seed_seq seq(words.begin(), words.end());
  engine_.seed(seq);
}

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw Error(ErrorKind::InvalidInput, "empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

namespace {

Z2SymForm random_symmetric_z2(Rng& rng, std::size_t dim, bool alternating) {
  std::vector<Z2Vec> rows(dim, Z2Vec(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    if (!alternating) rows[i].set(i, rng.coin());
    for (std::size_t j = i + 1; j < dim; ++j) {
      const bool b = rng.coin();
      rows[i].set(j, b);
      rows[j].set(i, b);
    }
  }
  return Z2SymForm(std::move(rows));
}

}  // namespace

Z2SymForm random_nonsingular_z2(Rng& rng, std::size_t dim) {
  for (;;) {
    auto form = random_symmetric_z2(rng, dim, false);
    if (is_nonsingular(form)) return form;
  }
}

Z2SymForm random_isotropic_z2(Rng& rng, std::size_t dim) {
  if (dim % 2 != 0) throw Error(ErrorKind::InvalidInput, "isotropic nonsingular forms have even dimension");
  for (;;) {
    auto form = random_symmetric_z2(rng, dim, true);
    if (is_nonsingular(form)) return form;
  }
}

Z2Quadratic random_z2_enhancement(Rng& rng, const Z2SymForm& form) {
  std::vector<int> values(form.dim());
  for (auto& v : values) v = rng.coin() ? 1 : 0;
  return Z2Quadratic(form, std::move(values));
}

Z4Quadratic random_z4_enhancement(Rng& rng, const Z2SymForm& form) {
  std::vector<int> values(form.dim());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = (form(i, i) ? 1 : 0) + (rng.coin() ? 2 : 0);
  return Z4Quadratic(form, std::move(values));
}

std::vector<Z2Vec> random_invertible_z2(Rng& rng, std::size_t dim) {
  for (;;) {
    std::vector<Z2Vec> rows(dim, Z2Vec(dim));
    for (auto& r : rows)
      for (std::size_t j = 0; j < dim; ++j) r.set(j, rng.coin());
    if (z2_rank(rows) == dim) return rows;
  }
}

std::vector<Z2Vec> random_isometry_z2(Rng& rng, const Z2SymForm& form, std::size_t steps) {
  const std::size_t n = form.dim();
  std::vector<Z2Vec> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(Z2Vec::unit(n, i));
  if (n == 0) return images;
  for (std::size_t s = 0; s < steps; ++s) {
    Z2Vec c(n);
    for (std::size_t j = 0; j < n; ++j) c.set(j, rng.coin());
    if (c.is_zero() || form.pair(c, c)) continue;
    for (auto& x : images)
      if (form.pair(c, x)) x ^= c;
  }
  return images;
}

IntSymForm random_unimodular(Rng& rng, std::size_t dim) {
  const Integer bound = Integer(1) << 15;
  for (;;) {
    IntMatrix diag(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) diag(i, i) = rng.coin() ? 1 : -1;
    IntMatrix upper = IntMatrix::identity(dim);
    IntMatrix lower = IntMatrix::identity(dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i + 1; j < dim; ++j) {
        upper(i, j) = rng.uniform(-2, 2);
        lower(j, i) = rng.uniform(-1, 1);
      }
    const IntMatrix p = upper * lower;
    const IntMatrix m = p.transpose() * diag * p;
    bool small = true;
    for (std::size_t i = 0; i < dim && small; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        if (abs(m(i, j)) > bound) small = false;
    if (small) return IntSymForm(m);
  }
}

IntSymForm random_symmetric(Rng& rng, std::size_t dim, long bound) {
  IntMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j) {
      m(i, j) = rng.uniform(-bound, bound);
      m(j, i) = m(i, j);
    }
  return IntSymForm(m);
}

RatMatrix random_invertible_rational(Rng& rng, std::size_t dim) {
  for (;;) {
    RatMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        m(i, j) = Rational(rng.uniform(-3, 3), rng.uniform(1, 3));
        m(i, j).canonicalize();
      }
    if (determinant(m) != 0) return m;
  }
}

SymplecticMatrix random_symplectic(Rng& rng, std::size_t genus, std::size_t max_length, long scale) {
  SymplecticMatrix m = SymplecticMatrix::identity(genus);
  const long length = rng.uniform(1, static_cast<long>(max_length));
  for (long step = 0; step < length; ++step) {
    IntVector c(2 * genus);
    bool zero = true;
    while (zero) {
      for (auto& x : c) {
        x = scale * rng.uniform(-1, 1);
        zero = zero && x == 0;
      }
    }
    const auto t = transvection(c);
    m = m * (rng.coin() ? t : t.inverse());
  }
  return m;
}

MonodromyData random_monodromy(Rng& rng, std::size_t genus, bool doubled) {
  const long scale = doubled ? 2 : 1;
  auto f1 = random_symplectic(rng, genus, 6, scale);
  auto g1 = random_symplectic(rng, genus, 6, scale);
  return MonodromyData(genus, {{f1, g1}, {g1, f1}});
}

SymComplex random_middle_complex(Rng& rng, std::size_t rank, long bound) {
  return SymComplex::from_form(random_symmetric(rng, rank, bound), 1);
}

SymComplex random_two_degree_complex(Rng& rng, std::size_t rank2, std::size_t rank3) {
  IntMatrix d(rank2, rank3);
  for (std::size_t i = 0; i < rank2; ++i)
    for (std::size_t j = 0; j < rank3; ++j) d(i, j) = rng.uniform(0, 3) == 0 ? rng.uniform(-2, 2) : 2 * rng.uniform(-1, 1);
  IntMatrix x(rank3, rank2);
  for (std::size_t i = 0; i < rank3; ++i)
    for (std::size_t j = 0; j < rank2; ++j) x(i, j) = rng.uniform(-2, 2);
  const IntMatrix s = random_symmetric(rng, rank2, 3).matrix();

  std::vector<std::size_t> ranks{0, 0, rank2, rank3, 0};
  std::vector<IntMatrix> ds(5), phi0(5), phi1(5);
  ds[3] = d;
  phi0[2] = s - d * x;
  phi1[3] = x;
  phi1[2] = -x.transpose();
  return SymComplex(4, std::move(ranks), std::move(ds), std::move(phi0), std::move(phi1));
}

}  // namespace sigmod8
