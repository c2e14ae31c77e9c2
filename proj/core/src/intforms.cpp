#include "sigmod8/intforms.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include "sigmod8/error.hpp"

namespace sigmod8 {

IntSymForm::IntSymForm(IntMatrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.is_square()) throw Error(ErrorKind::InvalidInput, "integer form matrix is not square");
  if (!matrix_.is_symmetric()) throw Error(ErrorKind::InvalidInput, "integer form matrix is not symmetric");
}

IntSymForm IntSymForm::diagonal(std::size_t n, long value) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = value;
  return IntSymForm(std::move(m));
}

IntSymForm IntSymForm::hyperbolic() { return IntSymForm(IntMatrix{{0, 1}, {1, 0}}); }

Integer IntSymForm::determinant() const { return sigmod8::determinant(matrix_); }

bool IntSymForm::is_unimodular() const {
  const Integer d = determinant();
  return d == 1 || d == -1;
}

bool IntSymForm::is_even() const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (mod_nonneg(matrix_(i, i), 2) != 0) return false;
  return true;
}

RatSymForm::RatSymForm(RatMatrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.is_square()) throw Error(ErrorKind::InvalidInput, "rational form matrix is not square");
  if (!matrix_.is_symmetric()) throw Error(ErrorKind::InvalidInput, "rational form matrix is not symmetric");
}

IntSymForm direct_sum(const IntSymForm& a, const IntSymForm& b) {
  return IntSymForm(direct_sum(a.matrix(), b.matrix()));
}

IntSymForm tensor_product(const IntSymForm& a, const IntSymForm& b) {
  return IntSymForm(kronecker(a.matrix(), b.matrix()));
}

// --- signature -------------------------------------------------------------

Inertia inertia(const RatMatrix& input) {
  if (!input.is_symmetric()) throw Error(ErrorKind::InvalidInput, "signature needs a symmetric matrix");
  RatMatrix m = input;
  const std::size_t n = m.rows();
  Inertia out;

  auto swap_sym = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(m(i, c), m(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(m(r, i), m(r, j));
  };

  std::size_t k = 0;
  for (; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, p) == 0) ++p;
    if (p == n) {
      // Zero diagonal: a nonzero m(i,j) gives (e_i + e_j) a pivot 2 m(i,j).
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (m(i, j) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;
      for (std::size_t c = 0; c < n; ++c) m(pi, c) += m(pj, c);
      for (std::size_t r = 0; r < n; ++r) m(r, pi) += m(r, pj);
      p = pi;
    }
    swap_sym(k, p);
    const Rational pivot = m(k, k);
    (sgn(pivot) > 0 ? out.positive : out.negative) += 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const Rational f = m(i, k) / pivot;
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      m(k, i) = 0;
      m(i, k) = 0;
    }
  }
  out.zero = n - out.positive - out.negative;
  return out;
}

long signature_exact(const RatMatrix& m) {
  const auto in = inertia(m);
  return static_cast<long>(in.positive) - static_cast<long>(in.negative);
}

long signature_exact(const RatSymForm& form) { return signature_exact(form.matrix()); }

// --- characteristic vectors and mod 8 --------------------------------------

namespace {

void require_unimodular(const IntSymForm& form, const char* what) {
  if (!form.is_unimodular())
    throw Error(ErrorKind::NotUnimodular, std::string(what) + " needs det = +-1, got " + form.determinant().get_str());
}

Z2SymForm reduce_mod2(const IntSymForm& form) {
  const std::size_t n = form.dim();
  std::vector<Z2Vec> rows(n, Z2Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i].set(j, mod_nonneg(form(i, j), 2));
  return Z2SymForm(std::move(rows));
}

}  // namespace

IntVector characteristic_vector(const IntSymForm& form) {
  require_unimodular(form, "characteristic_vector");
  const Z2Vec v = wu_class(reduce_mod2(form));
  IntVector out(form.dim());
  for (std::size_t i = 0; i < form.dim(); ++i) out[i] = v.get(i) ? 1 : 0;
  return out;
}

Z4Quadratic reduce_to_enhanced(const IntSymForm& form) {
  require_unimodular(form, "reduce_to_enhanced");
  std::vector<int> values(form.dim());
  for (std::size_t i = 0; i < form.dim(); ++i) values[i] = static_cast<int>(mod_nonneg(form(i, i), 4));
  return Z4Quadratic(reduce_mod2(form), std::move(values));
}

int van_der_blij_residue(const IntSymForm& form) {
  const IntVector v = characteristic_vector(form);
  return static_cast<int>(mod_nonneg(bilinear(form.matrix(), v, v), 8));
}

// --- linking forms ---------------------------------------------------------

namespace {

bool is_power_of_two(const Integer& x) { return x > 0 && mpz_popcount(x.get_mpz_t()) == 1; }

Integer lcm_of(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace

LinkingForm::LinkingForm(std::vector<Integer> orders, RatMatrix b, std::vector<Rational> q)
    : orders_(std::move(orders)), b_(std::move(b)), q_(std::move(q)) {
  const std::size_t l = orders_.size();
  if (b_.rows() != l || b_.cols() != l || q_.size() != l)
    throw Error(ErrorKind::InvalidInput, "linking form data has inconsistent sizes");
  for (const auto& d : orders_)
    if (!is_power_of_two(d)) throw Error(ErrorKind::InvalidInput, "generator orders must be powers of 2");
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) b_(i, j) = reduce_mod(b_(i, j), 1);
    q_[i] = reduce_mod(q_[i], 2);
  }
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = i + 1; j < l; ++j)
      if (b_(i, j) != b_(j, i)) throw Error(ErrorKind::InvalidInput, "b is not symmetric mod Z");
    if (reduce_mod(q_[i], 1) != b_(i, i)) throw Error(ErrorKind::InvalidInput, "q(g_i) must equal b(g_i,g_i) mod Z");
  }
}

Integer LinkingForm::order() const {
  Integer n = 1;
  for (const auto& d : orders_) n *= d;
  return n;
}

Rational LinkingForm::b_value(const std::vector<long>& x, const std::vector<long>& y) const {
  Rational acc = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) acc += Rational(x[i] * y[j]) * b_(i, j);
  return reduce_mod(acc, 1);
}

Rational LinkingForm::q_value(const std::vector<long>& x) const {
  Rational acc = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    acc += Rational(x[i] * x[i]) * q_[i];
    for (std::size_t j = i + 1; j < rank(); ++j) acc += Rational(2 * x[i] * x[j]) * b_(i, j);
  }
  return reduce_mod(acc, 2);
}

LinkingForm direct_sum(const LinkingForm& a, const LinkingForm& b) {
  std::vector<Integer> orders = a.orders();
  orders.insert(orders.end(), b.orders().begin(), b.orders().end());
  std::vector<Rational> q = a.q();
  q.insert(q.end(), b.q().begin(), b.q().end());
  return LinkingForm(std::move(orders), direct_sum(a.b(), b.b()), std::move(q));
}

LinkingForm boundary_linking_form(const IntSymForm& form) {
  const Integer det = form.determinant();
  if (det == 0) throw Error(ErrorKind::DegenerateForm, "boundary needs a nondegenerate form");
  if (!form.is_even()) throw Error(ErrorKind::OddDiagonal, "boundary needs an even form");
  if (!is_power_of_two(abs(det)))
    throw Error(ErrorKind::NotTwoPrimary, "determinant " + det.get_str() + " has an odd factor");

  const SmithForm snf = smith_normal_form(form.matrix());
  const IntMatrix u_inv = *inverse_unimodular(snf.u);
  const RatMatrix inv = *inverse(to_rational(form.matrix()));

  std::vector<Integer> orders;
  std::vector<RatVector> gens;
  for (std::size_t i = 0; i < snf.diagonal.size(); ++i) {
    if (snf.diagonal[i] == 1) continue;
    orders.push_back(snf.diagonal[i]);
    RatVector g(form.dim());
    for (std::size_t r = 0; r < form.dim(); ++r) g[r] = Rational(u_inv(r, i));
    gens.push_back(std::move(g));
  }
  const std::size_t l = gens.size();
  RatMatrix b(l, l);
  std::vector<Rational> q(l);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) b(i, j) = bilinear(inv, gens[i], gens[j]);
    q[i] = b(i, i);
  }
  return LinkingForm(std::move(orders), std::move(b), std::move(q));
}

int bk_linking(const LinkingForm& lf) {
  const Integer order = lf.order();
  if (mpz_sizeinbase(order.get_mpz_t(), 2) > kLinkingMaxLog2Order + 1)
    throw Error(ErrorKind::GroupTooLarge, "|T| = " + order.get_str() + " exceeds 2^20");
  const std::size_t l = lf.rank();

  // Common denominator D so that q(x) = N(x) / D with N(x) taken mod 2D.
  Integer den = 1;
  for (std::size_t i = 0; i < l; ++i) {
    den = lcm_of(den, lf.q()[i].get_den());
    for (std::size_t j = i + 1; j < l; ++j) {
      const Rational twice = 2 * lf.b()(i, j);
      den = lcm_of(den, twice.get_den());
    }
  }
  if (mpz_sizeinbase(den.get_mpz_t(), 2) > 30) throw Error(ErrorKind::GroupTooLarge, "denominators too large");
  const auto d = static_cast<unsigned long long>(den.get_ui());
  const unsigned long long mod = 2 * d;

  auto scaled = [&](const Rational& r) {
    const Rational s = reduce_mod(r * Rational(den), static_cast<long>(mod));
    return static_cast<unsigned long long>(s.get_num().get_ui());
  };
  std::vector<unsigned long long> qn(l);
  std::vector<std::vector<unsigned long long>> bn(l, std::vector<unsigned long long>(l, 0));
  std::vector<unsigned long long> ord(l);
  for (std::size_t i = 0; i < l; ++i) {
    qn[i] = scaled(lf.q()[i]);
    ord[i] = lf.orders()[i].get_ui();
    for (std::size_t j = i + 1; j < l; ++j) bn[i][j] = scaled(2 * lf.b()(i, j));
  }

  std::complex<double> sum = 0;
  std::vector<unsigned long long> a(l, 0);
  for (;;) {
    // mod < 2^32, so every product below fits in 64 bits.
    unsigned long long n = 0;
    for (std::size_t i = 0; i < l; ++i) {
      if (!a[i]) continue;
      n = (n + (a[i] * a[i] % mod) * qn[i]) % mod;
      for (std::size_t j = i + 1; j < l; ++j) n = (n + (a[i] * a[j] % mod) * bn[i][j]) % mod;
    }
    sum += std::polar(1.0, std::numbers::pi * static_cast<double>(n) / static_cast<double>(d));
    std::size_t i = 0;
    while (i < l && ++a[i] == ord[i]) a[i++] = 0;
    if (i == l) break;
  }

  const double root = std::sqrt(order.get_d());
  int best = -1;
  double best_dist = 0;
  for (int k = 0; k < 8; ++k) {
    const double dist = std::abs(sum - std::polar(root, 2 * std::numbers::pi * k / 8)) / root;
    if (best < 0 || dist < best_dist) {
      best = k;
      best_dist = dist;
    }
  }
  if (best_dist > kGaussSnapTolerance)
    throw Error(ErrorKind::NoGaussMatch, "Gauss sum is off every admissible value by " + std::to_string(best_dist));
  return best;
}

// --- multiplicativity ------------------------------------------------------

DefectReport multiplicativity_defect(const IntSymForm& e, const IntSymForm& b, const IntSymForm& f) {
  require_unimodular(e, "multiplicativity_defect(e)");
  require_unimodular(b, "multiplicativity_defect(b)");
  require_unimodular(f, "multiplicativity_defect(f)");

  DefectReport r;
  r.sigma_e = signature_exact(e);
  r.sigma_b = signature_exact(b);
  r.sigma_f = signature_exact(f);
  r.defect = r.sigma_e - r.sigma_b * r.sigma_f;
  if (((r.defect % 4) + 4) % 4 != 0)
    throw Error(ErrorKind::NotMod4Multiplicative,
                "sigma(e) - sigma(b) sigma(f) = " + std::to_string(r.defect) + " is not 0 mod 4");

  const IntSymForm glued = direct_sum(e, tensor_product(b, f).negated());
  const Z4Quadratic q = reduce_to_enhanced(glued);
  r.bk = bk_classify(q).bk();
  r.arf = arf(isotropic_subquotient(q).quadratic);
  return r;
}

}  // namespace sigmod8
