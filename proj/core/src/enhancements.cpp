#include "sigmod8/enhancements.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

#include "sigmod8/error.hpp"

namespace sigmod8 {

namespace {

constexpr std::size_t kTableMaxDim = 10;

// Number of pairs i < j with x_i = x_j = 1 and lambda(e_i, e_j) = 1, mod 2.
int cross_parity(const Z2SymForm& form, const Z2Vec& x) {
  std::size_t total = 0;
  std::size_t diag = 0;
  for (std::size_t i = 0; i < form.dim(); ++i) {
    if (!x.get(i)) continue;
    total += form.rows()[i].and_popcount(x);
    diag += form(i, i);
  }
  return static_cast<int>(((total - diag) / 2) & 1);
}

int linear_part(const std::vector<int>& values, const Z2Vec& x) {
  int acc = 0;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (x.get(i)) acc += values[i];
  return acc;
}

void check_table_size(std::size_t dim, std::size_t size) {
  if (dim > kTableMaxDim) throw Error(ErrorKind::DimTooLarge, "value tables are limited to dim <= 10");
  if (size != (std::size_t{1} << dim)) throw Error(ErrorKind::InvalidInput, "value table must have 2^dim entries");
}

// Exact match of sum = re + i*im against (sqrt 2)^dim e^{2 pi i k / 8}.
std::optional<int> match_gauss_sum(std::size_t dim, long long re, long long im) {
  // Candidates: even k -> 2^{dim/2} i^{k/2}; odd k -> 2^{(dim-1)/2 or dim/2 - 1} (1+i) i^{(k-1)/2}.
  for (int k = 0; k < 8; ++k) {
    long long cr, ci;
    if (k % 2 == 0) {
      if (dim % 2 == 1) continue;
      const long long s = 1LL << (dim / 2);
      static constexpr int ur[4] = {1, 0, -1, 0};
      static constexpr int ui[4] = {0, 1, 0, -1};
      cr = s * ur[k / 2];
      ci = s * ui[k / 2];
    } else {
      if (dim == 0) continue;
      const long long s = 1LL << ((dim % 2 == 1) ? (dim - 1) / 2 : dim / 2 - 1);
      static constexpr int ur[4] = {1, -1, -1, 1};
      static constexpr int ui[4] = {1, 1, -1, -1};
      cr = s * ur[k / 2];
      ci = s * ui[k / 2];
    }
    if (cr == re && ci == im) return k;
  }
  return std::nullopt;
}

}  // namespace

// --- Z2Quadratic -----------------------------------------------------------

Z2Quadratic::Z2Quadratic(Z2SymForm form, std::vector<int> basis_values)
    : form_(std::move(form)), values_(std::move(basis_values)) {
  if (values_.size() != form_.dim()) throw Error(ErrorKind::InvalidInput, "need one value per basis vector");
  if (!form_.is_isotropic())
    throw Error(ErrorKind::InvalidInput, "a Z2 enhancement needs an isotropic form (zero diagonal)");
  for (auto& v : values_) {
    if (v != 0 && v != 1) throw Error(ErrorKind::InvalidInput, "Z2 enhancement values must be 0 or 1");
  }
}

Z2Quadratic Z2Quadratic::from_table(Z2SymForm form, std::span<const int> table) {
  const std::size_t n = form.dim();
  check_table_size(n, table.size());
  const std::size_t size = table.size();
  for (std::size_t x = 0; x < size; ++x)
    for (std::size_t y = 0; y < size; ++y) {
      const int lam = form.pair(Z2Vec::from_mask(n, x), Z2Vec::from_mask(n, y));
      if (((table[x] + table[y] + lam) & 1) != (table[x ^ y] & 1))
        throw Error(ErrorKind::InvalidInput, "table violates h(x+y) = h(x) + h(y) + lambda(x,y)");
    }
  std::vector<int> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = table[std::size_t{1} << i] & 1;
  return Z2Quadratic(std::move(form), std::move(values));
}

Z2Quadratic Z2Quadratic::hyperbolic(int a, int b) { return Z2Quadratic(Z2SymForm::H(), {a, b}); }

int Z2Quadratic::operator()(const Z2Vec& x) const {
  return (linear_part(values_, x) + cross_parity(form_, x)) & 1;
}

// --- Z4Quadratic -----------------------------------------------------------

Z4Quadratic::Z4Quadratic(Z2SymForm form, std::vector<int> basis_values)
    : form_(std::move(form)), values_(std::move(basis_values)) {
  if (values_.size() != form_.dim()) throw Error(ErrorKind::InvalidInput, "need one value per basis vector");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    int& v = values_[i];
    if (v < 0 || v > 3) throw Error(ErrorKind::InvalidInput, "Z4 enhancement values must lie in {0,1,2,3}");
    if ((v & 1) != static_cast<int>(form_(i, i)))
      throw Error(ErrorKind::InvalidInput, "q(e_" + std::to_string(i) + ") must reduce to lambda(e_i,e_i) mod 2");
  }
}

Z4Quadratic Z4Quadratic::from_table(Z2SymForm form, std::span<const int> table) {
  const std::size_t n = form.dim();
  check_table_size(n, table.size());
  const std::size_t size = table.size();
  for (std::size_t x = 0; x < size; ++x) {
    const Z2Vec vx = Z2Vec::from_mask(n, x);
    for (std::size_t y = 0; y < size; ++y) {
      const int lam = form.pair(vx, Z2Vec::from_mask(n, y));
      if (((table[x] + table[y] + 2 * lam) & 3) != (table[x ^ y] & 3))
        throw Error(ErrorKind::InvalidInput, "table violates q(x+y) = q(x) + q(y) + 2 lambda(x,y)");
    }
  }
  std::vector<int> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = table[std::size_t{1} << i] & 3;
  return Z4Quadratic(std::move(form), std::move(values));
}

Z4Quadratic Z4Quadratic::hyperbolic(int a, int b) { return Z4Quadratic(Z2SymForm::H(), {a, b}); }

Z4Quadratic Z4Quadratic::P(int sign) { return Z4Quadratic(Z2SymForm::P(), {sign > 0 ? 1 : 3}); }

int Z4Quadratic::operator()(const Z2Vec& x) const {
  return (linear_part(values_, x) + 2 * cross_parity(form_, x)) & 3;
}

Z2Quadratic direct_sum(const Z2Quadratic& a, const Z2Quadratic& b) {
  std::vector<int> v = a.basis_values();
  v.insert(v.end(), b.basis_values().begin(), b.basis_values().end());
  return Z2Quadratic(direct_sum(a.form(), b.form()), std::move(v));
}

Z4Quadratic direct_sum(const Z4Quadratic& a, const Z4Quadratic& b) {
  std::vector<int> v = a.basis_values();
  v.insert(v.end(), b.basis_values().begin(), b.basis_values().end());
  return Z4Quadratic(direct_sum(a.form(), b.form()), std::move(v));
}

Z4Quadratic direct_sum_power(const Z4Quadratic& a, std::size_t copies) {
  Z4Quadratic out(Z2SymForm{}, {});
  for (std::size_t i = 0; i < copies; ++i) out = direct_sum(out, a);
  return out;
}

// --- invariants ------------------------------------------------------------

int arf(const Z2Quadratic& h) {
  const auto pairs = symplectic_split(h.form(), Z2Subspace::full(h.dim()));
  int acc = 0;
  for (const auto& [e, ebar] : pairs) acc ^= h(e) & h(ebar);
  return acc;
}

int bk_gauss(const Z4Quadratic& q) {
  const std::size_t n = q.dim();
  if (n > kGaussSumMaxDim) throw Error(ErrorKind::DimTooLarge, "Gauss sums are limited to dim <= 24");
  if (!is_nonsingular(q.form())) throw Error(ErrorKind::SingularForm, "bk_gauss needs a nonsingular form");

  std::vector<std::uint64_t> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = q.form().rows()[i].mask();
  const auto& qv = q.basis_values();

  // Gray-code walk: flipping bit i changes q by q(e_i) + 2 lambda(x_old, e_i)
  // when adding, and by -(q(e_i) + 2 lambda(x_new, e_i)) when removing.
  long long counts[4] = {1, 0, 0, 0};
  std::uint64_t x = 0;
  int value = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < total; ++step) {
    const int i = std::countr_zero(step);
    const std::uint64_t bit = std::uint64_t{1} << i;
    if (x & bit) {
      x ^= bit;
      const int lam = std::popcount(rows[i] & x) & 1;
      value = (value - qv[i] - 2 * lam) & 3;
    } else {
      const int lam = std::popcount(rows[i] & x) & 1;
      value = (value + qv[i] + 2 * lam) & 3;
      x ^= bit;
    }
    ++counts[value];
  }
  const auto k = match_gauss_sum(n, counts[0] - counts[2], counts[1] - counts[3]);
  if (!k) throw Error(ErrorKind::NoGaussMatch, "Gauss sum is not an admissible value");
  return *k;
}

int bk_gauss_table(std::size_t dim, std::span<const std::uint8_t> table) {
  if (dim > kGaussSumMaxDim) throw Error(ErrorKind::DimTooLarge, "Gauss sums are limited to dim <= 24");
  if (table.size() != (std::size_t{1} << dim)) throw Error(ErrorKind::InvalidInput, "table must have 2^dim entries");
  long long counts[4] = {0, 0, 0, 0};
  for (auto v : table) ++counts[v & 3];
  const auto k = match_gauss_sum(dim, counts[0] - counts[2], counts[1] - counts[3]);
  if (!k)
    throw Error(ErrorKind::NoGaussMatch, "sum " + std::to_string(counts[0] - counts[2]) + " + " +
                                             std::to_string(counts[1] - counts[3]) + "i is not admissible");
  return *k;
}

int BkClassification::bk() const noexcept {
  const long long v = 4LL * static_cast<long long>(n) + static_cast<long long>(p_plus) -
                      static_cast<long long>(p_minus);
  return static_cast<int>(((v % 8) + 8) % 8);
}

BkClassification bk_classify(const Z4Quadratic& q) {
  const auto& form = q.form();
  if (!is_nonsingular(form)) throw Error(ErrorKind::SingularForm, "bk_classify needs a nonsingular form");
  const std::size_t dim = q.dim();
  std::vector<Z2Vec> basis;
  for (std::size_t i = 0; i < dim; ++i) basis.push_back(Z2Vec::unit(dim, i));

  BkClassification c;
  for (;;) {
    auto aniso = std::find_if(basis.begin(), basis.end(), [&](const Z2Vec& x) { return form.pair(x, x); });
    if (aniso == basis.end()) break;
    Z2Vec x = *aniso;
    basis.erase(aniso);
    for (auto& w : basis)
      if (form.pair(w, x)) w ^= x;
    (q(x) == 1 ? c.p_plus : c.p_minus) += 1;
  }
  for (const auto& [e, f] : symplectic_split(form, Z2Subspace(dim, basis))) {
    if (q(e) == 2 && q(f) == 2)
      ++c.n;
    else
      ++c.m;
  }
  return c;
}

Z4Quadratic double_enhancement(const Z2Quadratic& h) {
  std::vector<int> v;
  v.reserve(h.dim());
  for (int x : h.basis_values()) v.push_back(2 * x);
  return Z4Quadratic(h.form(), std::move(v));
}

DifferenceVector difference_vector(const Z4Quadratic& q, const Z4Quadratic& q_prime) {
  if (!(q.form() == q_prime.form())) throw Error(ErrorKind::FormMismatch, "enhancements live on different forms");
  if (!is_nonsingular(q.form())) throw Error(ErrorKind::SingularForm, "difference_vector needs a nonsingular form");
  const std::size_t n = q.dim();
  Z2Vec rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int delta = (q_prime.basis_values()[i] - q.basis_values()[i]) & 3;
    if (delta & 1) throw Error(ErrorKind::NotLinearDifference, "q' - q is odd on e_" + std::to_string(i));
    rhs.set(i, delta == 2);
  }
  auto t = z2_solve(q.form().rows(), rhs);
  return {*t, (2 * q(*t)) % 8};
}

Z2Subspace wu_sublagrangian(const Z4Quadratic& q) {
  const Z2Vec v = wu_class(q.form());
  const int qv = q(v);
  if (qv != 0)
    throw Error(ErrorKind::NotDivisibleBy4, "q(v)=" + std::to_string(qv) + " for Wu class v = " + v.str());
  if (v.is_zero()) return Z2Subspace(q.dim());
  return Z2Subspace(q.dim(), {v});
}

Subquotient isotropic_subquotient(const Z4Quadratic& q) {
  const Z2Subspace lag = wu_sublagrangian(q);
  const std::size_t n = q.dim();
  const Z2Vec diag = q.form().diagonal();
  // L^perp = {x : lambda(x, v) = 0} = {x : diag . x = 0}.
  const auto perp = z2_kernel({diag}, n);

  std::vector<Z2Vec> span = lag.basis();
  std::vector<Z2Vec> lifts;
  for (const auto& b : perp) {
    span.push_back(b);
    if (z2_rank(span) == span.size())
      lifts.push_back(b);
    else
      span.pop_back();
  }
  Z2SymForm mu = q.form().restrict_to(lifts);
  std::vector<int> h;
  h.reserve(lifts.size());
  for (const auto& x : lifts) h.push_back(q(x) / 2);
  return {Z2Quadratic(std::move(mu), std::move(h)), std::move(lifts)};
}

}  // namespace sigmod8
