#include "sigmod8/z2forms.hpp"

#include <algorithm>
#include <bit>

#include "sigmod8/error.hpp"

namespace sigmod8 {

Z2Vec Z2Vec::unit(std::size_t dim, std::size_t i) {
  Z2Vec v(dim);
  v.set(i, true);
  return v;
}

Z2Vec Z2Vec::from_bits(std::span<const int> bits) {
  Z2Vec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) v.set(i, bits[i] & 1);
  return v;
}

Z2Vec Z2Vec::from_mask(std::size_t dim, std::uint64_t mask) {
  Z2Vec v(dim);
  if (dim == 0) return v;
  if (dim < 64) mask &= (std::uint64_t{1} << dim) - 1;
  v.words_[0] = mask;
  return v;
}

void Z2Vec::set(std::size_t i, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << (i & 63);
  if (value)
    words_[i >> 6] |= bit;
  else
    words_[i >> 6] &= ~bit;
}

bool Z2Vec::is_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t Z2Vec::popcount() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

std::size_t Z2Vec::lowest() const noexcept {
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k]) return k * 64 + std::countr_zero(words_[k]);
  return dim_;
}

Z2Vec& Z2Vec::operator^=(const Z2Vec& o) {
  if (o.dim_ != dim_) throw Error(ErrorKind::ShapeMismatch, "Z2Vec dimensions differ");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
  return *this;
}

bool Z2Vec::dot(const Z2Vec& o) const {
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & o.words_[k];
  return std::popcount(acc) & 1;
}

std::size_t Z2Vec::and_popcount(const Z2Vec& o) const {
  std::size_t n = 0;
  for (std::size_t k = 0; k < words_.size(); ++k) n += std::popcount(words_[k] & o.words_[k]);
  return n;
}

std::string Z2Vec::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < dim_; ++i) {
    if (i) s += ',';
    s += get(i) ? '1' : '0';
  }
  return s + ")";
}

std::strong_ordering operator<=>(const Z2Vec& a, const Z2Vec& b) {
  if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
  for (std::size_t i = 0; i < a.dim_; ++i)
    if (a.get(i) != b.get(i)) return a.get(i) ? std::strong_ordering::greater : std::strong_ordering::less;
  return std::strong_ordering::equal;
}

// --- elimination -----------------------------------------------------------

namespace {

// In-place reduced row echelon form; returns the pivot column of each
// surviving row, and drops zero rows.
std::vector<std::size_t> rref(std::vector<Z2Vec>& rows, std::size_t dim) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

std::size_t z2_rank(std::vector<Z2Vec> rows) {
  if (rows.empty()) return 0;
  return rref(rows, rows.front().dim()).size();
}

std::optional<Z2Vec> z2_solve(const std::vector<Z2Vec>& rows, const Z2Vec& rhs) {
  if (rows.empty()) return Z2Vec(0);
  const std::size_t dim = rows.front().dim();
  std::vector<Z2Vec> aug;
  aug.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Z2Vec a(dim + 1);
    for (std::size_t j = 0; j < dim; ++j) a.set(j, rows[i].get(j));
    a.set(dim, rhs.get(i));
    aug.push_back(std::move(a));
  }
  auto pivots = rref(aug, dim + 1);
  Z2Vec x(dim);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == dim) return std::nullopt;
    x.set(pivots[i], aug[i].get(dim));
  }
  return x;
}

std::vector<Z2Vec> z2_kernel(const std::vector<Z2Vec>& rows, std::size_t dim) {
  std::vector<Z2Vec> m = rows;
  auto pivots = rref(m, dim);
  std::vector<bool> is_pivot(dim, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Z2Vec> basis;
  for (std::size_t c = 0; c < dim; ++c) {
    if (is_pivot[c]) continue;
    Z2Vec v = Z2Vec::unit(dim, c);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (m[i].get(c)) v.set(pivots[i], true);
    basis.push_back(std::move(v));
  }
  return basis;
}

// --- subspaces -------------------------------------------------------------

Z2Subspace::Z2Subspace(std::size_t ambient_dim, std::vector<Z2Vec> generators)
    : ambient_dim_(ambient_dim), basis_(std::move(generators)) {
  for (const auto& g : basis_)
    if (g.dim() != ambient_dim_) throw Error(ErrorKind::ShapeMismatch, "generator dimension");
  rref(basis_, ambient_dim_);
}

Z2Subspace Z2Subspace::full(std::size_t ambient_dim) {
  std::vector<Z2Vec> gens;
  for (std::size_t i = 0; i < ambient_dim; ++i) gens.push_back(Z2Vec::unit(ambient_dim, i));
  return Z2Subspace(ambient_dim, std::move(gens));
}

bool Z2Subspace::contains(const Z2Vec& x) const {
  Z2Vec r = x;
  for (const auto& b : basis_) {
    std::size_t c = b.lowest();
    if (r.get(c)) r ^= b;
  }
  return r.is_zero();
}

// --- forms -----------------------------------------------------------------

Z2SymForm::Z2SymForm(std::vector<Z2Vec> rows) : rows_(std::move(rows)) {
  const std::size_t n = rows_.size();
  for (const auto& r : rows_)
    if (r.dim() != n) throw Error(ErrorKind::InvalidInput, "Z2 form matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rows_[i].get(j) != rows_[j].get(i))
        throw Error(ErrorKind::InvalidInput, "Z2 form matrix is not symmetric");
}

Z2SymForm Z2SymForm::from_matrix(const std::vector<std::vector<int>>& m) {
  std::vector<Z2Vec> rows;
  for (const auto& r : m) {
    if (r.size() != m.size()) throw Error(ErrorKind::InvalidInput, "Z2 form matrix is not square");
    rows.push_back(Z2Vec::from_bits(r));
  }
  return Z2SymForm(std::move(rows));
}

Z2SymForm Z2SymForm::P() { return from_matrix({{1}}); }
Z2SymForm Z2SymForm::H() { return from_matrix({{0, 1}, {1, 0}}); }

Z2Vec Z2SymForm::apply(const Z2Vec& x) const {
  Z2Vec y(dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (rows_[i].dot(x)) y.set(i, true);
  return y;
}

Z2Vec Z2SymForm::diagonal() const {
  Z2Vec d(dim());
  for (std::size_t i = 0; i < dim(); ++i) d.set(i, rows_[i].get(i));
  return d;
}

Z2SymForm Z2SymForm::restrict_to(const std::vector<Z2Vec>& basis) const {
  const std::size_t m = basis.size();
  std::vector<Z2Vec> images;
  images.reserve(m);
  for (const auto& b : basis) images.push_back(apply(b));
  std::vector<Z2Vec> rows(m, Z2Vec(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) rows[i].set(j, basis[i].dot(images[j]));
  return Z2SymForm(std::move(rows));
}

Z2SymForm direct_sum(const Z2SymForm& a, const Z2SymForm& b) {
  const std::size_t n = a.dim() + b.dim();
  std::vector<Z2Vec> rows(n, Z2Vec(n));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) rows[i].set(j, a(i, j));
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) rows[a.dim() + i].set(a.dim() + j, b(i, j));
  return Z2SymForm(std::move(rows));
}

Z2SymForm direct_sum_power(const Z2SymForm& a, std::size_t copies) {
  Z2SymForm out;
  for (std::size_t i = 0; i < copies; ++i) out = direct_sum(out, a);
  return out;
}

bool is_nonsingular(const Z2SymForm& form) { return z2_rank(form.rows()) == form.dim(); }

Z2Vec wu_class(const Z2SymForm& form) {
  // Symmetric Gram matrix: lambda(e_i, v) = row_i . v must equal lambda(e_i, e_i).
  auto v = z2_solve(form.rows(), form.diagonal());
  if (!v || !is_nonsingular(form)) throw Error(ErrorKind::SingularForm, "wu_class needs a nonsingular form");
  return *v;
}

namespace {

// Splits a nonsingular isotropic span into hyperbolic pairs. `basis` spans
// the space; vectors are ambient.
std::vector<SymplecticPair> split_hyperbolic(const Z2SymForm& form, std::vector<Z2Vec> basis) {
  std::vector<SymplecticPair> pairs;
  while (!basis.empty()) {
    Z2Vec e = basis.front();
    basis.erase(basis.begin());
    auto partner = std::find_if(basis.begin(), basis.end(), [&](const Z2Vec& w) { return form.pair(e, w); });
    if (partner == basis.end())
      throw Error(ErrorKind::DegenerateRestriction, "restricted form is singular");
    Z2Vec f = *partner;
    basis.erase(partner);
    // Project the rest onto <e, f>^perp.
    for (auto& w : basis) {
      const bool we = form.pair(w, e);
      const bool wf = form.pair(w, f);
      if (wf) w ^= e;
      if (we) w ^= f;
    }
    pairs.push_back({std::move(e), std::move(f)});
  }
  return pairs;
}

}  // namespace

Z2Decomposition decompose(const Z2SymForm& form) {
  if (!is_nonsingular(form)) throw Error(ErrorKind::SingularForm, "decompose needs a nonsingular form");
  const std::size_t n = form.dim();
  std::vector<Z2Vec> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(Z2Vec::unit(n, i));

  Z2Decomposition d;
  for (;;) {
    auto aniso = std::find_if(basis.begin(), basis.end(), [&](const Z2Vec& x) { return form.pair(x, x); });
    if (aniso == basis.end()) break;
    Z2Vec x = *aniso;
    basis.erase(aniso);
    for (auto& w : basis)
      if (form.pair(w, x)) w ^= x;
    ++d.p;
  }
  // lambda(x,x) is additive over Z2, so an isotropic basis spans an isotropic space.
  d.k = split_hyperbolic(form, std::move(basis)).size();
  return d;
}

std::vector<SymplecticPair> symplectic_split(const Z2SymForm& form, const Z2Subspace& subspace) {
  if (subspace.ambient_dim() != form.dim()) throw Error(ErrorKind::ShapeMismatch, "subspace ambient dimension");
  for (const auto& b : subspace.basis())
    if (form.pair(b, b)) throw Error(ErrorKind::AnisotropicInput, "lambda(x,x) = 1 for x = " + b.str());
  if (!is_nonsingular(form.restrict_to(subspace.basis())))
    throw Error(ErrorKind::DegenerateRestriction, "restricted form is singular");
  return split_hyperbolic(form, subspace.basis());
}

int witt_class_sym(const Z2SymForm& form) { return static_cast<int>(decompose(form).p % 2); }

}  // namespace sigmod8
