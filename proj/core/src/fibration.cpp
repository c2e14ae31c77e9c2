#include "sigmod8/fibration.hpp"

#include <future>
#include <stdexcept>

#include "sigmod8/error.hpp"

namespace sigmod8 {

IntMatrix standard_j(std::size_t genus) {
  IntMatrix j(2 * genus, 2 * genus);
  for (std::size_t i = 0; i < genus; ++i) {
    j(i, i + genus) = 1;
    j(i + genus, i) = -1;
  }
  return j;
}

bool is_symplectic(const IntMatrix& m) {
  if (!m.is_square() || m.rows() % 2 != 0)
    throw Error(ErrorKind::OddDimension,
                "expected an even square matrix, got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  const IntMatrix j = standard_j(m.rows() / 2);
  return m.transpose() * j * m == j;
}

SymplecticMatrix::SymplecticMatrix(IntMatrix m) : m_(std::move(m)) {
  if (!is_symplectic(m_)) throw Error(ErrorKind::NotSymplectic, "M^T J M != J");
}

SymplecticMatrix SymplecticMatrix::identity(std::size_t genus) {
  return SymplecticMatrix(IntMatrix::identity(2 * genus), Unchecked{});
}

SymplecticMatrix SymplecticMatrix::inverse() const {
  const IntMatrix j = standard_j(genus());
  return SymplecticMatrix(-(j * m_.transpose() * j), Unchecked{});
}

SymplecticMatrix SymplecticMatrix::operator-() const { return SymplecticMatrix(-m_, Unchecked{}); }

bool SymplecticMatrix::is_trivial_mod(long modulus) const {
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = 0; j < m_.cols(); ++j)
      if (mod_nonneg(m_(i, j) - (i == j ? 1 : 0), modulus) != 0) return false;
  return true;
}

SymplecticMatrix operator*(const SymplecticMatrix& a, const SymplecticMatrix& b) {
  if (a.genus() != b.genus()) throw Error(ErrorKind::InvalidInput, "genus mismatch in product");
  return SymplecticMatrix(a.m_ * b.m_, SymplecticMatrix::Unchecked{});
}

SymplecticMatrix transvection(const IntVector& c) {
  if (c.size() % 2 != 0) throw Error(ErrorKind::OddDimension, "vector length " + std::to_string(c.size()));
  bool zero = true;
  for (const auto& x : c) zero = zero && x == 0;
  if (zero) throw Error(ErrorKind::ZeroVector, "transvection along 0");
  const std::size_t n = c.size();
  const IntMatrix j = standard_j(n / 2);
  // Row vector c^T J.
  IntVector cj(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) cj[k] += c[i] * j(i, k);
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) m(r, k) += c[r] * cj[k];
  return SymplecticMatrix(std::move(m));
}

SymplecticMatrix commutator(const SymplecticMatrix& f, const SymplecticMatrix& g) {
  return f * g * f.inverse() * g.inverse();
}

IntMatrix commutator_product(std::size_t fibre_genus, const std::vector<MonodromyPair>& pairs) {
  SymplecticMatrix acc = SymplecticMatrix::identity(fibre_genus);
  for (const auto& p : pairs) acc = acc * commutator(p.f, p.g);
  return acc.matrix();
}

MonodromyData::MonodromyData(std::size_t fibre_genus, std::vector<MonodromyPair> pairs)
    : h_(fibre_genus), pairs_(std::move(pairs)) {
  for (const auto& p : pairs_)
    if (p.f.genus() != h_ || p.g.genus() != h_)
      throw Error(ErrorKind::InvalidInput, "monodromy matrix does not have genus " + std::to_string(h_));
  if (const IntMatrix prod = commutator_product(h_, pairs_); prod != IntMatrix::identity(2 * h_))
    throw Error(ErrorKind::CommutatorRelationViolated, "product of commutators is " + to_string(prod));
}

MonodromyData MonodromyData::identity(std::size_t fibre_genus, std::size_t base_genus) {
  const auto one = SymplecticMatrix::identity(fibre_genus);
  return MonodromyData(fibre_genus, std::vector<MonodromyPair>(base_genus, {one, one}));
}

RatSymForm wall_form_closed(const SymplecticMatrix& f, const SymplecticMatrix& g) {
  const std::size_t n = f.matrix().rows();
  const RatMatrix id = RatMatrix::identity(n);
  const RatMatrix rf = to_rational(f.matrix());
  const RatMatrix rg = to_rational(g.matrix());
  const auto inv = inverse(id - rf);
  if (!inv) throw Error(ErrorKind::OneMinusFSingular, "det(I - f) = 0");
  const RatMatrix s =
      to_rational(standard_j(f.genus())) * (id - to_rational(g.inverse().matrix())) * *inv * (rg - rf);
  if (!s.is_symmetric()) throw std::logic_error("wall_form_closed: S(f,g) is not symmetric");
  return RatSymForm(s);
}

WallForm wall_form_general(const SymplecticMatrix& f, const SymplecticMatrix& g) {
  const std::size_t n = f.matrix().rows();
  const IntMatrix id = IntMatrix::identity(n);
  const IntMatrix a = id - f.matrix();
  const IntMatrix b = id - g.matrix();
  RatMatrix stacked(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      stacked(i, j) = a(i, j);
      stacked(i, n + j) = b(i, j);
    }

  WallForm out;
  out.kernel = nullspace(stacked);
  const std::size_t k = out.kernel.size();
  const RatMatrix ja = to_rational(standard_j(f.genus()) * a);

  std::vector<RatVector> sums(k, RatVector(n));
  std::vector<RatVector> images(k);
  for (std::size_t i = 0; i < k; ++i) {
    RatVector y(out.kernel[i].begin(), out.kernel[i].begin() + static_cast<std::ptrdiff_t>(n));
    for (std::size_t r = 0; r < n; ++r) sums[i][r] = out.kernel[i][r] + out.kernel[i][n + r];
    images[i] = ja * y;
  }
  out.psi = RatMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t r = 0; r < n; ++r) out.psi(i, j) += sums[i][r] * images[j][r];
  if (!out.psi.is_symmetric()) throw std::logic_error("wall_form_general: Psi is not symmetric on the kernel");
  out.signature = signature_exact(out.psi);
  return out;
}

long handle_wall_signature(const SymplecticMatrix& f, const SymplecticMatrix& g) {
  return wall_form_general(f, g * f.inverse() * g.inverse()).signature;
}

long handle_signature(const SymplecticMatrix& f, const SymplecticMatrix& g) {
  return -wall_form_general(f.inverse(), g * f.inverse() * g.inverse()).signature;
}

BundleReport bundle_report(const MonodromyData& m, bool parallel) {
  using Pair = std::pair<long, long>;
  auto evaluate = [](const MonodromyPair& p) -> Pair {
    return {handle_signature(p.f, p.g), handle_wall_signature(p.f, p.g)};
  };

  std::vector<Pair> values;
  if (parallel && m.pairs().size() > 1) {
    std::vector<std::future<Pair>> jobs;
    for (const auto& p : m.pairs()) jobs.push_back(std::async(std::launch::async, evaluate, std::cref(p)));
    for (auto& j : jobs) values.push_back(j.get());
  } else {
    for (const auto& p : m.pairs()) values.push_back(evaluate(p));
  }

  BundleReport rep;
  for (const auto& [handle, wall] : values) {
    rep.handles.push_back(handle);
    rep.wall_handles.push_back(wall);
    rep.total += handle;
    rep.wall_total += wall;
  }
  return rep;
}

long bundle_signature(const MonodromyData& m, bool parallel) { return bundle_report(m, parallel).total; }

namespace {

bool all_trivial_mod(const MonodromyData& m, long modulus) {
  for (const auto& p : m.pairs())
    if (!p.f.is_trivial_mod(modulus) || !p.g.is_trivial_mod(modulus)) return false;
  return true;
}

}  // namespace

bool z4_trivial_check(const MonodromyData& m) { return all_trivial_mod(m, 4); }
bool z2_trivial_check(const MonodromyData& m) { return all_trivial_mod(m, 2); }

}  // namespace sigmod8
