#include "sigmod8/symcomplex.hpp"

#include "sigmod8/error.hpp"
#include "sigmod8/z2forms.hpp"

namespace sigmod8 {

namespace {

void expect_shape(const IntMatrix& m, std::size_t rows, std::size_t cols, const std::string& what) {
  if (m.rows() != rows || m.cols() != cols)
    throw Error(ErrorKind::ShapeMismatch, what + " should be " + std::to_string(rows) + "x" + std::to_string(cols) +
                                              ", got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

IntMatrix scaled(const IntMatrix& m, int s) { return s > 0 ? m : IntMatrix(-m); }

}  // namespace

SymComplex::SymComplex(int n, std::vector<std::size_t> ranks, std::vector<IntMatrix> d, std::vector<IntMatrix> phi0,
                       std::vector<IntMatrix> phi1)
    : n_(n), ranks_(std::move(ranks)), d_(std::move(d)), phi0_(std::move(phi0)), phi1_(std::move(phi1)) {
  if (n_ < 0) throw Error(ErrorKind::ShapeMismatch, "negative dimension");
  const auto degrees = static_cast<std::size_t>(n_) + 1;
  if (ranks_.size() != degrees) throw Error(ErrorKind::ShapeMismatch, "need one rank per degree 0..n");
  d_.resize(degrees);
  phi0_.resize(degrees);
  phi1_.resize(degrees);
  for (int r = 0; r <= n_; ++r) {
    const auto ur = static_cast<std::size_t>(r);
    auto fill = [&](IntMatrix& m, std::size_t rows, std::size_t cols, const std::string& what) {
      if (m.rows() == 0 && m.cols() == 0)
        m = IntMatrix(rows, cols);
      else
        expect_shape(m, rows, cols, what);
    };
    fill(d_[ur], rank(r - 1), rank(r), "d " + std::to_string(r));
    fill(phi0_[ur], rank(r), rank(n_ - r), "phi0 " + std::to_string(r));
    fill(phi1_[ur], rank(r), rank(n_ - r + 1), "phi1 " + std::to_string(r));
  }
}

SymComplex SymComplex::from_form(const IntSymForm& form, int k) {
  const int n = 4 * k;
  std::vector<std::size_t> ranks(static_cast<std::size_t>(n) + 1, 0);
  ranks[static_cast<std::size_t>(2 * k)] = form.dim();
  std::vector<IntMatrix> phi0(ranks.size());
  phi0[static_cast<std::size_t>(2 * k)] = form.matrix();
  return SymComplex(n, std::move(ranks), {}, std::move(phi0), {});
}

std::size_t SymComplex::rank(int r) const {
  if (r < 0 || r > n_) return 0;
  return ranks_[static_cast<std::size_t>(r)];
}

IntMatrix SymComplex::d(int r) const {
  if (r < 0 || r > n_) return IntMatrix(rank(r - 1), rank(r));
  return d_[static_cast<std::size_t>(r)];
}

IntMatrix SymComplex::dstar(int p) const { return d(p).transpose(); }

IntMatrix SymComplex::phi(int s, int r) const {
  if (r < 0 || r > n_ || s < 0 || s > 1) return IntMatrix(rank(r), rank(n_ - r + s));
  return s == 0 ? phi0_[static_cast<std::size_t>(r)] : phi1_[static_cast<std::size_t>(r)];
}

StructureReport validate_structure(const SymComplex& c) {
  StructureReport rep;
  const int n = c.dimension();
  for (int r = 2; r <= n; ++r)
    if (!(c.d(r - 1) * c.d(r)).is_zero()) {
      rep.valid = false;
      rep.violations.push_back("d^2 != 0 at degree " + std::to_string(r));
    }
  for (int s = 0; s <= 1; ++s) {
    for (int r = 0; r <= n; ++r) {
      const int p = n - r + s - 1;  // source degree C^p
      IntMatrix total = c.d(r + 1) * c.phi(s, r + 1) + scaled(c.phi(s, r) * c.dstar(p + 1), sign_pow(r));
      if (s == 1) {
        // phi_0 + (-1)^s T phi_0 with T phi_0 at (r) from phi_0 : C^r -> C_p.
        const IntMatrix t = scaled(c.phi(0, p).transpose(), sign_pow(static_cast<long>(r) * p));
        const IntMatrix sym = c.phi(0, r) - t;
        total = total + scaled(sym, sign_pow(n + s - 1));
      }
      if (!total.is_zero()) {
        rep.valid = false;
        rep.violations.push_back("structure relation s=" + std::to_string(s) + " fails at C^" + std::to_string(p) +
                                 " -> C_" + std::to_string(r));
      }
    }
  }
  return rep;
}

Mod2CohomologyClass operator+(const Mod2CohomologyClass& a, const Mod2CohomologyClass& b) {
  Mod2CohomologyClass out{a.u, a.v};
  for (std::size_t i = 0; i < out.u.size(); ++i) out.u[i] += b.u[i];
  for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] += b.v[i];
  return out;
}

namespace {

int middle_degree(const SymComplex& c) {
  if (c.dimension() % 4 != 0)
    throw Error(ErrorKind::ShapeMismatch, "Pontryagin squares need dimension 4k, got " + std::to_string(c.dimension()));
  return c.dimension() / 2;
}

std::vector<Z2Vec> rows_mod2(const IntMatrix& m) {
  std::vector<Z2Vec> rows(m.rows(), Z2Vec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i].set(j, mod_nonneg(m(i, j), 2));
  return rows;
}

}  // namespace

std::vector<Mod2CohomologyClass> cohomology_mod2(const SymComplex& c) { return cohomology_mod2(c, middle_degree(c)); }

std::vector<Mod2CohomologyClass> cohomology_mod2(const SymComplex& c, int deg) {
  const std::size_t dim = c.rank(deg);
  // Cocycles: kernel of d^* : C^{deg} -> C^{deg+1}; its rows are the rows of d_{deg+1}^T.
  const auto cocycles = z2_kernel(rows_mod2(c.dstar(deg + 1)), dim);
  // Coboundaries: image of d^* : C^{deg-1} -> C^{deg}, spanned by the rows of d_deg.
  std::vector<Z2Vec> span = rows_mod2(c.d(deg));
  std::size_t r = z2_rank(span);

  std::vector<Mod2CohomologyClass> out;
  const IntMatrix up = c.dstar(deg + 1);
  for (const auto& z : cocycles) {
    span.push_back(z);
    const std::size_t nr = z2_rank(span);
    if (nr == r) {
      span.pop_back();
      continue;
    }
    r = nr;
    IntVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = z.get(i) ? 1 : 0;
    IntVector dv = up * v;
    for (auto& e : dv) mpz_divexact_ui(e.get_mpz_t(), e.get_mpz_t(), 2);
    out.push_back({std::move(dv), std::move(v)});
  }
  return out;
}

void check_class(const SymComplex& c, const Mod2CohomologyClass& x) {
  const int deg = middle_degree(c);
  if (x.v.size() != c.rank(deg) || x.u.size() != c.rank(deg + 1))
    throw Error(ErrorKind::InvalidClass, "class has the wrong shape");
  IntVector dv = c.dstar(deg + 1) * x.v;
  for (std::size_t i = 0; i < dv.size(); ++i)
    if (dv[i] != 2 * x.u[i]) throw Error(ErrorKind::InvalidClass, "d*v != 2u");
  for (const auto& e : c.dstar(deg + 2) * x.u)
    if (e != 0) throw Error(ErrorKind::InvalidClass, "d*u != 0");
}

int pontryagin_square(const SymComplex& c, const Mod2CohomologyClass& x) {
  check_class(c, x);
  const int deg = middle_degree(c);
  Integer total = bilinear(c.phi(0, deg), x.v, x.v);
  // phi_1 at degree deg+1 maps C^{deg} -> C_{deg+1}; evaluate u on phi_1(v).
  const IntVector image = c.phi(1, deg + 1) * x.v;
  Integer cross = 0;
  for (std::size_t i = 0; i < image.size(); ++i) cross += x.u[i] * image[i];
  total += 2 * cross;
  return static_cast<int>(mod_nonneg(total, 4));
}

int cup_product(const SymComplex& c, const Mod2CohomologyClass& x, const Mod2CohomologyClass& y) {
  const int deg = middle_degree(c);
  return static_cast<int>(mod_nonneg(bilinear(c.phi(0, deg), x.v, y.v), 2));
}

WuSignature wu_and_mod4_signature(const SymComplex& c) {
  const int deg = middle_degree(c);
  for (int r = 0; r <= c.dimension(); ++r)
    if (r != deg && c.rank(r) != 0)
      throw Error(ErrorKind::NotMiddleConcentrated, "C_" + std::to_string(r) + " is nonzero");
  const IntSymForm form(c.phi(0, deg));
  WuSignature out;
  out.wu = {IntVector{}, characteristic_vector(form)};
  out.p2 = pontryagin_square(c, out.wu);
  out.signature = signature_exact(form);
  out.consistent = mod_nonneg(Integer(out.signature), 4) == out.p2;
  return out;
}

}  // namespace sigmod8
