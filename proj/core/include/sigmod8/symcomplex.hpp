#pragma once

// Finite n-dimensional symmetric chain complexes over Z carrying phi_0 and
// phi_1, their mod-2 cohomology in the middle degree and the algebraic
// Pontryagin square.
//
// Conventions:
//   d_r : C_r -> C_{r-1} is a (rank C_{r-1}) x (rank C_r) matrix,
//   d^* : C^{p-1} -> C^p is the transpose of d_p,
//   phi_s at degree r : C^{n-r+s} -> C_r is (rank C_r) x (rank C_{n-r+s}),
//   T phi = (-1)^{pq} phi^T for phi : C^p -> C_q.
// The checked relation, for s = 0, 1 and every r, is
//   d phi_s + (-1)^r phi_s d^* + (-1)^{n+s-1} (phi_{s-1} + (-1)^s T phi_{s-1}) = 0
// as a map C^{n-r+s-1} -> C_r, with phi_{-1} = 0.

#include <string>
#include <vector>

#include "sigmod8/exact.hpp"
#include "sigmod8/intforms.hpp"

namespace sigmod8 {

class SymComplex {
 public:
  /// Missing matrices default to zero of the right shape. Throws
  /// ShapeMismatch when a supplied matrix has the wrong shape.
  SymComplex(int n, std::vector<std::size_t> ranks, std::vector<IntMatrix> d, std::vector<IntMatrix> phi0,
             std::vector<IntMatrix> phi1);

  /// The form (C, phi) concentrated in degree 2k of a 4k-dimensional complex.
  static SymComplex from_form(const IntSymForm& form, int k = 0);

  int dimension() const noexcept { return n_; }
  std::size_t rank(int r) const;
  /// d_r, zero-shaped outside the range.
  IntMatrix d(int r) const;
  /// d^* : C^{p-1} -> C^p.
  IntMatrix dstar(int p) const;
  IntMatrix phi(int s, int r) const;

 private:
  int n_;
  std::vector<std::size_t> ranks_;
  std::vector<IntMatrix> d_;
  std::vector<IntMatrix> phi0_;
  std::vector<IntMatrix> phi1_;
};

struct StructureReport {
  bool valid = true;
  std::vector<std::string> violations;
};

StructureReport validate_structure(const SymComplex& c);

/// (u, v) with v in C^{2k}, u in C^{2k+1}, d^* v = 2u and d^* u = 0.
struct Mod2CohomologyClass {
  IntVector u;
  IntVector v;
};

Mod2CohomologyClass operator+(const Mod2CohomologyClass& a, const Mod2CohomologyClass& b);

/// One representative per basis element of H^degree(C; Z2), with 0/1
/// entries in v and u = d^* v / 2.
std::vector<Mod2CohomologyClass> cohomology_mod2(const SymComplex& c, int degree);
/// Middle degree 2k of a 4k-dimensional complex.
std::vector<Mod2CohomologyClass> cohomology_mod2(const SymComplex& c);

/// Throws InvalidClass unless d^* v = 2u and d^* u = 0.
void check_class(const SymComplex& c, const Mod2CohomologyClass& x);

/// phi_0(v,v) + 2 phi_1(v,u) in Z4, with phi_1(v,u) = <u, phi_1(v)>.
int pontryagin_square(const SymComplex& c, const Mod2CohomologyClass& x);

/// lambda(x, x') = phi_0(v, v') mod 2.
int cup_product(const SymComplex& c, const Mod2CohomologyClass& x, const Mod2CohomologyClass& y);

struct WuSignature {
  Mod2CohomologyClass wu;
  int p2 = 0;          // P_2(v) in Z4
  long signature = 0;  // sigma(phi_0)
  bool consistent = false;  // sigma = P_2(v) mod 4
};

/// Throws NotMiddleConcentrated or NotUnimodular.
WuSignature wu_and_mod4_signature(const SymComplex& c);

}  // namespace sigmod8
