#pragma once

// Seeded generators for property tests and the self-check suites.
//
// The stream is std::mt19937_64 (the standard's fixed 64-bit Mersenne
// Twister). uniform(lo, hi) returns lo + x mod (hi - lo + 1) for the next
// raw 64-bit output x, so sequences reproduce on any platform.

#include <cstdint>
#include <initializer_list>
#include <random>

#include "sigmod8/enhancements.hpp"
#include "sigmod8/fibration.hpp"
#include "sigmod8/intforms.hpp"
#include "sigmod8/symcomplex.hpp"
#include "sigmod8/z2forms.hpp"

namespace sigmod8 {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Seeded through std::seed_seq from the 32-bit halves of each key.
  Rng(std::initializer_list<std::uint64_t> keys);

  std::uint64_t next() { return engine_(); }
  long uniform(long lo, long hi);
  bool coin() { return (next() & 1u) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Uniformly random symmetric matrix over Z2, resampled until nonsingular.
Z2SymForm random_nonsingular_z2(Rng& rng, std::size_t dim);
/// Nonsingular form with zero diagonal (dim must be even).
Z2SymForm random_isotropic_z2(Rng& rng, std::size_t dim);
Z2Quadratic random_z2_enhancement(Rng& rng, const Z2SymForm& form);
Z4Quadratic random_z4_enhancement(Rng& rng, const Z2SymForm& form);

/// Random invertible matrix over Z2 as its rows.
std::vector<Z2Vec> random_invertible_z2(Rng& rng, std::size_t dim);
/// Images T(e_i) of a random isometry T of `form`, built from `steps`
/// transvections x -> x + lambda(c,x) c along vectors with lambda(c,c) = 0.
std::vector<Z2Vec> random_isometry_z2(Rng& rng, const Z2SymForm& form, std::size_t steps = 12);

/// Diagonal +-1 conjugated by random integer unipotents; entries stay
/// within 2^15.
IntSymForm random_unimodular(Rng& rng, std::size_t dim);
/// Entries uniform in [-bound, bound].
IntSymForm random_symmetric(Rng& rng, std::size_t dim, long bound);
/// Random invertible rational matrix with small entries.
RatMatrix random_invertible_rational(Rng& rng, std::size_t dim);

/// Product of 1..max_length transvections along vectors in {-1,0,1}^{2h}
/// (times `scale`), each applied with a random sign.
SymplecticMatrix random_symplectic(Rng& rng, std::size_t genus, std::size_t max_length = 6, long scale = 1);

/// Genus-2 base: f1, g1 random words, (f2, g2) = (g1, f1).
MonodromyData random_monodromy(Rng& rng, std::size_t genus, bool doubled = false);

/// 4k-dimensional complex concentrated in degree 2k with a random symmetric phi_0.
SymComplex random_middle_complex(Rng& rng, std::size_t rank, long bound = 3);
/// Dimension-4 complex on C_2 -> C_3 with d, phi_0, phi_1 satisfying the
/// structure relations by construction.
SymComplex random_two_degree_complex(Rng& rng, std::size_t rank2, std::size_t rank3);

}  // namespace sigmod8
