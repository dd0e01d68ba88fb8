// Seeded random generators for words, matrices and presentations.  All
// sampling goes through Rng so that reruns with the same seed reproduce
// byte-identical reports.

#ifndef PERMLAB_WORDGEN_HPP_
#define PERMLAB_WORDGEN_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "permlab/abelian.hpp"
#include "permlab/words.hpp"

namespace permlab {

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next() { return engine_(); }

  // Uniform in [lo, hi], inclusive.
  int64_t uniform(int64_t lo, int64_t hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int64_t>(engine_() % span);
  }

  bool chance(double p) {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
  }

 private:
  std::mt19937_64 engine_;
};

struct WordGenParams {
  int64_t max_length = 40;
  // Relative letter weights.
  int64_t beta_weight = 2;
  int64_t sigma_weight = 3;
  int64_t tau_weight = 2;
  // Fraction of words adjusted to sigma-exponent zero.
  double balanced_fraction = 0.5;
};

// Random word over {b, s, t} with inverses.  When the balanced adjustment
// fires, sigma letters are re-signed (and an odd sigma replaced) so the
// sigma-exponent is exactly zero without changing the length.
Word random_decider_word(Rng& rng, WordGenParams const& params = {});

// Random reduced word over single-letter generator names, for parser
// round-trips.
Word random_reduced_word(Rng& rng, int64_t max_length, int64_t alphabet_size);

// Random word with cancellations likely, for free-reduction tests.
Word random_unreduced_word(Rng& rng, int64_t max_length,
                           int64_t alphabet_size);

IntegerMatrix random_matrix(Rng& rng, size_t max_dim, int64_t max_abs_entry);

Presentation random_presentation(Rng& rng, int64_t max_generators,
                                 int64_t max_relators,
                                 int64_t max_relator_length);

}  // namespace permlab

#endif  // PERMLAB_WORDGEN_HPP_
