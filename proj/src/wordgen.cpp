#include "permlab/wordgen.hpp"

#include <algorithm>

#include "permlab/ttwp.hpp"

namespace permlab {

Word random_decider_word(Rng& rng, WordGenParams const& params) {
  int64_t length = rng.uniform(0, params.max_length);
  int64_t total =
      params.beta_weight + params.sigma_weight + params.tau_weight;
  Word w;
  std::vector<size_t> sigma_positions;
  for (int64_t i = 0; i < length; ++i) {
    int64_t roll = rng.uniform(0, total - 1);
    char const* base = kBetaName;
    if (roll >= params.beta_weight) {
      base = roll < params.beta_weight + params.sigma_weight ? kLineSigmaName
                                                             : kLineTauName;
    }
    if (base == kLineSigmaName) sigma_positions.push_back(w.letters.size());
    w.letters.emplace_back(base, std::nullopt,
                           rng.chance(0.5) ? 1 : -1);
  }
  if (rng.chance(params.balanced_fraction) && !sigma_positions.empty()) {
    // Make the sigma count even by demoting one sigma if needed, then
    // re-sign them half and half.
    if (sigma_positions.size() % 2 == 1) {
      size_t pos = sigma_positions.back();
      sigma_positions.pop_back();
      w.letters[pos].base = rng.chance(0.5) ? kBetaName : kLineTauName;
    }
    for (size_t i = 0; i < sigma_positions.size(); ++i) {
      w.letters[sigma_positions[i]].sign = i % 2 == 0 ? 1 : -1;
    }
    // Shuffle which positions carry which sign.
    for (size_t i = sigma_positions.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(rng.uniform(0, static_cast<int64_t>(i) - 1));
      std::swap(w.letters[sigma_positions[i - 1]].sign,
                w.letters[sigma_positions[j]].sign);
    }
  }
  return w;
}

Word random_reduced_word(Rng& rng, int64_t max_length,
                         int64_t alphabet_size) {
  int64_t length = rng.uniform(0, max_length);
  Word w;
  for (int64_t i = 0; i < length; ++i) {
    for (;;) {
      std::string base(1, static_cast<char>('a' + rng.uniform(0, alphabet_size - 1)));
      std::optional<int64_t> index;
      if (rng.chance(0.25)) index = rng.uniform(0, 9);
      Letter l(base, index, rng.chance(0.5) ? 1 : -1);
      if (!w.letters.empty() && w.letters.back().cancels(l)) continue;
      w.letters.push_back(l);
      break;
    }
  }
  return w;
}

Word random_unreduced_word(Rng& rng, int64_t max_length,
                           int64_t alphabet_size) {
  int64_t length = rng.uniform(0, max_length);
  Word w;
  for (int64_t i = 0; i < length; ++i) {
    if (!w.letters.empty() && rng.chance(0.3)) {
      // Plant a cancellation.
      w.letters.push_back(w.letters.back().inverse());
      continue;
    }
    std::string base(1, static_cast<char>('a' + rng.uniform(0, alphabet_size - 1)));
    w.letters.emplace_back(base, std::nullopt, rng.chance(0.5) ? 1 : -1);
  }
  return w;
}

IntegerMatrix random_matrix(Rng& rng, size_t max_dim, int64_t max_abs_entry) {
  size_t rows = static_cast<size_t>(rng.uniform(1, static_cast<int64_t>(max_dim)));
  size_t cols = static_cast<size_t>(rng.uniform(1, static_cast<int64_t>(max_dim)));
  IntegerMatrix m(rows, cols);
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) {
      m.at(i, j) = BigInt(rng.uniform(-max_abs_entry, max_abs_entry));
    }
  }
  return m;
}

Presentation random_presentation(Rng& rng, int64_t max_generators,
                                 int64_t max_relators,
                                 int64_t max_relator_length) {
  Presentation p;
  int64_t gens = rng.uniform(1, max_generators);
  for (int64_t i = 0; i < gens; ++i) {
    p.generators.push_back(std::string(1, static_cast<char>('a' + i)));
  }
  int64_t relators = rng.uniform(0, max_relators);
  for (int64_t r = 0; r < relators; ++r) {
    Word w;
    int64_t len = rng.uniform(0, max_relator_length);
    for (int64_t i = 0; i < len; ++i) {
      w.letters.emplace_back(p.generators[rng.uniform(0, gens - 1)],
                             std::nullopt, rng.chance(0.5) ? 1 : -1);
    }
    p.relators.push_back(w);
  }
  return p;
}

}  // namespace permlab
