// Finite presentations, abelianization, Smith normal form over exact
// integers, abelian-invariant classification, and the strong diagonal
// construction Z x prod (G_u)_ab.

#ifndef PERMLAB_ABELIAN_HPP_
#define PERMLAB_ABELIAN_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "permlab/bigint.hpp"
#include "permlab/words.hpp"

namespace permlab {

// <generators; relators>.  Relator letters must use listed generators.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
};

// Throws std::invalid_argument when a relator mentions an unknown
// generator.
void validate_presentation(Presentation const& p);

// First line: whitespace-separated generator names.  Each further line is
// one relator in the word grammar; '#' starts a comment.
Presentation parse_presentation(std::istream& in);

std::string format_presentation(Presentation const& p);

// Rectangular matrix of exact integers.
struct IntegerMatrix {
  size_t rows = 0;
  size_t cols = 0;
  std::vector<BigInt> data;  // row-major

  IntegerMatrix() = default;
  IntegerMatrix(size_t r, size_t c) : rows(r), cols(c), data(r * c) {}

  BigInt& at(size_t r, size_t c) { return data[r * cols + c]; }
  [[nodiscard]] BigInt const& at(size_t r, size_t c) const {
    return data[r * cols + c];
  }

  static IntegerMatrix identity(size_t n);
  friend bool operator==(IntegerMatrix const& a, IntegerMatrix const& b) =
      default;
};

IntegerMatrix matrix_multiply(IntegerMatrix const& a, IntegerMatrix const& b);

// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(IntegerMatrix const& m);

// Same generators, plus every commutator [x_i, x_j] for i < j as an extra
// relator.
Presentation abelianize(Presentation const& p);

// One row per relator with a nonzero exponent-sum image, one column per
// generator.  Commutator relators vanish and are omitted.
IntegerMatrix relation_matrix(Presentation const& p);

struct SmithResult {
  IntegerMatrix d;                       // diagonal, d1 | d2 | ..., di >= 0
  std::optional<IntegerMatrix> u, v;     // unimodular, u * m * v = d
};

// Diagonalization by unimodular row and column operations, pivoting on a
// least-absolute-value nonzero entry to limit growth.
SmithResult smith_normal_form(IntegerMatrix const& m, bool want_transforms);

// free_rank = #generators - #nonzero diagonal entries; invariant_factors
// are the diagonal entries > 1 in divisibility order.
struct AbelianInvariants {
  int64_t free_rank = 0;
  std::vector<int64_t> invariant_factors;

  friend bool operator==(AbelianInvariants const& a,
                         AbelianInvariants const& b) = default;
};

AbelianInvariants abelian_invariants(Presentation const& p);

// Abelianizations are isomorphic iff the invariants agree componentwise.
bool abelian_iso(Presentation const& p1, Presentation const& p2);

// The canonical presentation of Z x prod (G_u)_ab: the disjointly renamed
// generator union of all abelianize(G_u) (generator "n" of input u becomes
// "g{u}_n"), one fresh generator "z", and all cross-commutators.  For an
// empty input list this is <z;>, the group Z.
Presentation strong_diagonal(std::vector<Presentation> const& inputs);

struct DiagonalWitness {
  size_t input = 0;       // 1-based, matching the renaming prefix
  int64_t input_rank = 0;
  int64_t output_rank = 0;
  bool iso = false;       // abelian_iso(output, abelianize(input))
};

struct DiagonalReport {
  AbelianInvariants output_invariants;
  std::vector<DiagonalWitness> witnesses;
  [[nodiscard]] bool ok() const {
    for (auto const& w : witnesses) {
      if (w.iso || w.output_rank <= w.input_rank) return false;
    }
    return true;
  }
};

// Verifies rank(output) > rank((G_u)_ab) and non-isomorphy of the
// abelianizations for every input.
DiagonalReport diagonal_check(Presentation const& output,
                              std::vector<Presentation> const& inputs);

}  // namespace permlab

#endif  // PERMLAB_ABELIAN_HPP_
