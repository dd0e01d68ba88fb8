// Equivalence relations with co-c.e. graph, presented by a column function
// f with f(x, n) <= x:  x E y  iff  f(x, n) = f(y, n) for every n.  The
// generator triple (sigma, tau, alpha) codes f into a permutation group,
// and the coding terms t_x carry the relation to the word problem.  All
// verification here is bounded and says so in its reports: a refutation is
// definite, an affirmation holds "up to N" / "on the region" only.

#ifndef PERMLAB_PI01_HPP_
#define PERMLAB_PI01_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permlab/perms.hpp"
#include "permlab/words.hpp"

namespace permlab {

// Generator names used by the coding terms.
inline constexpr char kAlphaName[] = "a";
inline constexpr char kSigmaName[] = "s";
inline constexpr char kTauName[] = "t";

// The permutation triple generated from a column function.
struct CodedGroup {
  Permutation sigma;
  Permutation tau;
  Permutation alpha;
  ColumnFunction f;
};

CodedGroup coded_group(ColumnFunction const& f);

// Assignment {a, s, t} -> {alpha, sigma, tau} for evaluate_hom.
std::map<GenKey, Permutation> coded_assignment(CodedGroup const& g);

// Built-in presentations.  "identity": f(x,n) = x.  "trivial": f = 0.
// "mod<k>": f(x,n) = x mod k.  Throws std::invalid_argument for unknown
// names.
ColumnFunction builtin_column_function(std::string const& name);

// Table-driven column function: explicit "x n value" rows plus a default
// rule ("x", "0" or "x mod k") for absent cells.  The loader rejects rows
// with value > x or value < 0.
ColumnFunction parse_column_table(std::istream& in, std::string name);

// f(x, n) = f(y, n) for all n <= bound.  False is a sound refutation;
// true affirms agreement up to the bound only.
bool relation_holds_bounded(ColumnFunction const& f, int64_t x, int64_t y,
                            int64_t bound);

// Least n <= bound with f(x, n) != f(y, n), if any.
std::optional<int64_t> first_f_disagreement(ColumnFunction const& f,
                                            int64_t x, int64_t y,
                                            int64_t bound);

// The coding term t_x = Cj(a, s^-x) t Cj(a^-1, s^-x) with Cj(u, v) =
// v^-1 u v, freely reduced, over the alphabet {a, s, t}.
Word term_t(int64_t x);

// The closed-form action of t_x: columns other than 0 and 1 are fixed,
// column 0 row y goes to column 1 row alpha_x(y), and column 1 row y goes
// to column 0 row alpha_x^-1(y), where alpha_x is the row action of alpha
// on column 2x.
Point predicted_t_action(ColumnFunction const& f, int64_t x, Point pt);

// Report of the two-sided bounded check of the coding equivalence
//   (forall n) f(x,n) = f(y,n)  <=>  t_x = t_y.
// The right side is evaluated by composing the actual permutations over
// the witness region (columns [0,1] x rows [0, (N+1)(max(x,y)+1)]).
struct CodeEquationReport {
  int64_t x = 0;
  int64_t y = 0;
  int64_t bound = 0;
  int64_t region_rmax = 0;

  bool f_agrees_bounded = false;
  std::optional<int64_t> f_witness_n;  // first disagreement when refuted

  bool perms_agree_on_region = false;
  std::optional<Point> perm_witness;   // first differing point when refuted
  Point perm_witness_images[2] = {};   // t_x and t_y images at the witness

  // Whether the two bounded answers coincide.  The construction makes a
  // mismatch possible: two columns can carry the same value sequence yet
  // induce different row permutations, because the cell layout of column
  // 2x depends on x.  Mismatches are therefore reported, with the witness
  // proving which side is definite.
  [[nodiscard]] bool sides_match() const {
    return f_agrees_bounded == perms_agree_on_region;
  }
};

CodeEquationReport verify_code_equation(ColumnFunction const& f, int64_t x,
                                        int64_t y, int64_t bound);

// Bounded check that a candidate map x -> word is a reduction of the
// relation presented by f to permutation equality: for each sampled pair,
// relation_holds_bounded is compared against bounded equality of the
// evaluated images on the witness region.
struct ReductionViolation {
  int64_t x = 0;
  int64_t y = 0;
  bool relation_bounded = false;
  bool images_equal_bounded = false;
};

struct ReductionReport {
  int64_t bound = 0;
  int64_t pairs_checked = 0;
  std::vector<ReductionViolation> violations;
  [[nodiscard]] bool ok() const { return violations.empty(); }
};

ReductionReport reduction_check(
    ColumnFunction const& f, std::map<int64_t, Word> const& candidate,
    std::vector<std::pair<int64_t, int64_t>> const& sample, int64_t bound);

}  // namespace permlab

#endif  // PERMLAB_PI01_HPP_
