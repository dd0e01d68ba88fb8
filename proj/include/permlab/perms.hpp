// Computable permutations of the lattice Z x omega, evaluated lazily per
// point.  Every permutation carries both directions explicitly, so taking
// inverses never needs search.  The composition convention throughout is
// (p q)(s) = q(p(s)): the left factor acts first.

#ifndef PERMLAB_PERMS_HPP_
#define PERMLAB_PERMS_HPP_

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "permlab/coener.hpp"

namespace permlab {

// A lattice position: integer column, nonnegative row.
struct Point {
  int64_t col = 0;
  int64_t row = 0;

  friend bool operator==(Point const& a, Point const& b) {
    return a.col == b.col && a.row == b.row;
  }
  friend auto operator<=>(Point const& a, Point const& b) = default;
};

std::string to_string(Point const& p);

// A finite evaluation window: columns [cmin, cmax] x rows [0, rmax].
struct Region {
  int64_t cmin = 0;
  int64_t cmax = 0;
  int64_t rmax = 0;

  Region(int64_t cmin_, int64_t cmax_, int64_t rmax_)
      : cmin(cmin_), cmax(cmax_), rmax(rmax_) {
    if (cmin > cmax || rmax < 0) {
      throw std::invalid_argument("malformed region");
    }
  }

  // Visits every point; f returns false to stop early.
  template <typename F>
  bool for_each(F&& f) const {
    for (int64_t c = cmin; c <= cmax; ++c) {
      for (int64_t r = 0; r <= rmax; ++r) {
        if (!f(Point{c, r})) return false;
      }
    }
    return true;
  }
};

// Total point map bundled with its explicit inverse.  Values are immutable
// once constructed; compose builds a lazy evaluation tree.
struct Permutation {
  std::function<Point(Point)> forward;
  std::function<Point(Point)> backward;
  std::string label;
};

Point apply(Permutation const& p, Point pt);
Point apply_inverse(Permutation const& p, Point pt);

Permutation identity_perm();
Permutation inverse(Permutation const& p);

// (p q)(s) = q(p(s)); backward composes in the opposite order.
Permutation compose(Permutation const& p, Permutation const& q);

// Column shift by +2: moves each pair-column C^i_x = {2x+i} x omega to
// C^i_{x+1}.
Permutation sigma_paired();

// Swaps columns 0 and 1 pointwise; identity elsewhere.  Self-inverse.
Permutation tau_paired();

// A column function f: omega x omega -> omega with f(x, n) <= x.  Queried
// lazily; the bound is validated per call.
struct ColumnFunction {
  std::function<int64_t(int64_t, int64_t)> f;
  std::string name;
};

class BoundViolation : public std::runtime_error {
 public:
  BoundViolation(int64_t x, int64_t n, int64_t value)
      : std::runtime_error("column function out of bounds: f(" +
                           std::to_string(x) + ", " + std::to_string(n) +
                           ") = " + std::to_string(value)),
        x_(x), n_(n), value_(value) {}
  [[nodiscard]] int64_t x() const { return x_; }
  [[nodiscard]] int64_t n() const { return n_; }
  [[nodiscard]] int64_t value() const { return value_; }

 private:
  int64_t x_, n_, value_;
};

// Checked call; throws BoundViolation unless 0 <= f(x, n) <= x.
int64_t column_value(ColumnFunction const& f, int64_t x, int64_t n);

// Row r of column 2x decomposes uniquely as r = n(x+1) + k with
// 0 <= k <= x.  Within each such cell the permutation cycles the first
// f(x, n) + 1 rows:
//   k <  f(x,n): r -> r + 1
//   k == f(x,n): r -> n(x+1)
//   otherwise  : fixed,
// and every other column (odd or negative) is fixed.
Permutation alpha_from_f(ColumnFunction const& f);

// The per-column row action of alpha_from_f on column 2x, exposed for
// predictions and tests.
int64_t alpha_row_action(ColumnFunction const& f, int64_t x, int64_t row);
int64_t alpha_row_action_inverse(ColumnFunction const& f, int64_t x,
                                 int64_t row);

// Column shift by +1 on the integer-indexed column array.
Permutation sigma_line();

// The 2-cycles (<0, 3t+1>, <0, 3t+2>) for every t; identity elsewhere.
// Self-inverse.
Permutation tau_triples();

// Codes the graph of the injective coder g: for every t a 2-cycle
// (<g(t), 3t>, <g(t), 3t+1>); identity elsewhere.  Whether a point moves
// takes a single graph query g(floor(r/3)) == column.  Self-inverse.
Permutation beta_from_g(InjectiveCoder const& g);

// A permutation of omega embedded as column 0: the k-th value n emitted by
// e (within step_horizon) becomes one n-cycle on the next n previously
// unused rows, blocks allocated in emission order.  Identity elsewhere.
Permutation cycle_adder(StepEnumerator const& e, int64_t step_horizon);

bool bounded_equal(Permutation const& p, Permutation const& q,
                   Region const& r);
bool is_identity_on(Permutation const& p, Region const& r);

// First point of r where p and q disagree, if any.
std::optional<Point> first_difference(Permutation const& p,
                                      Permutation const& q, Region const& r);

// Group-target adapter for words::evaluate_hom.
struct PermutationGroup {
  using Element = Permutation;
  [[nodiscard]] Element identity() const { return identity_perm(); }
  [[nodiscard]] Element multiply(Element const& a, Element const& b) const {
    return compose(a, b);
  }
  [[nodiscard]] Element invert(Element const& a) const { return inverse(a); }
};

}  // namespace permlab

#endif  // PERMLAB_PERMS_HPP_
