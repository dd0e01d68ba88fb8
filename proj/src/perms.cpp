#include "permlab/perms.hpp"

#include <algorithm>

namespace permlab {

std::string to_string(Point const& p) {
  return "<" + std::to_string(p.col) + ", " + std::to_string(p.row) + ">";
}

Point apply(Permutation const& p, Point pt) { return p.forward(pt); }

Point apply_inverse(Permutation const& p, Point pt) { return p.backward(pt); }

Permutation identity_perm() {
  auto id = [](Point pt) { return pt; };
  return {id, id, "id"};
}

Permutation inverse(Permutation const& p) {
  return {p.backward, p.forward, p.label + "^-1"};
}

Permutation compose(Permutation const& p, Permutation const& q) {
  auto pf = p.forward;
  auto qf = q.forward;
  auto pb = p.backward;
  auto qb = q.backward;
  return {[pf, qf](Point pt) { return qf(pf(pt)); },
          [pb, qb](Point pt) { return pb(qb(pt)); },
          p.label + " " + q.label};
}

Permutation sigma_paired() {
  return {[](Point pt) { return Point{pt.col + 2, pt.row}; },
          [](Point pt) { return Point{pt.col - 2, pt.row}; },
          "sigma_paired"};
}

Permutation tau_paired() {
  auto swap01 = [](Point pt) {
    if (pt.col == 0) return Point{1, pt.row};
    if (pt.col == 1) return Point{0, pt.row};
    return pt;
  };
  return {swap01, swap01, "tau_paired"};
}

int64_t column_value(ColumnFunction const& f, int64_t x, int64_t n) {
  int64_t v = f.f(x, n);
  if (v < 0 || v > x) throw BoundViolation(x, n, v);
  return v;
}

int64_t alpha_row_action(ColumnFunction const& f, int64_t x, int64_t row) {
  int64_t len = x + 1;
  int64_t n = row / len;
  int64_t k = row % len;
  int64_t v = column_value(f, x, n);
  if (k < v) return row + 1;
  if (k == v) return n * len;
  return row;
}

int64_t alpha_row_action_inverse(ColumnFunction const& f, int64_t x,
                                 int64_t row) {
  int64_t len = x + 1;
  int64_t n = row / len;
  int64_t k = row % len;
  int64_t v = column_value(f, x, n);
  if (k > v) return row;          // outside the cycle
  if (k == 0) return n * len + v;  // cycle start came from its end
  return row - 1;
}

Permutation alpha_from_f(ColumnFunction const& f) {
  ColumnFunction fn = f;
  return {[fn](Point pt) {
            if (pt.col < 0 || pt.col % 2 != 0) return pt;
            return Point{pt.col, alpha_row_action(fn, pt.col / 2, pt.row)};
          },
          [fn](Point pt) {
            if (pt.col < 0 || pt.col % 2 != 0) return pt;
            return Point{pt.col,
                         alpha_row_action_inverse(fn, pt.col / 2, pt.row)};
          },
          "alpha(" + f.name + ")"};
}

Permutation sigma_line() {
  return {[](Point pt) { return Point{pt.col + 1, pt.row}; },
          [](Point pt) { return Point{pt.col - 1, pt.row}; },
          "sigma_line"};
}

Permutation tau_triples() {
  auto swap12 = [](Point pt) {
    if (pt.col != 0) return pt;
    switch (pt.row % 3) {
      case 1: return Point{0, pt.row + 1};
      case 2: return Point{0, pt.row - 1};
      default: return pt;
    }
  };
  return {swap12, swap12, "tau_triples"};
}

Permutation beta_from_g(InjectiveCoder const& g) {
  InjectiveCoder coder = g;
  auto act = [coder](Point pt) {
    if (pt.col < 0) return pt;
    int64_t rem = pt.row % 3;
    if (rem == 2) return pt;  // third row of a triple is never touched
    int64_t t = pt.row / 3;
    if (!coder.graph_decider(t, pt.col)) return pt;
    return Point{pt.col, rem == 0 ? pt.row + 1 : pt.row - 1};
  };
  return {act, act, "beta(" + g.label + ")"};
}

Permutation cycle_adder(StepEnumerator const& e, int64_t step_horizon) {
  // Materialize the emission schedule up front: block k starts where block
  // k-1 ended, so both directions are plain table lookups.
  struct Block {
    int64_t start;
    int64_t length;
  };
  auto blocks = std::make_shared<std::vector<Block>>();
  int64_t next_row = 0;
  for (int64_t t = 0; t <= step_horizon; ++t) {
    auto v = e.at(t);
    if (!v) continue;
    if (*v <= 0) {
      throw std::invalid_argument("cycle_adder emissions must be positive");
    }
    blocks->push_back({next_row, *v});
    next_row += *v;
  }
  auto find_block = [blocks](int64_t row) -> Block const* {
    auto it = std::upper_bound(
        blocks->begin(), blocks->end(), row,
        [](int64_t r, Block const& b) { return r < b.start; });
    if (it == blocks->begin()) return nullptr;
    --it;
    return row < it->start + it->length ? &*it : nullptr;
  };
  return {[find_block](Point pt) {
            if (pt.col != 0) return pt;
            Block const* b = find_block(pt.row);
            if (b == nullptr) return pt;
            int64_t next = pt.row + 1;
            return Point{0, next < b->start + b->length ? next : b->start};
          },
          [find_block](Point pt) {
            if (pt.col != 0) return pt;
            Block const* b = find_block(pt.row);
            if (b == nullptr) return pt;
            return Point{0, pt.row > b->start ? pt.row - 1
                                              : b->start + b->length - 1};
          },
          "cycle_adder(" + e.label + ")"};
}

bool bounded_equal(Permutation const& p, Permutation const& q,
                   Region const& r) {
  return !first_difference(p, q, r).has_value();
}

bool is_identity_on(Permutation const& p, Region const& r) {
  return r.for_each([&](Point pt) { return p.forward(pt) == pt; });
}

std::optional<Point> first_difference(Permutation const& p,
                                      Permutation const& q, Region const& r) {
  std::optional<Point> witness;
  r.for_each([&](Point pt) {
    if (p.forward(pt) != q.forward(pt)) {
      witness = pt;
      return false;
    }
    return true;
  });
  return witness;
}

}  // namespace permlab
