#include <set>

#include "doctest.h"
#include "permlab/perms.hpp"
#include "permlab/wordgen.hpp"

using namespace permlab;

namespace {

Point rand_point(Rng& rng) {
  return Point{rng.uniform(-50, 50), rng.uniform(0, 500)};
}

ColumnFunction f_sample() {
  return {[](int64_t x, int64_t n) -> int64_t {
            if (x == 2 && n == 1) return 1;
            return x % 3;
          },
          "sample"};
}

}  // namespace

TEST_CASE("apply and apply_inverse") {
  CHECK(apply(identity_perm(), Point{5, 3}) == Point{5, 3});
  CHECK(apply(sigma_paired(), Point{0, 5}) == Point{2, 5});
  CHECK(apply_inverse(sigma_paired(), Point{2, 5}) == Point{0, 5});
}

TEST_CASE("sigma_paired shifts column pairs") {
  CHECK(apply(sigma_paired(), Point{1, 0}) == Point{3, 0});
  CHECK(apply(sigma_paired(), Point{-2, 7}) == Point{0, 7});
  CHECK(apply_inverse(sigma_paired(), Point{0, 7}) == Point{-2, 7});
}

TEST_CASE("tau_paired exchanges the first column pair") {
  CHECK(apply(tau_paired(), Point{1, 7}) == Point{0, 7});
  CHECK(apply(tau_paired(), Point{0, 7}) == Point{1, 7});
  CHECK(apply(tau_paired(), Point{4, 2}) == Point{4, 2});
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    Point p = rand_point(rng);
    CHECK(apply(tau_paired(), apply(tau_paired(), p)) == p);
  }
}

TEST_CASE("alpha_from_f implements the cell cycles") {
  ColumnFunction f21{[](int64_t x, int64_t n) -> int64_t {
                       return x == 2 && n == 1 ? 1 : 0;
                     },
                     "f21"};
  Permutation alpha = alpha_from_f(f21);
  // Interval of cell (x=2, n=1) starts at row 3 in column 4.
  CHECK(apply(alpha, Point{4, 3}) == Point{4, 4});
  CHECK(apply(alpha, Point{4, 4}) == Point{4, 3});
  CHECK(apply(alpha, Point{4, 5}) == Point{4, 5});
  // Odd and negative columns are fixed.
  CHECK(apply(alpha, Point{5, 3}) == Point{5, 3});
  CHECK(apply(alpha, Point{-4, 3}) == Point{-4, 3});

  ColumnFunction zero{[](int64_t, int64_t) -> int64_t { return 0; }, "zero"};
  Permutation alpha0 = alpha_from_f(zero);
  Rng rng(4);
  for (int i = 0; i < 300; ++i) {
    Point p = rand_point(rng);
    CHECK(apply(alpha0, p) == p);
  }
}

TEST_CASE("alpha orbit size is the cell value plus one") {
  ColumnFunction f = f_sample();
  Permutation alpha = alpha_from_f(f);
  for (int64_t x = 0; x <= 6; ++x) {
    for (int64_t n = 0; n <= 6; ++n) {
      int64_t start = n * (x + 1);
      Point p{2 * x, start};
      std::set<int64_t> orbit;
      Point q = p;
      do {
        orbit.insert(q.row);
        q = apply(alpha, q);
      } while (q != p);
      int64_t v = f.f(x, n);
      CHECK(orbit.size() == static_cast<size_t>(v + 1));
      for (int64_t row : orbit) {
        CHECK(row >= start);
        CHECK(row < (n + 1) * (x + 1));
      }
    }
  }
}

TEST_CASE("alpha validates the column function bound lazily") {
  ColumnFunction bad{[](int64_t, int64_t) -> int64_t { return 5; }, "bad"};
  Permutation alpha = alpha_from_f(bad);
  CHECK(apply(alpha, Point{20, 0}) == Point{20, 1});  // 5 <= 10, fine
  CHECK_THROWS_AS(apply(alpha, Point{2, 0}), BoundViolation);
}

TEST_CASE("sigma_line shifts every column") {
  CHECK(apply(sigma_line(), Point{0, 9}) == Point{1, 9});
  CHECK(apply(sigma_line(), Point{-3, 0}) == Point{-2, 0});
  CHECK(apply_inverse(sigma_line(), Point{1, 9}) == Point{0, 9});
}

TEST_CASE("tau_triples swaps rows 3t+1 and 3t+2 of column 0") {
  CHECK(apply(tau_triples(), Point{0, 4}) == Point{0, 5});
  CHECK(apply(tau_triples(), Point{0, 3}) == Point{0, 3});
  CHECK(apply(tau_triples(), Point{2, 4}) == Point{2, 4});
}

TEST_CASE("beta_from_g codes the coder graph") {
  InjectiveCoder g = build_g(table_enumerator({{0, 4}}, "g"));
  REQUIRE(g.g(0) == 8);
  Permutation beta = beta_from_g(g);
  CHECK(apply(beta, Point{8, 0}) == Point{8, 1});
  CHECK(apply(beta, Point{8, 1}) == Point{8, 0});
  CHECK(apply(beta, Point{8, 2}) == Point{8, 2});
  CHECK(apply(beta, Point{3, 3}) == Point{3, 4});  // g(1) = 3
  CHECK(apply(beta, Point{6, 0}) == Point{6, 0});  // 6 not in range(g)
  CHECK(apply(beta, Point{-2, 0}) == Point{-2, 0});
}

TEST_CASE("compose follows left-then-right and inverts cleanly") {
  Permutation p = sigma_paired();
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    Point pt = rand_point(rng);
    CHECK(apply(compose(p, identity_perm()), pt) == apply(p, pt));
    CHECK(apply(compose(p, inverse(p)), pt) == pt);
    CHECK(apply(compose(sigma_paired(), sigma_paired()), Point{0, pt.row}) ==
          Point{4, pt.row});
  }
  // Associativity on sampled points.
  Permutation a = sigma_line(), b = tau_triples(), c = inverse(sigma_line());
  for (int i = 0; i < 200; ++i) {
    Point pt = rand_point(rng);
    CHECK(apply(compose(compose(a, b), c), pt) ==
          apply(compose(a, compose(b, c)), pt));
  }
}

TEST_CASE("named constructors satisfy inverse round trips") {
  InjectiveCoder g = build_g(table_enumerator({{0, 4}, {2, 9}}, "g"));
  std::vector<Permutation> named = {
      sigma_paired(), tau_paired(),  alpha_from_f(f_sample()),
      sigma_line(),   tau_triples(), beta_from_g(g)};
  Rng rng(6);
  for (auto const& p : named) {
    for (int i = 0; i < 10000; ++i) {
      Point pt = rand_point(rng);
      CHECK(apply_inverse(p, apply(p, pt)) == pt);
      CHECK(apply(p, apply_inverse(p, pt)) == pt);
    }
  }
  // Row/column preservation: sigmas keep rows, the others keep columns.
  for (int i = 0; i < 2000; ++i) {
    Point pt = rand_point(rng);
    CHECK(apply(sigma_paired(), pt).row == pt.row);
    CHECK(apply(sigma_line(), pt).row == pt.row);
    CHECK(apply(tau_paired(), pt).row == pt.row);
    CHECK(apply(tau_triples(), pt).col == pt.col);
    CHECK(apply(alpha_from_f(f_sample()), pt).col == pt.col);
    CHECK(apply(beta_from_g(g), pt).col == pt.col);
  }
  // Involutions square to the identity pointwise.
  for (auto const& p : {tau_paired(), tau_triples(), beta_from_g(g)}) {
    for (int i = 0; i < 2000; ++i) {
      Point pt = rand_point(rng);
      CHECK(apply(p, apply(p, pt)) == pt);
    }
  }
}

TEST_CASE("bounded_equal and is_identity_on") {
  Region r(-3, 3, 20);
  CHECK(bounded_equal(sigma_line(), sigma_line(), r));
  CHECK(is_identity_on(compose(tau_paired(), tau_paired()), r));
  CHECK_FALSE(bounded_equal(sigma_line(), identity_perm(), Region(0, 0, 0)));
  CHECK_THROWS(Region(3, 1, 5));
}

TEST_CASE("cycle_adder allocates blocks in emission order") {
  CHECK(is_identity_on(cycle_adder(empty_enumerator(), 100),
                       Region(-2, 2, 50)));
  // A 1-cycle is trivial.
  CHECK(is_identity_on(cycle_adder(table_enumerator({{0, 1}}, "c1"), 10),
                       Region(-2, 2, 50)));

  Permutation p3 = cycle_adder(table_enumerator({{0, 3}}, "c3"), 10);
  std::set<int64_t> orbit;
  Point q{0, 0};
  do {
    orbit.insert(q.row);
    q = apply(p3, q);
  } while (q != Point{0, 0});
  CHECK(orbit == std::set<int64_t>{0, 1, 2});
  CHECK(is_identity_on(compose(p3, compose(p3, p3)), Region(-1, 1, 30)));
  CHECK_FALSE(is_identity_on(compose(p3, p3), Region(0, 0, 2)));
  CHECK(apply(p3, Point{1, 0}) == Point{1, 0});  // only column 0 moves

  // Two emissions: blocks {0,1} and {2,3,4}.
  Permutation p = cycle_adder(table_enumerator({{1, 2}, {4, 3}}, "cc"), 10);
  CHECK(apply(p, Point{0, 0}) == Point{0, 1});
  CHECK(apply(p, Point{0, 1}) == Point{0, 0});
  CHECK(apply(p, Point{0, 2}) == Point{0, 3});
  CHECK(apply(p, Point{0, 4}) == Point{0, 2});
  CHECK(apply(p, Point{0, 5}) == Point{0, 5});
  Rng rng(8);
  for (int i = 0; i < 2000; ++i) {
    Point pt = rand_point(rng);
    CHECK(apply_inverse(p, apply(p, pt)) == pt);
  }
}
