#include <numeric>
#include <set>
#include <sstream>

#include "doctest.h"
#include "permlab/abelian.hpp"
#include "permlab/wordgen.hpp"

using namespace permlab;

namespace {

Presentation pres(std::string const& text) {
  std::istringstream in(text);
  return parse_presentation(in);
}

IntegerMatrix from_rows(std::vector<std::vector<int64_t>> const& rows) {
  IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<int64_t> diag_of(IntegerMatrix const& d) {
  std::vector<int64_t> out;
  for (size_t k = 0; k < std::min(d.rows, d.cols); ++k) {
    out.push_back(d.at(k, k).to_int64());
  }
  return out;
}

// Independent oracle for 2-generator lattices: membership of (a, b) in the
// row lattice by Cramer solve (full rank) or divisibility (rank <= 1).
struct Lattice2 {
  int64_t r1[2], r2[2];

  [[nodiscard]] bool contains(int64_t a, int64_t b) const {
    int64_t det = r1[0] * r2[1] - r1[1] * r2[0];
    if (det != 0) {
      int64_t pn = a * r2[1] - b * r2[0];
      int64_t qn = r1[0] * b - r1[1] * a;
      return pn % det == 0 && qn % det == 0;
    }
    // Rank <= 1: scan small integer combinations.
    for (int64_t p = -60; p <= 60; ++p) {
      for (int64_t q = -60; q <= 60; ++q) {
        if (p * r1[0] + q * r2[0] == a && p * r1[1] + q * r2[1] == b) {
          return true;
        }
      }
    }
    return false;
  }
};

}  // namespace

TEST_CASE("presentation parsing and validation") {
  Presentation p = pres("a b\na^2 b^-1\n");
  CHECK(p.generators == std::vector<std::string>{"a", "b"});
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relators[0] == parse_word("a a b^-1"));
  CHECK_THROWS(pres("a\nc\n"));
  CHECK_THROWS(pres(""));
  // Round trip through the text format.
  Presentation again = pres(format_presentation(p));
  CHECK(again.generators == p.generators);
  CHECK(again.relators == p.relators);
}

TEST_CASE("abelianize adds the commutator relators") {
  CHECK(abelianize(pres("x\n")).relators.empty());
  Presentation ab = abelianize(pres("a b\n"));
  REQUIRE(ab.relators.size() == 1);
  CHECK(ab.relators[0] == parse_word("a^-1 b^-1 a b"));
  CHECK(abelianize(pres("a b c d\n")).relators.size() == 6);
}

TEST_CASE("relation_matrix takes exponent sums and drops zero rows") {
  IntegerMatrix m1 = relation_matrix(pres("x\nx^2\n"));
  REQUIRE(m1.rows == 1);
  CHECK(m1.at(0, 0).to_int64() == 2);

  IntegerMatrix m2 = relation_matrix(pres("a b\na^2 b^-1\n"));
  CHECK(m2.at(0, 0).to_int64() == 2);
  CHECK(m2.at(0, 1).to_int64() == -1);

  IntegerMatrix m3 = relation_matrix(pres("a b\na^-1 b^-1 a b\n"));
  CHECK(m3.rows == 0);
}

TEST_CASE("smith normal form on the frozen cases") {
  // diag(2, 3) -> diag(1, 6): the quotient Z^2 / <2e1, 3e2> is cyclic of
  // order 6.  Independent check: enumerate the quotient by union-find over
  // a box, counting classes and the maximal element order.
  {
    Lattice2 lat{{2, 0}, {0, 3}};
    std::set<std::pair<int64_t, int64_t>> classes;
    int64_t max_order = 0;
    for (int64_t a = 0; a < 6; ++a) {
      for (int64_t b = 0; b < 6; ++b) {
        bool fresh = true;
        for (auto const& [ca, cb] : classes) {
          if (lat.contains(a - ca, b - cb)) fresh = false;
        }
        if (fresh) classes.insert({a, b});
        int64_t order = 1;
        while (!lat.contains(order * a, order * b)) ++order;
        max_order = std::max(max_order, order);
      }
    }
    CHECK(classes.size() == 6);
    CHECK(max_order == 6);  // cyclic: invariant factors must be [1, 6]

    auto snf = smith_normal_form(from_rows({{2, 0}, {0, 3}}), true);
    CHECK(diag_of(snf.d) == std::vector<int64_t>{1, 6});
  }
  // [[2, 4], [4, 8]] -> diag(2, 0): rank 1 lattice, torsion Z/2.
  {
    Lattice2 lat{{2, 4}, {4, 8}};
    // The torsion element (1, 2) has order 2; (0, 1) has infinite order
    // within the scan bound.
    CHECK_FALSE(lat.contains(1, 2));
    CHECK(lat.contains(2, 4));
    bool free_direction = true;
    for (int64_t k = 1; k <= 40; ++k) {
      if (lat.contains(0, k)) free_direction = false;
    }
    CHECK(free_direction);

    auto snf = smith_normal_form(from_rows({{2, 4}, {4, 8}}), true);
    CHECK(diag_of(snf.d) == std::vector<int64_t>{2, 0});
  }
  // Zero matrix stays zero.
  {
    auto snf = smith_normal_form(IntegerMatrix(3, 2), false);
    CHECK(diag_of(snf.d) == std::vector<int64_t>{0, 0});
  }
}

TEST_CASE("smith normal form properties on random matrices") {
  Rng rng(2024);
  for (int i = 0; i < 120; ++i) {
    IntegerMatrix m = random_matrix(rng, 5, 12);
    auto snf = smith_normal_form(m, true);
    REQUIRE(snf.u.has_value());
    REQUIRE(snf.v.has_value());
    // U m V = D exactly.
    CHECK(matrix_multiply(matrix_multiply(*snf.u, m), *snf.v) == snf.d);
    // Unimodular transforms.
    CHECK(determinant(*snf.u).abs() == BigInt(1));
    CHECK(determinant(*snf.v).abs() == BigInt(1));
    // Diagonal with a divisibility chain.
    for (size_t r = 0; r < snf.d.rows; ++r) {
      for (size_t c = 0; c < snf.d.cols; ++c) {
        if (r != c) CHECK(snf.d.at(r, c).is_zero());
      }
    }
    auto diag = diag_of(snf.d);
    for (size_t k = 0; k + 1 < diag.size(); ++k) {
      CHECK(diag[k] >= 0);
      if (diag[k] != 0) {
        CHECK(diag[k + 1] % diag[k] == 0);
      } else {
        CHECK(diag[k + 1] == 0);
      }
    }
    // Square nonsingular: diagonal product is |det|.
    if (m.rows == m.cols) {
      BigInt det = determinant(m);
      if (!det.is_zero()) {
        BigInt prod(1);
        for (int64_t d : diag) prod *= BigInt(d);
        CHECK(prod == det.abs());
      }
    }
    // Determinantal divisors are invariant: gcd of entries of D and of m
    // agree (the k = 1 case of the minor-gcd chain).
    BigInt g_m(0), g_d(0);
    for (auto const& e : m.data) g_m = BigInt::gcd(g_m, e);
    for (auto const& e : snf.d.data) g_d = BigInt::gcd(g_d, e);
    CHECK(g_m == g_d);
  }
}

TEST_CASE("abelian invariants") {
  auto inv1 = abelian_invariants(pres("x\nx^2\n"));
  CHECK(inv1.free_rank == 0);
  CHECK(inv1.invariant_factors == std::vector<int64_t>{2});

  auto inv2 = abelian_invariants(pres("a b\n"));
  CHECK(inv2.free_rank == 2);
  CHECK(inv2.invariant_factors.empty());

  auto inv3 = abelian_invariants(pres("a b\na^2 b^-1\n"));
  CHECK(inv3.free_rank == 1);
  CHECK(inv3.invariant_factors.empty());
}

TEST_CASE("abelian_iso") {
  Presentation p = pres("a b\na^2\nb^3\n");
  CHECK(abelian_iso(p, p));
  CHECK(abelian_iso(p, pres("c\nc^6\n")));
  CHECK_FALSE(abelian_iso(pres("a\n"), pres("a b\n")));
}

TEST_CASE("abelian invariants are presentation-invariant") {
  Presentation p = pres("a b c\na^2 b^-1\nb^4 c^2\n");
  Presentation permuted = pres("a b c\nb^4 c^2\na^2 b^-1\n");
  CHECK(abelian_invariants(p) == abelian_invariants(permuted));
  Presentation renamed = pres("q r s\nq^2 r^-1\nr^4 s^2\n");
  CHECK(abelian_invariants(p) == abelian_invariants(renamed));
}

TEST_CASE("strong_diagonal") {
  Presentation empty_case = strong_diagonal({});
  CHECK(empty_case.generators == std::vector<std::string>{"z"});
  CHECK(empty_case.relators.empty());
  CHECK(diagonal_check(empty_case, {}).ok());  // vacuously passes

  auto one = strong_diagonal({pres("a\n")});
  CHECK(abelian_invariants(one).free_rank == 2);

  auto two = strong_diagonal({pres("x\nx^2\n"), pres("a\n")});
  auto inv = abelian_invariants(two);
  CHECK(inv.free_rank == 2);
  CHECK(inv.invariant_factors == std::vector<int64_t>{2});
  CHECK_FALSE(abelian_iso(two, abelianize(pres("x\nx^2\n"))));
  CHECK_FALSE(abelian_iso(two, abelianize(pres("a\n"))));
}

TEST_CASE("diagonal_check passes on random presentation sets") {
  Rng rng(606);
  for (int i = 0; i < 40; ++i) {
    std::vector<Presentation> inputs;
    int64_t count = rng.uniform(0, 4);
    for (int64_t k = 0; k < count; ++k) {
      inputs.push_back(random_presentation(rng, 3, 3, 6));
    }
    Presentation delta = strong_diagonal(inputs);
    DiagonalReport report = diagonal_check(delta, inputs);
    CHECK(report.ok());
    // Rank identity: 1 + sum of input abelianization ranks.
    int64_t expected = 1;
    for (auto const& p : inputs) {
      expected += abelian_invariants(p).free_rank;
    }
    CHECK(report.output_invariants.free_rank == expected);
  }
}
