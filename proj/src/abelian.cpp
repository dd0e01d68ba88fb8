#include "permlab/abelian.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

namespace permlab {

void validate_presentation(Presentation const& p) {
  std::set<std::string> gens(p.generators.begin(), p.generators.end());
  if (gens.size() != p.generators.size()) {
    throw std::invalid_argument("duplicate generator names");
  }
  for (Word const& r : p.relators) {
    for (Letter const& l : r.letters) {
      if (l.index || !gens.count(l.base)) {
        throw std::invalid_argument("relator uses unknown generator: " +
                                    format_letter_name(l));
      }
    }
  }
}

Presentation parse_presentation(std::istream& in) {
  Presentation p;
  std::string line;
  bool have_generators = false;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (!have_generators) {
      std::string name;
      while (ls >> name) p.generators.push_back(name);
      if (!p.generators.empty()) have_generators = true;
      continue;
    }
    // Skip blank relator lines.
    std::string probe;
    if (!(ls >> probe)) continue;
    p.relators.push_back(parse_word(line));
  }
  if (!have_generators) {
    throw std::runtime_error("presentation file has no generator line");
  }
  validate_presentation(p);
  return p;
}

std::string format_presentation(Presentation const& p) {
  std::ostringstream out;
  for (size_t i = 0; i < p.generators.size(); ++i) {
    if (i) out << ' ';
    out << p.generators[i];
  }
  out << '\n';
  for (Word const& r : p.relators) out << format_word(r) << '\n';
  return out.str();
}

IntegerMatrix IntegerMatrix::identity(size_t n) {
  IntegerMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = BigInt(1);
  return m;
}

IntegerMatrix matrix_multiply(IntegerMatrix const& a, IntegerMatrix const& b) {
  if (a.cols != b.rows) throw std::invalid_argument("dimension mismatch");
  IntegerMatrix out(a.rows, b.cols);
  for (size_t i = 0; i < a.rows; ++i) {
    for (size_t k = 0; k < a.cols; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (size_t j = 0; j < b.cols; ++j) {
        out.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  }
  return out;
}

BigInt determinant(IntegerMatrix const& m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant needs square");
  size_t n = m.rows;
  if (n == 0) return BigInt(1);
  IntegerMatrix a = m;
  BigInt prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k).is_zero()) {
      size_t swap_row = k + 1;
      while (swap_row < n && a.at(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return BigInt(0);
      for (size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap_row, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        a.at(i, j) =
            (a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j)) / prev;
      }
      a.at(i, k) = BigInt(0);
    }
    prev = a.at(k, k);
  }
  return sign < 0 ? -a.at(n - 1, n - 1) : a.at(n - 1, n - 1);
}

Presentation abelianize(Presentation const& p) {
  validate_presentation(p);
  Presentation out = p;
  for (size_t i = 0; i < p.generators.size(); ++i) {
    for (size_t j = i + 1; j < p.generators.size(); ++j) {
      Word gi({Letter(p.generators[i], std::nullopt, 1)});
      Word gj({Letter(p.generators[j], std::nullopt, 1)});
      out.relators.push_back(commutator(gi, gj));
    }
  }
  return out;
}

IntegerMatrix relation_matrix(Presentation const& p) {
  validate_presentation(p);
  std::vector<std::vector<BigInt>> rows;
  for (Word const& r : p.relators) {
    std::vector<BigInt> row;
    bool nonzero = false;
    for (std::string const& g : p.generators) {
      int64_t e = exponent_sum(r, g);
      row.emplace_back(e);
      nonzero = nonzero || e != 0;
    }
    if (nonzero) rows.push_back(std::move(row));
  }
  IntegerMatrix m(rows.size(), p.generators.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < p.generators.size(); ++j) {
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

namespace {

struct SnfWorker {
  IntegerMatrix a;
  IntegerMatrix u, v;
  bool track = false;

  void swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t c = 0; c < a.cols; ++c) std::swap(a.at(i, c), a.at(j, c));
    if (track) {
      for (size_t c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
    }
  }
  void swap_cols(size_t i, size_t j) {
    if (i == j) return;
    for (size_t r = 0; r < a.rows; ++r) std::swap(a.at(r, i), a.at(r, j));
    if (track) {
      for (size_t r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
    }
  }
  // row i -= q * row k
  void row_sub(size_t i, size_t k, BigInt const& q) {
    if (q.is_zero()) return;
    for (size_t c = 0; c < a.cols; ++c) a.at(i, c) -= q * a.at(k, c);
    if (track) {
      for (size_t c = 0; c < u.cols; ++c) u.at(i, c) -= q * u.at(k, c);
    }
  }
  // col j -= q * col k
  void col_sub(size_t j, size_t k, BigInt const& q) {
    if (q.is_zero()) return;
    for (size_t r = 0; r < a.rows; ++r) a.at(r, j) -= q * a.at(r, k);
    if (track) {
      for (size_t r = 0; r < v.rows; ++r) v.at(r, j) -= q * v.at(r, k);
    }
  }
  void negate_row(size_t i) {
    for (size_t c = 0; c < a.cols; ++c) a.at(i, c) = -a.at(i, c);
    if (track) {
      for (size_t c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
    }
  }

  // Least-absolute-value nonzero entry of the trailing submatrix.
  std::optional<std::pair<size_t, size_t>> find_pivot(size_t k) const {
    std::optional<std::pair<size_t, size_t>> best;
    BigInt best_abs;
    for (size_t i = k; i < a.rows; ++i) {
      for (size_t j = k; j < a.cols; ++j) {
        if (a.at(i, j).is_zero()) continue;
        BigInt mag = a.at(i, j).abs();
        if (!best || mag < best_abs) {
          best = {{i, j}};
          best_abs = mag;
        }
      }
    }
    return best;
  }
};

// Quotient rounded to nearest, so remainders shrink below |b| / 2.
BigInt rounded_quotient(BigInt const& a, BigInt const& b) {
  BigInt q = a / b;
  BigInt r = a - q * b;
  BigInt twice = r.abs() + r.abs();
  if (twice > b.abs()) {
    bool same_sign = r.is_negative() == b.is_negative();
    q = same_sign ? q + BigInt(1) : q - BigInt(1);
  }
  return q;
}

}  // namespace

SmithResult smith_normal_form(IntegerMatrix const& m, bool want_transforms) {
  SnfWorker w;
  w.a = m;
  w.track = want_transforms;
  if (want_transforms) {
    w.u = IntegerMatrix::identity(m.rows);
    w.v = IntegerMatrix::identity(m.cols);
  }
  size_t limit = std::min(m.rows, m.cols);
  for (size_t k = 0; k < limit; ++k) {
    auto pivot = w.find_pivot(k);
    if (!pivot) break;  // trailing submatrix is zero
    w.swap_rows(k, pivot->first);
    w.swap_cols(k, pivot->second);
    for (;;) {
      // Clear column k below the pivot, then row k right of it.  New
      // nonzero remainders become smaller pivots, so this terminates.
      bool dirty = false;
      for (size_t i = k + 1; i < w.a.rows; ++i) {
        if (w.a.at(i, k).is_zero()) continue;
        BigInt q = rounded_quotient(w.a.at(i, k), w.a.at(k, k));
        w.row_sub(i, k, q);
        if (!w.a.at(i, k).is_zero()) {
          w.swap_rows(k, i);
          dirty = true;
        }
      }
      for (size_t j = k + 1; j < w.a.cols; ++j) {
        if (w.a.at(k, j).is_zero()) continue;
        BigInt q = rounded_quotient(w.a.at(k, j), w.a.at(k, k));
        w.col_sub(j, k, q);
        if (!w.a.at(k, j).is_zero()) {
          w.swap_cols(k, j);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Divisibility fix: fold any non-divisible entry into row k.
      bool fixed = true;
      for (size_t i = k + 1; i < w.a.rows && fixed; ++i) {
        for (size_t j = k + 1; j < w.a.cols && fixed; ++j) {
          if (!(w.a.at(i, j) % w.a.at(k, k)).is_zero()) {
            w.row_sub(k, i, BigInt(-1));  // add row i to row k
            fixed = false;
          }
        }
      }
      if (fixed) break;
    }
    if (w.a.at(k, k).is_negative()) w.negate_row(k);
  }
  SmithResult out;
  out.d = std::move(w.a);
  if (want_transforms) {
    out.u = std::move(w.u);
    out.v = std::move(w.v);
  }
  return out;
}

AbelianInvariants abelian_invariants(Presentation const& p) {
  IntegerMatrix m = relation_matrix(p);
  SmithResult snf = smith_normal_form(m, /*want_transforms=*/false);
  AbelianInvariants inv;
  size_t nonzero = 0;
  for (size_t k = 0; k < std::min(snf.d.rows, snf.d.cols); ++k) {
    BigInt const& d = snf.d.at(k, k);
    if (d.is_zero()) continue;
    ++nonzero;
    if (d > BigInt(1)) inv.invariant_factors.push_back(d.to_int64());
  }
  inv.free_rank =
      static_cast<int64_t>(p.generators.size()) - static_cast<int64_t>(nonzero);
  return inv;
}

bool abelian_iso(Presentation const& p1, Presentation const& p2) {
  return abelian_invariants(p1) == abelian_invariants(p2);
}

Presentation strong_diagonal(std::vector<Presentation> const& inputs) {
  Presentation out;
  out.generators.push_back("z");
  for (size_t u = 0; u < inputs.size(); ++u) {
    Presentation ab = abelianize(inputs[u]);
    std::string prefix = "g" + std::to_string(u + 1) + "_";
    for (std::string const& g : ab.generators) {
      out.generators.push_back(prefix + g);
    }
    for (Word const& r : ab.relators) {
      Word renamed;
      for (Letter const& l : r.letters) {
        renamed.letters.emplace_back(prefix + l.base, l.index, l.sign);
      }
      out.relators.push_back(renamed);
    }
  }
  // Cross-commutators: every pair of generators not from the same input
  // (the per-input pairs are already in the abelianized relators).
  std::vector<size_t> owner;  // 0 for z, 1-based input index otherwise
  owner.push_back(0);
  for (size_t u = 0; u < inputs.size(); ++u) {
    for (size_t i = 0; i < inputs[u].generators.size(); ++i) {
      owner.push_back(u + 1);
    }
  }
  for (size_t i = 0; i < out.generators.size(); ++i) {
    for (size_t j = i + 1; j < out.generators.size(); ++j) {
      if (owner[i] == owner[j] && owner[i] != 0) continue;
      Word gi({Letter(out.generators[i], std::nullopt, 1)});
      Word gj({Letter(out.generators[j], std::nullopt, 1)});
      out.relators.push_back(commutator(gi, gj));
    }
  }
  return out;
}

DiagonalReport diagonal_check(Presentation const& output,
                              std::vector<Presentation> const& inputs) {
  DiagonalReport report;
  report.output_invariants = abelian_invariants(output);
  for (size_t u = 0; u < inputs.size(); ++u) {
    DiagonalWitness w;
    w.input = u + 1;
    w.input_rank = abelian_invariants(inputs[u]).free_rank;
    w.output_rank = report.output_invariants.free_rank;
    w.iso = abelian_iso(output, abelianize(inputs[u]));
    report.witnesses.push_back(w);
  }
  return report;
}

}  // namespace permlab
