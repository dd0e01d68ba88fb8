#include "permlab/pi01.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace permlab {

namespace {

Word power_word(std::string const& name, int64_t e) {
  Word w;
  int sign = e < 0 ? -1 : 1;
  for (int64_t i = 0; i < (e < 0 ? -e : e); ++i) {
    w.letters.emplace_back(name, std::nullopt, sign);
  }
  return w;
}

Word single(std::string const& name, int sign = 1) {
  return Word({Letter(name, std::nullopt, sign)});
}

}  // namespace

CodedGroup coded_group(ColumnFunction const& f) {
  return {sigma_paired(), tau_paired(), alpha_from_f(f), f};
}

std::map<GenKey, Permutation> coded_assignment(CodedGroup const& g) {
  return {{{kAlphaName, std::nullopt}, g.alpha},
          {{kSigmaName, std::nullopt}, g.sigma},
          {{kTauName, std::nullopt}, g.tau}};
}

ColumnFunction builtin_column_function(std::string const& name) {
  if (name == "identity") {
    return {[](int64_t x, int64_t) { return x; }, name};
  }
  if (name == "trivial") {
    return {[](int64_t, int64_t) { return int64_t{0}; }, name};
  }
  if (name.rfind("mod", 0) == 0) {
    int64_t k = 0;
    try {
      size_t used = 0;
      k = std::stoll(name.substr(3), &used);
      if (used != name.size() - 3) k = 0;
    } catch (std::exception const&) {
      k = 0;
    }
    if (k >= 1) {
      return {[k](int64_t x, int64_t) { return x % k; }, name};
    }
  }
  throw std::invalid_argument("unknown builtin column function: " + name);
}

ColumnFunction parse_column_table(std::istream& in, std::string name) {
  auto table = std::make_shared<std::map<std::pair<int64_t, int64_t>, int64_t>>();
  std::function<int64_t(int64_t, int64_t)> fallback;
  std::string line;
  int64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "default") {
      std::string expr;
      std::getline(ls, expr);
      // Trim.
      auto b = expr.find_first_not_of(" \t");
      auto e = expr.find_last_not_of(" \t");
      expr = b == std::string::npos ? "" : expr.substr(b, e - b + 1);
      if (expr == "x") {
        fallback = [](int64_t x, int64_t) { return x; };
      } else if (expr == "0") {
        fallback = [](int64_t, int64_t) { return int64_t{0}; };
      } else if (expr.rfind("x mod ", 0) == 0) {
        int64_t k = std::stoll(expr.substr(6));
        if (k < 1) {
          throw std::runtime_error("table line " + std::to_string(lineno) +
                                   ": modulus must be positive");
        }
        fallback = [k](int64_t x, int64_t) { return x % k; };
      } else {
        throw std::runtime_error("table line " + std::to_string(lineno) +
                                 ": default must be \"x\", \"0\" or "
                                 "\"x mod k\"");
      }
      continue;
    }
    int64_t x = 0, n = 0, value = 0;
    try {
      x = std::stoll(first);
    } catch (std::exception const&) {
      throw std::runtime_error("table line " + std::to_string(lineno) +
                               ": expected \"x n value\" or \"default ...\"");
    }
    if (!(ls >> n >> value)) {
      throw std::runtime_error("table line " + std::to_string(lineno) +
                               ": expected \"x n value\"");
    }
    if (x < 0 || n < 0 || value < 0 || value > x) {
      throw std::runtime_error("table line " + std::to_string(lineno) +
                               ": value must satisfy 0 <= value <= x");
    }
    (*table)[{x, n}] = value;
  }
  if (!fallback) {
    throw std::runtime_error("column table needs a \"default\" rule");
  }
  return {[table, fallback](int64_t x, int64_t n) -> int64_t {
            auto it = table->find({x, n});
            return it != table->end() ? it->second : fallback(x, n);
          },
          std::move(name)};
}

bool relation_holds_bounded(ColumnFunction const& f, int64_t x, int64_t y,
                            int64_t bound) {
  return !first_f_disagreement(f, x, y, bound).has_value();
}

std::optional<int64_t> first_f_disagreement(ColumnFunction const& f,
                                            int64_t x, int64_t y,
                                            int64_t bound) {
  for (int64_t n = 0; n <= bound; ++n) {
    if (column_value(f, x, n) != column_value(f, y, n)) return n;
  }
  return std::nullopt;
}

Word term_t(int64_t x) {
  if (x < 0) throw std::invalid_argument("term_t needs x >= 0");
  Word s_pow = power_word(kSigmaName, -x);
  Word lhs = conjugate(single(kAlphaName), s_pow);
  Word rhs = conjugate(single(kAlphaName, -1), s_pow);
  return multiply(multiply(lhs, single(kTauName)), rhs);
}

Point predicted_t_action(ColumnFunction const& f, int64_t x, Point pt) {
  if (pt.col == 0) return Point{1, alpha_row_action(f, x, pt.row)};
  if (pt.col == 1) return Point{0, alpha_row_action_inverse(f, x, pt.row)};
  return pt;
}

CodeEquationReport verify_code_equation(ColumnFunction const& f, int64_t x,
                                        int64_t y, int64_t bound) {
  CodeEquationReport report;
  report.x = x;
  report.y = y;
  report.bound = bound;
  report.region_rmax = (bound + 1) * (std::max(x, y) + 1);

  report.f_witness_n = first_f_disagreement(f, x, y, bound);
  report.f_agrees_bounded = !report.f_witness_n.has_value();

  CodedGroup g = coded_group(f);
  auto assign = coded_assignment(g);
  PermutationGroup target;
  Permutation tx = evaluate_hom(term_t(x), target, assign);
  Permutation ty = evaluate_hom(term_t(y), target, assign);

  Region region(0, 1, report.region_rmax);
  report.perm_witness = first_difference(tx, ty, region);
  report.perms_agree_on_region = !report.perm_witness.has_value();
  if (report.perm_witness) {
    report.perm_witness_images[0] = tx.forward(*report.perm_witness);
    report.perm_witness_images[1] = ty.forward(*report.perm_witness);
  }
  return report;
}

ReductionReport reduction_check(
    ColumnFunction const& f, std::map<int64_t, Word> const& candidate,
    std::vector<std::pair<int64_t, int64_t>> const& sample, int64_t bound) {
  ReductionReport report;
  report.bound = bound;
  CodedGroup g = coded_group(f);
  auto assign = coded_assignment(g);
  PermutationGroup target;

  int64_t max_arg = 0;
  for (auto const& [x, y] : sample) max_arg = std::max({max_arg, x, y});
  Region region(0, 1, (bound + 1) * (max_arg + 1));

  for (auto const& [x, y] : sample) {
    auto wx = candidate.find(x);
    auto wy = candidate.find(y);
    if (wx == candidate.end() || wy == candidate.end()) {
      throw std::invalid_argument("candidate undefined on a sampled point");
    }
    Permutation px = evaluate_hom(wx->second, target, assign);
    Permutation py = evaluate_hom(wy->second, target, assign);
    bool relation = relation_holds_bounded(f, x, y, bound);
    bool images = bounded_equal(px, py, region);
    ++report.pairs_checked;
    if (relation != images) {
      report.violations.push_back({x, y, relation, images});
    }
  }
  return report;
}

}  // namespace permlab
