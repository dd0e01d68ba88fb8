#include "permlab/ttwp.hpp"

#include <algorithm>

#include "permlab/perms.hpp"

namespace permlab {

namespace {

bool is_sigma(Letter const& l) { return l.base == kLineSigmaName; }
bool is_beta(Letter const& l) { return l.base == kBetaName; }
bool is_tau(Letter const& l) { return l.base == kLineTauName; }

void validate_alphabet(Word const& w) {
  for (Letter const& l : w.letters) {
    if (l.index || (!is_sigma(l) && !is_beta(l) && !is_tau(l))) {
      throw std::invalid_argument("decider words use the alphabet {b, s, t}; got " +
                                  format_letter_name(l));
    }
  }
}

// Keep one occurrence per index of odd multiplicity, in first-appearance
// order.
std::vector<int64_t> collapse_run(std::vector<int64_t> const& indices) {
  std::map<int64_t, int> count;
  std::vector<int64_t> order;
  for (int64_t v : indices) {
    if (count[v]++ == 0) order.push_back(v);
  }
  std::vector<int64_t> kept;
  for (int64_t v : order) {
    if (count[v] % 2 == 1) kept.push_back(v);
  }
  return kept;
}

using S3 = std::array<int, 3>;
constexpr S3 kS3Identity = {0, 1, 2};
constexpr S3 kSwap01 = {1, 0, 2};
constexpr S3 kSwap12 = {0, 2, 1};

// Apply p, then q.
S3 then_apply(S3 const& p, S3 const& q) {
  return {q[p[0]], q[p[1]], q[p[2]]};
}

S3 projection_image(std::vector<ProjLetter> const& proj) {
  S3 image = kS3Identity;
  for (ProjLetter l : proj) {
    image = then_apply(image, l == ProjLetter::kBeta ? kSwap01 : kSwap12);
  }
  return image;
}

std::map<int64_t, bool> fetch_answers(Oracle const& oracle,
                                      std::vector<int64_t> const& queries) {
  std::map<int64_t, bool> answers;
  std::vector<int64_t> missing;
  for (int64_t m : queries) {
    auto a = oracle.answer(m);
    if (!a) {
      missing.push_back(m);
    } else {
      answers[m] = *a;
    }
  }
  if (!missing.empty()) throw MissingOracleAnswers(std::move(missing));
  return answers;
}

}  // namespace

MissingOracleAnswers::MissingOracleAnswers(std::vector<int64_t> missing)
    : std::runtime_error([&missing] {
        std::string msg = "oracle is missing answers for:";
        for (int64_t m : missing) msg += " " + std::to_string(m);
        return msg;
      }()),
      missing_(std::move(missing)) {}

std::set<int64_t> NormalForm::beta_index_set() const {
  std::set<int64_t> out;
  for (Block const& b : blocks) {
    if (b.is_beta) out.insert(b.indices.begin(), b.indices.end());
  }
  return out;
}

std::set<int64_t> NormalForm::tau_index_set() const {
  std::set<int64_t> out;
  for (Block const& b : blocks) {
    if (!b.is_beta) out.insert(b.indices.begin(), b.indices.end());
  }
  return out;
}

int64_t NormalForm::count(bool is_beta_kind, int64_t index) const {
  int64_t n = 0;
  for (Block const& b : blocks) {
    if (b.is_beta != is_beta_kind) continue;
    n += std::count(b.indices.begin(), b.indices.end(), index);
  }
  return n;
}

SigmaCheck sigma_exponent_check(Word const& w) {
  validate_alphabet(w);
  return exponent_sum(w, kLineSigmaName) == 0 ? SigmaCheck::kZero
                                              : SigmaCheck::kNonzero;
}

NormalForm to_normal_form(Word const& w) {
  if (sigma_exponent_check(w) != SigmaCheck::kZero) {
    throw std::invalid_argument(
        "to_normal_form requires sigma-exponent zero");
  }
  // Shift every involution letter to its running offset.
  std::vector<std::pair<bool, int64_t>> emitted;  // (is_beta, index)
  int64_t offset = 0;
  for (Letter const& l : w.letters) {
    if (is_sigma(l)) {
      offset += l.sign;
    } else {
      emitted.emplace_back(is_beta(l), offset);
    }
  }
  // Group into maximal same-kind runs.
  std::vector<NormalForm::Block> runs;
  for (auto const& [beta, idx] : emitted) {
    if (runs.empty() || runs.back().is_beta != beta) {
      runs.push_back({beta, {}});
    }
    runs.back().indices.push_back(idx);
  }
  // Cancel within runs, drop empties, merge newly adjacent runs; repeat
  // until stable.
  for (;;) {
    bool changed = false;
    for (auto& run : runs) {
      auto kept = collapse_run(run.indices);
      if (kept.size() != run.indices.size()) {
        run.indices = std::move(kept);
        changed = true;
      }
    }
    std::vector<NormalForm::Block> merged;
    for (auto& run : runs) {
      if (run.indices.empty()) {
        changed = true;
        continue;
      }
      if (!merged.empty() && merged.back().is_beta == run.is_beta) {
        merged.back().indices.insert(merged.back().indices.end(),
                                     run.indices.begin(), run.indices.end());
        changed = true;
      } else {
        merged.push_back(std::move(run));
      }
    }
    runs = std::move(merged);
    if (!changed) break;
  }
  NormalForm nf;
  nf.blocks = std::move(runs);
  return nf;
}

std::vector<ProjLetter> subword_projection(NormalForm const& nf, int64_t x,
                                           int64_t u) {
  if (!nf.beta_index_set().count(x) || !nf.tau_index_set().count(u)) {
    throw std::invalid_argument("projection indices must lie in L and M");
  }
  std::vector<ProjLetter> proj;
  for (NormalForm::Block const& b : nf.blocks) {
    int64_t wanted = b.is_beta ? x : u;
    ProjLetter letter = b.is_beta ? ProjLetter::kBeta : ProjLetter::kTau;
    for (int64_t idx : b.indices) {
      if (idx != wanted) continue;
      if (!proj.empty() && proj.back() == letter) {
        proj.pop_back();  // beta_x beta_x and tau_u tau_u cancel
      } else {
        proj.push_back(letter);
      }
    }
  }
  return proj;
}

std::vector<int64_t> query_set(NormalForm const& nf) {
  std::set<int64_t> out;
  for (int64_t x : nf.beta_index_set()) {
    for (int64_t u : nf.tau_index_set()) {
      out.insert(x - u);
    }
  }
  return {out.begin(), out.end()};
}

std::string to_string(Rule rule) {
  switch (rule) {
    case Rule::kIdentity: return "identity";
    case Rule::kSigmaExponent: return "sigma-exponent";
    case Rule::kOddBeta: return "odd-beta-count";
    case Rule::kOddTau: return "odd-tau-count";
    case Rule::kCellAction: return "cell-action";
    case Rule::kLiteralOddBeta: return "literal-odd-beta-count";
    case Rule::kLiteralCase1: return "literal-case1-parity";
    case Rule::kLiteralCase2Count: return "literal-case2-count";
    case Rule::kLiteralCase2Remainder: return "literal-case2-remainder";
  }
  return "?";
}

Verdict decide(NormalForm const& nf, Oracle const& oracle) {
  Verdict v;
  v.queries = query_set(nf);
  auto answers = fetch_answers(oracle, v.queries);

  auto L = nf.beta_index_set();
  auto M = nf.tau_index_set();

  // R1: odd beta counts move some column the tau letters never touch; the
  // coded complement is infinite, so a witness column always exists.
  for (int64_t x : L) {
    if (nf.count(true, x) % 2 != 0) {
      v.equal_identity = false;
      v.rule = Rule::kOddBeta;
      v.witness_x = x;
      return v;
    }
  }
  // R2: odd tau counts swap the generic triples of their column.
  for (int64_t u : M) {
    if (nf.count(false, u) % 2 != 0) {
      v.equal_identity = false;
      v.rule = Rule::kOddTau;
      v.witness_u = u;
      return v;
    }
  }
  // R3: each confirmed cell carries the S3 action of the projection.
  for (int64_t u : M) {
    for (int64_t x : L) {
      if (!answers.at(x - u)) continue;
      S3 image = projection_image(subword_projection(nf, x, u));
      if (image != kS3Identity) {
        v.equal_identity = false;
        v.rule = Rule::kCellAction;
        v.witness_x = x;
        v.witness_u = u;
        v.cell_image = image;
        return v;
      }
    }
  }
  v.equal_identity = true;
  v.rule = Rule::kIdentity;
  return v;
}

Verdict decide_word(Word const& w, Oracle const& oracle) {
  if (sigma_exponent_check(w) == SigmaCheck::kNonzero) {
    Verdict v;
    v.equal_identity = false;
    v.rule = Rule::kSigmaExponent;
    return v;
  }
  return decide(to_normal_form(w), oracle);
}

Verdict decide_pair(Word const& u, Word const& v, Oracle const& oracle) {
  return decide_word(multiply(u, invert(v)), oracle);
}

Word m_reduction_word(int64_t x) {
  Word s_pow;
  int sign = x < 0 ? 1 : -1;
  for (int64_t i = 0; i < (x < 0 ? -x : x); ++i) {
    s_pow.letters.emplace_back(kLineSigmaName, std::nullopt, sign);
  }
  Word beta({Letter(kBetaName, std::nullopt, 1)});
  Word tau({Letter(kLineTauName, std::nullopt, 1)});
  return commutator(conjugate(beta, s_pow), tau);
}

Verdict literal_case_decider(NormalForm const& nf, Oracle const& oracle) {
  Verdict v;
  v.queries = query_set(nf);
  auto answers = fetch_answers(oracle, v.queries);

  auto L = nf.beta_index_set();
  auto M = nf.tau_index_set();

  // The printed even-occurrence rule for the untouched columns carries a
  // side condition: it outputs "not 1" only when x - u' lies in the coded
  // complement for some u' outside M.  That difference is never in the
  // canonical query set, so the rule can only consult answers the oracle
  // happens to hold; under a query-set-exact oracle it stays dormant.
  // (The derived decider's R1 closes this gap by the infinitude of the
  // coded complement instead.)
  for (int64_t x : L) {
    if (nf.count(true, x) % 2 == 0) continue;
    for (auto const& [m, in_complement] : oracle.answers) {
      if (in_complement && !M.count(x - m)) {
        v.equal_identity = false;
        v.rule = Rule::kLiteralOddBeta;
        v.witness_x = x;
        v.witness_u = x - m;
        return v;
      }
    }
  }
  for (int64_t u : M) {
    for (int64_t x : L) {
      auto proj = subword_projection(nf, x, u);
      if (!answers.at(x - u)) {
        // Case 1: beta_x is invisible on this column; only the tau parity
        // remains.
        int64_t taus = std::count(proj.begin(), proj.end(), ProjLetter::kTau);
        if (taus % 2 != 0) {
          v.equal_identity = false;
          v.rule = Rule::kLiteralCase1;
          v.witness_x = x;
          v.witness_u = u;
          return v;
        }
      } else {
        // Case 2: count beta tau pairs modulo 3, then cancel them.
        int64_t pairs = 0;
        for (size_t i = 0; i + 1 < proj.size(); ++i) {
          if (proj[i] == ProjLetter::kBeta && proj[i + 1] == ProjLetter::kTau) {
            ++pairs;
          }
        }
        if (pairs % 3 != 0) {
          v.equal_identity = false;
          v.rule = Rule::kLiteralCase2Count;
          v.witness_x = x;
          v.witness_u = u;
          return v;
        }
        std::vector<ProjLetter> rest;
        for (size_t i = 0; i < proj.size();) {
          if (i + 1 < proj.size() && proj[i] == ProjLetter::kBeta &&
              proj[i + 1] == ProjLetter::kTau) {
            i += 2;
          } else {
            rest.push_back(proj[i]);
            ++i;
          }
        }
        if (!rest.empty()) {
          v.equal_identity = false;
          v.rule = Rule::kLiteralCase2Remainder;
          v.witness_x = x;
          v.witness_u = u;
          return v;
        }
      }
    }
  }
  v.equal_identity = true;
  v.rule = Rule::kIdentity;
  return v;
}

namespace {

// Flat pointwise evaluation of a {b, s, t} word over the raw permutations.
Point apply_bst_word(Word const& w, Permutation const& beta,
                     Permutation const& sigma, Permutation const& tau,
                     Point pt) {
  for (Letter const& l : w.letters) {
    Permutation const& p = is_beta(l) ? beta : is_sigma(l) ? sigma : tau;
    pt = l.sign > 0 ? p.forward(pt) : p.backward(pt);
  }
  return pt;
}

}  // namespace

bool brute_force_identity(Word const& w, CodedSet const& set) {
  validate_alphabet(w);
  Permutation beta = beta_from_g(set.coder);
  Permutation sigma = sigma_line();
  Permutation tau = tau_triples();

  auto moved = [&](Point pt) {
    return apply_bst_word(w, beta, sigma, tau, pt) != pt;
  };

  // A nonzero sigma-exponent shifts the column of every point, so the
  // origin suffices for that case.
  if (moved(Point{0, 0})) return false;

  // Offset sets read directly off the word, without the normal-form
  // machinery: supersets of the collapsed L and M, which only widens the
  // certificate.
  std::set<int64_t> L, M;
  int64_t offset = 0;
  for (Letter const& l : w.letters) {
    if (is_sigma(l)) {
      offset += l.sign;
    } else if (is_beta(l)) {
      L.insert(offset);
    } else {
      M.insert(offset);
    }
  }

  std::set<Point> points;
  auto add_triple = [&points](int64_t col, int64_t t) {
    points.insert(Point{col, 3 * t});
    points.insert(Point{col, 3 * t + 1});
    points.insert(Point{col, 3 * t + 2});
  };

  for (int64_t u : M) {
    // Special triples: cells where some beta_x of the word acts.
    for (int64_t x : L) {
      if (auto t = set.preimage(x - u)) add_triple(-u, *t);
    }
    // One generic triple: a cell none of the word's beta letters reach.
    for (int64_t t = 0;; ++t) {
      if (!L.count(set.coder.g(t) + u)) {
        add_triple(-u, t);
        break;
      }
    }
  }
  // One witness cell per beta index, in a column without tau action.
  for (int64_t x : L) {
    for (int64_t t = 0;; ++t) {
      int64_t c = set.coder.g(t);
      if (!M.count(x - c)) {
        add_triple(c - x, t);
        break;
      }
    }
  }

  for (Point const& pt : points) {
    if (moved(pt)) return false;
  }
  return true;
}

Oracle oracle_from_coded_set(CodedSet const& set,
                             std::vector<int64_t> const& queries) {
  Oracle oracle;
  for (int64_t m : queries) {
    oracle.answers[m] = set.complement_contains(m);
  }
  return oracle;
}

}  // namespace permlab
