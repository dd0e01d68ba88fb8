// permlab command line: word manipulation, word-problem decisions against
// schedule-backed coded sets, coding-equation verification, abelian
// invariant reports, and the randomized property sweeps.
//
// Exit codes: 0 success/agreement, 1 usage or input error, 2 property
// violation.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "permlab/abelian.hpp"
#include "permlab/pi01.hpp"
#include "permlab/testsets.hpp"
#include "permlab/ttwp.hpp"
#include "permlab/version.hpp"
#include "permlab/wordgen.hpp"

using json = nlohmann::ordered_json;
using namespace permlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

struct Output {
  std::string format = "human";
  std::string out_path;
  uint64_t seed = 0;

  json envelope(std::string const& command) const {
    json j;
    j["schema"] = 1;
    j["version"] = kVersion;
    j["command"] = command;
    j["seed"] = seed;
    return j;
  }

  void emit(json const& report, std::string const& human_text) const {
    std::string text =
        format == "json" ? report.dump(2) + "\n" : human_text;
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path);
      out << text;
    }
  }
};

std::string read_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string digest(std::string const& bytes) { return hex64(fnv1a(bytes)); }

json point_json(Point const& p) { return json{{"col", p.col}, {"row", p.row}}; }

CodedSet load_schedule_set(std::string const& path) {
  std::string bytes = read_file(path);
  std::istringstream in(bytes);
  std::vector<std::pair<int64_t, int64_t>> dropped;
  auto rows = parse_schedule(in, &dropped);
  for (auto const& [t, v] : dropped) {
    std::cerr << path << ": dropped duplicate value " << v << " at step " << t
              << "\n";
  }
  return coded_set_from_table(rows, path);
}

Oracle load_oracle(std::string const& path) {
  std::string bytes = read_file(path);
  std::istringstream in(bytes);
  Oracle oracle;
  std::string line;
  int64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    int64_t m = 0;
    int bit = 0;
    if (!(ls >> m)) continue;
    if (!(ls >> bit) || (bit != 0 && bit != 1)) {
      throw std::runtime_error("oracle line " + std::to_string(lineno) +
                               ": expected \"m 0|1\"");
    }
    oracle.answers[m] = bit == 1;
  }
  return oracle;
}

ColumnFunction load_column_function(std::string const& builtin,
                                    std::string const& table_path) {
  if (!table_path.empty()) {
    std::string bytes = read_file(table_path);
    std::istringstream in(bytes);
    return parse_column_table(in, table_path);
  }
  return builtin_column_function(builtin);
}

json verdict_json(Verdict const& v) {
  json j;
  j["equal_identity"] = v.equal_identity;
  j["rule"] = to_string(v.rule);
  if (v.witness_x) j["witness_x"] = *v.witness_x;
  if (v.witness_u) j["witness_u"] = *v.witness_u;
  if (v.cell_image) j["cell_image"] = *v.cell_image;
  j["queries"] = v.queries;
  return j;
}

// ---------------------------------------------------------------- word --

int cmd_word(Output const& out, std::string const& action,
             std::string const& text, std::string const& gen) {
  Word w = parse_word(text);
  json j = out.envelope("word");
  j["action"] = action;
  j["input"] = text;
  std::string result;
  if (action == "reduce") {
    result = format_word(free_reduce(w));
  } else if (action == "invert") {
    result = format_word(invert(w));
  } else {
    Word g = parse_word(gen);
    if (g.size() != 1) {
      throw std::runtime_error("--gen must name a single generator");
    }
    result = std::to_string(
        exponent_sum(w, g.letters[0].base, g.letters[0].index));
  }
  j["result"] = result;
  out.emit(j, result + "\n");
  return kExitOk;
}

// -------------------------------------------------------------- decide --

int cmd_decide(Output const& out, std::string const& text,
               std::string const& mode, std::string const& schedule_path,
               std::string const& oracle_path) {
  Word w = parse_word(text);
  json j = out.envelope("decide");
  j["word"] = text;
  j["mode"] = mode;

  std::optional<CodedSet> set;
  if (!schedule_path.empty()) {
    set = load_schedule_set(schedule_path);
    j["schedule_digest"] = digest(read_file(schedule_path));
  }
  if ((mode == "brute" || mode == "both") && !set) {
    std::cerr << "decide: --mode " << mode << " needs --schedule\n";
    return kExitUsage;
  }

  std::ostringstream human;
  std::optional<bool> tt_identity;
  if (mode == "tt" || mode == "both") {
    std::vector<int64_t> queries;
    if (sigma_exponent_check(w) == SigmaCheck::kZero) {
      queries = query_set(to_normal_form(w));
    }
    Oracle oracle;
    if (!oracle_path.empty()) {
      oracle = load_oracle(oracle_path);
      j["oracle_digest"] = digest(read_file(oracle_path));
    } else if (set) {
      oracle = oracle_from_coded_set(*set, queries);
    } else if (!queries.empty()) {
      std::cerr << "decide: the word queries the oracle; give --oracle or "
                   "--schedule\n";
      return kExitUsage;
    }
    try {
      Verdict v = decide_word(w, oracle);
      j["tt"] = verdict_json(v);
      tt_identity = v.equal_identity;
      human << "tt: " << (v.equal_identity ? "identity" : "not-identity")
            << " (rule: " << to_string(v.rule) << ")\n";
      human << "queries:";
      for (int64_t q : v.queries) human << ' ' << q;
      human << "\n";
    } catch (MissingOracleAnswers const& e) {
      j["error"] = "missing-oracle-answers";
      j["missing"] = e.missing();
      std::ostringstream msg;
      msg << "decide: oracle is missing answers for:";
      for (int64_t m : e.missing()) msg << ' ' << m;
      msg << "\n";
      out.emit(j, msg.str());
      return kExitUsage;
    }
  }

  std::optional<bool> brute_identity;
  if (mode == "brute" || mode == "both") {
    brute_identity = brute_force_identity(w, *set);
    j["brute"] = *brute_identity;
    human << "brute: " << (*brute_identity ? "identity" : "not-identity")
          << "\n";
  }

  int exit_code = kExitOk;
  if (mode == "both") {
    bool agree = tt_identity == brute_identity;
    j["agreement"] = agree;
    human << "agreement: " << (agree ? "true" : "false") << "\n";
    if (!agree) exit_code = kExitViolation;
  }
  out.emit(j, human.str());
  return exit_code;
}

// --------------------------------------------------------- verify-code --

int cmd_verify_code(Output const& out, std::string const& builtin,
                    std::string const& table_path, int64_t x, int64_t y,
                    int64_t bound) {
  ColumnFunction f = load_column_function(builtin, table_path);
  json j = out.envelope("verify-code");
  j["presentation"] = f.name;
  if (!table_path.empty()) j["table_digest"] = digest(read_file(table_path));
  j["x"] = x;
  j["y"] = y;
  j["bound"] = bound;
  try {
    CodeEquationReport r = verify_code_equation(f, x, y, bound);
    j["region_rows"] = r.region_rmax;
    j["f_agrees_bounded"] = r.f_agrees_bounded;
    if (r.f_witness_n) j["f_witness_n"] = *r.f_witness_n;
    j["perms_agree_on_region"] = r.perms_agree_on_region;
    if (r.perm_witness) {
      j["perm_witness"] = point_json(*r.perm_witness);
      j["perm_witness_image_x"] = point_json(r.perm_witness_images[0]);
      j["perm_witness_image_y"] = point_json(r.perm_witness_images[1]);
    }
    j["sides_match"] = r.sides_match();
    std::ostringstream human;
    human << "f side: "
          << (r.f_agrees_bounded ? "agree (up to bound)" : "differ") ;
    if (r.f_witness_n) human << " at n = " << *r.f_witness_n;
    human << "\npermutation side: "
          << (r.perms_agree_on_region ? "agree (on region)" : "differ");
    if (r.perm_witness) human << " at " << to_string(*r.perm_witness);
    human << "\nsides match: " << (r.sides_match() ? "true" : "false")
          << "\n";
    out.emit(j, human.str());
    return kExitOk;
  } catch (BoundViolation const& e) {
    j["error"] = "bound-violation";
    j["at_x"] = e.x();
    j["at_n"] = e.n();
    j["value"] = e.value();
    out.emit(j, std::string(e.what()) + "\n");
    return kExitUsage;
  }
}

// ------------------------------------------------------------- abelian --

json invariants_json(AbelianInvariants const& inv) {
  return json{{"free_rank", inv.free_rank},
              {"invariant_factors", inv.invariant_factors}};
}

int cmd_abelian(Output const& out, std::string const& action,
                std::vector<std::string> const& files) {
  json j = out.envelope("abelian");
  j["action"] = action;
  std::vector<Presentation> inputs;
  json digests = json::array();
  for (auto const& path : files) {
    std::string bytes = read_file(path);
    std::istringstream in(bytes);
    inputs.push_back(parse_presentation(in));
    digests.push_back(digest(bytes));
  }
  j["input_digests"] = digests;

  std::ostringstream human;
  int exit_code = kExitOk;
  if (action == "invariants") {
    json reports = json::array();
    for (size_t i = 0; i < inputs.size(); ++i) {
      AbelianInvariants inv = abelian_invariants(inputs[i]);
      reports.push_back(invariants_json(inv));
      human << files[i] << ": free_rank " << inv.free_rank << ", factors [";
      for (size_t k = 0; k < inv.invariant_factors.size(); ++k) {
        human << (k ? ", " : "") << inv.invariant_factors[k];
      }
      human << "]\n";
    }
    j["invariants"] = reports;
  } else if (action == "iso") {
    if (inputs.size() != 2) {
      std::cerr << "abelian iso needs exactly two presentation files\n";
      return kExitUsage;
    }
    bool iso = abelian_iso(inputs[0], inputs[1]);
    j["iso"] = iso;
    human << (iso ? "true" : "false") << "\n";
  } else {  // diagonal
    Presentation delta = strong_diagonal(inputs);
    DiagonalReport report = diagonal_check(delta, inputs);
    j["presentation"] = format_presentation(delta);
    j["invariants"] = invariants_json(report.output_invariants);
    json witnesses = json::array();
    for (auto const& w : report.witnesses) {
      witnesses.push_back(json{{"input", w.input},
                               {"input_rank", w.input_rank},
                               {"output_rank", w.output_rank},
                               {"iso", w.iso}});
    }
    j["witnesses"] = witnesses;
    j["check_passed"] = report.ok();
    human << format_presentation(delta);
    human << "output rank " << report.output_invariants.free_rank << "\n";
    for (auto const& w : report.witnesses) {
      human << "input " << w.input << ": rank " << w.input_rank
            << " < " << w.output_rank << ", iso " << (w.iso ? "true" : "false")
            << "\n";
    }
    human << "check: " << (report.ok() ? "passed" : "FAILED") << "\n";
    if (!report.ok()) exit_code = kExitViolation;
  }
  out.emit(j, human.str());
  return exit_code;
}

// --------------------------------------------------------------- sweep --

void dump_counterexample(Output const& out, json const& case_json) {
  std::string path = out.out_path.empty() ? "permlab-counterexample.json"
                                          : out.out_path + ".case";
  std::ofstream f(path);
  f << case_json.dump(2) << "\n";
  std::cerr << "counterexample written to " << path << "\n";
}

int sweep_differential(Output const& out, json& j, int64_t count,
                       int64_t max_length) {
  Rng rng(out.seed);
  WordGenParams params;
  params.max_length = max_length;
  auto sets = canonical_coded_sets();
  int64_t checked = 0;
  for (auto const& set : sets) {
    for (int64_t i = 0; i < count; ++i) {
      Word w = random_decider_word(rng, params);
      bool tt;
      if (sigma_exponent_check(w) == SigmaCheck::kZero) {
        NormalForm nf = to_normal_form(w);
        tt = decide(nf, oracle_from_coded_set(set, query_set(nf)))
                 .equal_identity;
      } else {
        tt = false;
      }
      bool brute = brute_force_identity(w, set);
      ++checked;
      if (tt != brute) {
        json c{{"set", set.label},
               {"word", format_word(w)},
               {"tt", tt},
               {"brute", brute},
               {"seed", out.seed},
               {"index", i}};
        j["counterexample"] = c;
        dump_counterexample(out, c);
        return kExitViolation;
      }
    }
  }
  j["checked"] = checked;
  j["agree"] = checked;
  return kExitOk;
}

int sweep_mreduction(Output const& out, json& j, int64_t xmax) {
  int64_t checked = 0;
  for (auto const& set : canonical_coded_sets()) {
    for (int64_t x = 0; x <= xmax; ++x) {
      Word mx = m_reduction_word(x);
      NormalForm nf = to_normal_form(mx);
      Verdict v = decide(nf, oracle_from_coded_set(set, query_set(nf)));
      ++checked;
      if (v.equal_identity != set.contains(x)) {
        json c{{"set", set.label}, {"x", x}, {"seed", out.seed}};
        j["counterexample"] = c;
        dump_counterexample(out, c);
        return kExitViolation;
      }
    }
  }
  j["checked"] = checked;
  return kExitOk;
}

int sweep_queryset(Output const& out, json& j, int64_t count) {
  Rng rng(out.seed);
  CodedSet set = finite_coded_set();
  int64_t swaps = 0;
  for (int64_t i = 0; i < count; ++i) {
    Word w = random_decider_word(rng);
    if (sigma_exponent_check(w) != SigmaCheck::kZero) continue;
    NormalForm nf = to_normal_form(w);
    auto qs = query_set(nf);
    Oracle base = oracle_from_coded_set(set, qs);
    Verdict v0 = decide(nf, base);
    Oracle swapped = base;
    for (int64_t m = -90; m <= 90; ++m) {
      if (!swapped.answers.count(m)) {
        swapped.answers[m] = rng.chance(0.5);
      }
    }
    Verdict v1 = decide(nf, swapped);
    ++swaps;
    if (!(v0 == v1) || v0.queries != qs) {
      json c{{"word", format_word(w)}, {"seed", out.seed}, {"index", i}};
      j["counterexample"] = c;
      dump_counterexample(out, c);
      return kExitViolation;
    }
  }
  j["checked"] = swaps;
  return kExitOk;
}

int cmd_sweep(Output const& out, std::string const& which, int64_t count,
              int64_t max_length, int64_t xmax) {
  json j = out.envelope("sweep");
  j["sweep"] = which;
  j["bounds"] = json{{"count", count},
                     {"max_length", max_length},
                     {"xmax", xmax}};
  int code;
  if (which == "differential") {
    code = sweep_differential(out, j, count, max_length);
  } else if (which == "mreduction") {
    code = sweep_mreduction(out, j, xmax);
  } else {
    code = sweep_queryset(out, j, count);
  }
  std::ostringstream human;
  if (code == kExitOk) {
    human << which << " sweep: " << j["checked"].get<int64_t>()
          << " cases, all consistent\n";
  } else {
    human << which << " sweep: counterexample found\n";
  }
  out.emit(j, human.str());
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"word problems of computable permutation groups"};
  app.require_subcommand(1);

  Output out;
  app.add_option("--format", out.format, "output format")
      ->check(CLI::IsMember({"human", "json"}))
      ->capture_default_str();
  app.add_option("--seed", out.seed, "seed for randomized sweeps")
      ->capture_default_str();
  app.add_option("--out", out.out_path, "write the report to a file");

  // word
  auto* word_cmd = app.add_subcommand("word", "word manipulation");
  std::string word_action, word_text, word_gen;
  word_cmd->add_option("action", word_action, "reduce|invert|expsum")
      ->required()
      ->check(CLI::IsMember({"reduce", "invert", "expsum"}));
  word_cmd->add_option("text", word_text, "the word")->required();
  word_cmd->add_option("--gen", word_gen, "generator for expsum");

  // decide
  auto* decide_cmd =
      app.add_subcommand("decide", "decide whether a word is the identity");
  std::string decide_text, decide_mode = "tt", sched_path, oracle_path;
  decide_cmd->add_option("text", decide_text, "word over {b, s, t}")
      ->required();
  decide_cmd->add_option("--mode", decide_mode, "tt|brute|both")
      ->check(CLI::IsMember({"tt", "brute", "both"}))
      ->capture_default_str();
  decide_cmd->add_option("--schedule", sched_path, "schedule file");
  decide_cmd->add_option("--oracle", oracle_path, "oracle answers file");

  // verify-code
  auto* verify_cmd = app.add_subcommand(
      "verify-code", "bounded check of the coding equivalence");
  std::string vc_builtin = "identity", vc_table;
  int64_t vc_x = 0, vc_y = 0, vc_bound = 16;
  verify_cmd->add_option("--f", vc_builtin,
                         "builtin column function (identity|trivial|mod<k>)")
      ->capture_default_str();
  verify_cmd->add_option("--table", vc_table, "table-driven column function");
  verify_cmd->add_option("x", vc_x)->required();
  verify_cmd->add_option("y", vc_y)->required();
  verify_cmd->add_option("--bound", vc_bound, "agreement bound N")
      ->capture_default_str();

  // abelian
  auto* ab_cmd = app.add_subcommand("abelian", "abelianization reports");
  std::string ab_action;
  std::vector<std::string> ab_files;
  ab_cmd->add_option("action", ab_action, "invariants|diagonal|iso")
      ->required()
      ->check(CLI::IsMember({"invariants", "diagonal", "iso"}));
  ab_cmd->add_option("files", ab_files, "presentation files");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "randomized property sweeps");
  std::string sweep_which;
  int64_t sweep_count = 1000, sweep_maxlen = 40, sweep_xmax = 200;
  sweep_cmd->add_option("which", sweep_which, "differential|mreduction|queryset")
      ->required()
      ->check(CLI::IsMember({"differential", "mreduction", "queryset"}));
  sweep_cmd->add_option("--count", sweep_count)->capture_default_str();
  sweep_cmd->add_option("--max-length", sweep_maxlen)->capture_default_str();
  sweep_cmd->add_option("--xmax", sweep_xmax)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (word_cmd->parsed()) {
      if (word_action == "expsum" && word_gen.empty()) {
        std::cerr << "word expsum needs --gen\n";
        return kExitUsage;
      }
      return cmd_word(out, word_action, word_text, word_gen);
    }
    if (decide_cmd->parsed()) {
      return cmd_decide(out, decide_text, decide_mode, sched_path,
                        oracle_path);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify_code(out, vc_builtin, vc_table, vc_x, vc_y, vc_bound);
    }
    if (ab_cmd->parsed()) {
      return cmd_abelian(out, ab_action, ab_files);
    }
    if (sweep_cmd->parsed()) {
      return cmd_sweep(out, sweep_which, sweep_count, sweep_maxlen,
                       sweep_xmax);
    }
  } catch (ParseError const& e) {
    std::cerr << "permlab: " << e.what() << "\n";
    return kExitUsage;
  } catch (std::exception const& e) {
    std::cerr << "permlab: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
