#include "permlab/coener.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace permlab {

StepEnumerator empty_enumerator() {
  return {[](int64_t) { return std::nullopt; }, "empty"};
}

StepEnumerator table_enumerator(std::vector<std::pair<int64_t, int64_t>> rows,
                                std::string label) {
  auto table = std::make_shared<std::map<int64_t, int64_t>>();
  for (auto const& [t, v] : rows) {
    if (t < 0 || v < 0) {
      throw std::invalid_argument("schedule rows must be nonnegative");
    }
    auto [it, inserted] = table->emplace(t, v);
    if (!inserted && it->second != v) {
      throw std::invalid_argument("conflicting emissions at step " +
                                  std::to_string(t));
    }
  }
  return {[table](int64_t t) -> std::optional<int64_t> {
            auto it = table->find(t);
            if (it == table->end()) return std::nullopt;
            return it->second;
          },
          std::move(label)};
}

StepEnumerator pad_to_infinite(StepEnumerator const& e) {
  auto inner = e.at;
  return {[inner](int64_t t) -> std::optional<int64_t> {
            if (t < 0) return std::nullopt;
            if (t % 2 == 1) return t;  // odd steps enumerate the odds
            auto v = inner(t / 2);
            if (!v) return std::nullopt;
            return 2 * *v;
          },
          "pad(" + e.label + ")"};
}

StepEnumerator dedup(StepEnumerator const& e) {
  struct Cache {
    int64_t processed_to = 0;       // steps [0, processed_to) classified
    std::set<int64_t> seen;         // values emitted so far
    std::set<int64_t> suppressed;   // steps whose emission was a repeat
  };
  auto cache = std::make_shared<Cache>();
  auto inner = e.at;
  return {[cache, inner](int64_t t) -> std::optional<int64_t> {
            if (t < 0) return std::nullopt;
            while (cache->processed_to <= t) {
              int64_t s = cache->processed_to++;
              auto v = inner(s);
              if (v && !cache->seen.insert(*v).second) {
                cache->suppressed.insert(s);
              }
            }
            if (cache->suppressed.count(t)) return std::nullopt;
            return inner(t);
          },
          "dedup(" + e.label + ")"};
}

InjectiveCoder build_g(StepEnumerator const& e) {
  auto inner = e.at;
  return {[inner](int64_t t) -> int64_t {
            if (t < 0) throw std::invalid_argument("coder step must be >= 0");
            auto v = inner(t);
            return v ? 2 * *v : 2 * t + 1;
          },
          "g(" + e.label + ")"};
}

BoundedAnswer coded_complement_member(InjectiveCoder const& g, int64_t v,
                                      int64_t step_bound) {
  if (v < 0) return BoundedAnswer::kNoWithinBound;
  if (v % 2 == 1) {
    // Only step (v-1)/2 can produce an odd v.
    return g.graph_decider((v - 1) / 2, v) ? BoundedAnswer::kYes
                                           : BoundedAnswer::kNoWithinBound;
  }
  for (int64_t t = 0; t <= step_bound; ++t) {
    if (g.g(t) == v) return BoundedAnswer::kYes;
  }
  return BoundedAnswer::kNoWithinBound;
}

bool CodedSet::complement_contains(int64_t v) const {
  if (v < 0) return false;
  if (v % 2 == 1) {
    // v = 2t+1 is g(t) exactly when the padded schedule is silent at t,
    // i.e. t is even and the deduplicated raw schedule is silent at t/2.
    int64_t t = (v - 1) / 2;
    if (t % 2 == 1) return false;  // odd padded steps always emit
    int64_t s = t / 2;
    if (raw_silent_at(s)) return true;
    // A raw emission at s is suppressed by dedup exactly when the value
    // already appeared earlier; the padded step is then silent after all.
    auto v_raw = raw.at(s);
    for (int64_t u = 0; u < s; ++u) {
      auto w = raw.at(u);
      if (w && v_raw && *w == *v_raw) return true;
    }
    return false;
  }
  // v = 2m is emitted by the padded schedule iff m is odd (the padding) or
  // m = 2n with n emitted by the raw schedule at some step.
  int64_t m = v / 2;
  if (m % 2 == 1) return true;
  return raw_ever_emits(m / 2);
}

bool CodedSet::contains(int64_t v) const {
  return v >= 0 && !complement_contains(v);
}

std::optional<int64_t> CodedSet::preimage(int64_t v) const {
  if (!complement_contains(v)) return std::nullopt;
  if (v % 2 == 1) return (v - 1) / 2;
  // Even values come from padded emissions; scan padded steps.  The padded
  // step for an odd m = v/2 is m itself; for even m the raw emission step
  // is found by search, which terminates because complement_contains held.
  int64_t m = v / 2;
  if (m % 2 == 1) return m;
  for (int64_t t = 0;; ++t) {
    if (coder.g(t) == v) return t;
  }
}

CodedSet coded_set_from_table(
    std::vector<std::pair<int64_t, int64_t>> const& rows, std::string label) {
  auto raw = table_enumerator(rows, label);
  auto values = std::make_shared<std::set<int64_t>>();
  auto steps = std::make_shared<std::set<int64_t>>();
  for (auto const& [t, v] : rows) {
    values->insert(v);
    steps->insert(t);
  }
  return coded_set_from_schedule(
      raw, [values](int64_t v) { return values->count(v) > 0; },
      [steps](int64_t t) { return t < 0 || steps->count(t) == 0; },
      std::move(label));
}

CodedSet coded_set_from_schedule(StepEnumerator raw,
                                 std::function<bool(int64_t)> ever_emits,
                                 std::function<bool(int64_t)> silent_at,
                                 std::string label) {
  CodedSet set;
  set.raw = raw;
  set.padded = pad_to_infinite(dedup(raw));
  set.coder = build_g(set.padded);
  set.raw_ever_emits = std::move(ever_emits);
  set.raw_silent_at = std::move(silent_at);
  set.label = std::move(label);
  return set;
}

std::vector<std::pair<int64_t, int64_t>> parse_schedule(
    std::istream& in, std::vector<std::pair<int64_t, int64_t>>* dropped) {
  std::vector<std::pair<int64_t, int64_t>> rows;
  std::set<int64_t> seen_values;
  std::string line;
  int64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    int64_t t, v;
    if (!(ls >> t)) continue;  // blank line
    if (!(ls >> v)) {
      throw std::runtime_error("schedule line " + std::to_string(lineno) +
                               ": expected \"t v\"");
    }
    std::string rest;
    if (ls >> rest) {
      throw std::runtime_error("schedule line " + std::to_string(lineno) +
                               ": trailing input");
    }
    if (t < 0 || v < 0) {
      throw std::runtime_error("schedule line " + std::to_string(lineno) +
                               ": entries must be nonnegative");
    }
    if (!seen_values.insert(v).second) {
      if (dropped) dropped->emplace_back(t, v);
      continue;
    }
    rows.emplace_back(t, v);
  }
  return rows;
}

}  // namespace permlab
