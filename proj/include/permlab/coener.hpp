// Step enumerators for co-c.e. sets: padding to infinite complement,
// deduplication, and the injective coder g with a decidable graph.  A step
// enumerator is a deterministic schedule assigning to each step either no
// output or a natural number; it stands in for the enumeration of the
// complement of a co-c.e. set.

#ifndef PERMLAB_COENER_HPP_
#define PERMLAB_COENER_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace permlab {

struct StepEnumerator {
  // at(t) is the emission at step t, if any.  Must be deterministic:
  // repeated queries of the same step agree.
  std::function<std::optional<int64_t>(int64_t)> at;
  std::string label;
};

// Enumerator that never emits.
StepEnumerator empty_enumerator();

// Enumerator backed by an explicit finite table of (step, value) rows.
StepEnumerator table_enumerator(std::vector<std::pair<int64_t, int64_t>> rows,
                                std::string label = "table");

// Interleaves e with the odd numbers so that the enumerated set always has
// an infinite complement image: step 2t emits 2 * v when e emits v at t,
// and step 2t+1 emits 2t+1.
StepEnumerator pad_to_infinite(StepEnumerator const& e);

// Suppresses any emission whose value already appeared at a smaller step;
// the schedule is otherwise unchanged.  The seen-set is materialized lazily
// and shared, so copies of the returned enumerator stay consistent;
// concurrent queries must be serialized externally.
StepEnumerator dedup(StepEnumerator const& e);

// Total injective map omega -> omega whose graph is decided by a single
// schedule query.
struct InjectiveCoder {
  std::function<int64_t(int64_t)> g;
  std::string label;

  [[nodiscard]] bool graph_decider(int64_t t, int64_t value) const {
    return t >= 0 && g(t) == value;
  }
};

// g(t) = 2 v when e emits v at step t, and g(t) = 2t + 1 otherwise.  With
// e deduplicated, g is injective: even outputs are distinct by dedup, odd
// outputs are distinct by t, and the parities do not meet.  The range of g
// is {2v : v emitted} plus {2t+1 : t silent}.
InjectiveCoder build_g(StepEnumerator const& e);

enum class BoundedAnswer { kYes, kNoWithinBound };

// Is v in range(g)?  Odd v is decided exactly by the single graph query at
// t = (v-1)/2; even v is searched up to step_bound, so a negative answer
// is only "not found within the bound".
BoundedAnswer coded_complement_member(InjectiveCoder const& g, int64_t v,
                                      int64_t step_bound);

// A co-c.e. set presented through the full pipeline
//   raw schedule -> dedup -> pad_to_infinite -> build_g,
// together with an exact membership test for validation.  The coded set S'
// is the complement of range(g); the exact test requires knowing the whole
// raw schedule, so it is only available for explicitly constructed test
// sets, never to the truth-table decider itself.
struct CodedSet {
  StepEnumerator raw;
  StepEnumerator padded;  // pad_to_infinite(dedup(raw))
  InjectiveCoder coder;   // build_g(padded)

  // Exact: does the raw schedule ever emit v?
  std::function<bool(int64_t)> raw_ever_emits;
  // Exact: is the raw schedule silent at step t?  (t < 0 counts as silent.)
  std::function<bool(int64_t)> raw_silent_at;
  std::string label;

  // v in range(g), decided exactly from the schedule.
  [[nodiscard]] bool complement_contains(int64_t v) const;
  // v in the coded set S' = omega \ range(g); false for v < 0.
  [[nodiscard]] bool contains(int64_t v) const;
  // Step t with g(t) = v, if v is in range(g).
  [[nodiscard]] std::optional<int64_t> preimage(int64_t v) const;
};

// Coded set from a finite emission table (steps beyond the table are
// silent).
CodedSet coded_set_from_table(
    std::vector<std::pair<int64_t, int64_t>> const& rows, std::string label);

// Coded set from an arbitrary schedule plus exact predicates supplied by
// the caller (used for eventually periodic test schedules).
CodedSet coded_set_from_schedule(StepEnumerator raw,
                                 std::function<bool(int64_t)> ever_emits,
                                 std::function<bool(int64_t)> silent_at,
                                 std::string label);

// Parses the schedule file format: one "t v" pair of nonnegative decimals
// per line; '#' starts a comment; absent steps are silent.  Duplicate
// values are dropped (dedup) and reported through dropped, if given.
std::vector<std::pair<int64_t, int64_t>> parse_schedule(
    std::istream& in, std::vector<std::pair<int64_t, int64_t>>* dropped = nullptr);

}  // namespace permlab

#endif  // PERMLAB_COENER_HPP_
