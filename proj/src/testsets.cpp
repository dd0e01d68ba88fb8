#include "permlab/testsets.hpp"

namespace permlab {

CodedSet empty_coded_set() {
  return coded_set_from_schedule(
      empty_enumerator(), [](int64_t) { return false; },
      [](int64_t) { return true; }, "empty");
}

CodedSet finite_coded_set() {
  return coded_set_from_table({{0, 4}, {1, 7}, {2, 0}, {3, 2}}, "finite");
}

CodedSet periodic_coded_set() {
  StepEnumerator raw{[](int64_t t) -> std::optional<int64_t> {
                       if (t < 4 || t % 2 != 0) return std::nullopt;
                       return (t - 4) / 2 * 3 + 2;
                     },
                     "periodic"};
  return coded_set_from_schedule(
      raw, [](int64_t v) { return v >= 2 && (v - 2) % 3 == 0; },
      [](int64_t t) { return t < 4 || t % 2 != 0; }, "periodic");
}

std::vector<CodedSet> canonical_coded_sets() {
  return {empty_coded_set(), finite_coded_set(), periodic_coded_set()};
}

}  // namespace permlab
