// The three canonical schedule-backed coded sets used by sweeps and the
// acceptance suite: an empty schedule, a finite one, and an eventually
// periodic one.  Each carries exact membership predicates, so sweep
// verdicts can be checked against ground truth.

#ifndef PERMLAB_TESTSETS_HPP_
#define PERMLAB_TESTSETS_HPP_

#include <vector>

#include "permlab/coener.hpp"

namespace permlab {

// Never emits: the coded complement is the padding alone.
CodedSet empty_coded_set();

// Emits {4, 7, 0, 2} at steps 0..3.
CodedSet finite_coded_set();

// Silent through step 3, then emits 2, 5, 8, ... at even steps: the
// enumerated set is {v : v >= 2 and v = 2 mod 3}.
CodedSet periodic_coded_set();

std::vector<CodedSet> canonical_coded_sets();

}  // namespace permlab

#endif  // PERMLAB_TESTSETS_HPP_
