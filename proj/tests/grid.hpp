// Test grids shared by the unit tests and the acceptance binary.
#pragma once

#include "lpt/algebra.hpp"

#include <vector>

namespace lpt::testing {

/// All nondecreasing tuples of length 1..max_r with entries in [0, max_n].
std::vector<std::vector<int>> tuples(int max_r, int max_n);

/// tuples(max_r, max_n) crossed with each t in ts (0 stands for inf).
std::vector<TupleSpec> grid(const std::vector<long>& ts, int max_r = 3, int max_n = 2);

}  // namespace lpt::testing
