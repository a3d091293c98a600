#pragma once

#include <cstddef>
#include <functional>

namespace lap {

// Runs fn(i) for i in [0, n) on up to `jobs` threads over static contiguous
// chunks. Callers must write to disjoint outputs so results do not depend on
// the partitioning. jobs <= 1 runs inline.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

int default_jobs();  // hardware concurrency, at least 1

}  // namespace lap
