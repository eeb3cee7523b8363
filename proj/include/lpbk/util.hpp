#pragma once

#include <cstddef>
#include <functional>

namespace lpbk {

// worker cap for the few brute-force scans that parallelize; 1 by default.
// Workers own disjoint output slices, so results do not depend on the count.
void set_threads(int t);
int get_threads();

void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace lpbk
