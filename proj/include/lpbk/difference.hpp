#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "lpbk/grid.hpp"

namespace lpbk {

// m-th forward difference along the lattice shift y = cells * h:
//   sum_{l=0}^{m} (-1)^{m-l} C(m,l) f(. + l y)
SampledField difference(const SampledField& f, std::array<int, 2> cells, int order);

// same operator built by iterating the first difference; used as a cross-check
SampledField difference_recursive(const SampledField& f, std::array<int, 2> cells, int order);

// (sum_{l=1}^{m} (-1)^l l^m C(m,l), (-1)^m m!) in exact integer arithmetic;
// throws std::overflow_error once the exact range is exceeded
std::pair<long long, long long> alternating_sum_identity(int m);

// all folded nonzero lattice shifts with |y| <= L/4
std::vector<std::array<int, 2>> default_shift_set(const GridSpec& g);

// max over shifts of ||Delta^m_y f||_inf / |y|^s with m = floor(s) + 1
double hz_seminorm(const SampledField& f, double s,
                   const std::optional<std::vector<std::array<int, 2>>>& shifts = std::nullopt);

}  // namespace lpbk
