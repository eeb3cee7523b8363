#pragma once

#include "lpbk/grid.hpp"

namespace lpbk {

// Unnormalized complex DFT over the grid, out-of-place.
// sign = -1: sum f(x) e^{-i x.xi},  sign = +1: sum F(xi) e^{+i x.xi}.
void dft(const GridSpec& g, const cplx* in, cplx* out, int sign);

}  // namespace lpbk
