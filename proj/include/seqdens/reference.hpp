#pragma once

#include "seqdens/densities.hpp"
#include "seqdens/piecewise_linear.hpp"
#include "seqdens/sequence.hpp"

#include <span>

namespace seqdens::reference {

// Straightforward serial implementations, kept as the cross-check for the
// sweep/OpenMP kernels: every result must match the kernel output exactly.

// Pointwise sum of two functions over the merged corner abscissas.
PiecewiseLinear sum2(const PiecewiseLinear& a, const PiecewiseLinear& b);

// Left fold of sum2.
PiecewiseLinear sum(std::span<const PiecewiseLinear> fs);

// Density built window by window with the folded sum.
PiecewiseLinear density(const PeriodicSequence& s, int fold);

}  // namespace seqdens::reference
