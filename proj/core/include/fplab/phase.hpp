#pragma once

#include "fplab/polynomial.hpp"
#include "fplab/table.hpp"

namespace fplab {

// A polynomial phase: the complex table x -> omega^{pi(x)} together with the
// exponent polynomial it came from.
struct PhaseFunction {
  Polynomial base;
  TableFunction table;
};

// Builds the dense table of omega^{pi(x)} over the whole domain.
TableFunction phase_table(const Polynomial& pi);

PhaseFunction make_phase(const Polynomial& pi);

}  // namespace fplab
