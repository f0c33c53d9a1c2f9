#include "fplab/phase.hpp"

#include "fplab/limits.hpp"

namespace fplab {

TableFunction phase_table(const Polynomial& pi) {
  const std::uint64_t size = domain_size(pi.p(), pi.n());
  charge(size);
  RootTable roots(pi.p());
  TableFunction out(pi.p(), pi.n());
  for (std::uint64_t i = 0; i < size; ++i) {
    out[i] = roots[pi.eval(decode_point(pi.p(), i, pi.n()))];
  }
  return out;
}

PhaseFunction make_phase(const Polynomial& pi) {
  return PhaseFunction{pi, phase_table(pi)};
}

}  // namespace fplab
