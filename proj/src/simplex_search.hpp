#pragma once

#include <cstdint>

#include "symcop/sym_tensor.hpp"

// Multi-start projected gradient search of A x^k over the nonnegative part of
// the unit k-norm sphere. Shared by the variational lambda_max routine and the
// N_min search.
namespace symcop::detail {

struct SimplexSearchOptions {
  int restarts = 20;          // uniform start plus restarts-1 random starts
  bool vertex_starts = false; // also start from every e^{(i)}
  std::uint64_t seed = 0;
  int max_iterations = 20000; // per start
};

struct SimplexSearchResult {
  double value = 0.0;
  Vec point;
  long iterations = 0;
};

/// sign = +1 maximizes, sign = -1 minimizes.
SimplexSearchResult search_knorm_simplex(const SymTensor &a, int sign,
                                         const SimplexSearchOptions &opts);

/// Deterministic uniform draw in [0, 1) from a 64-bit engine word.
inline double unit_interval(std::uint64_t word) {
  return static_cast<double>(word >> 11) * 0x1.0p-53;
}

} // namespace symcop::detail
