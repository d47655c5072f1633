#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "symcop/sym_tensor.hpp"

namespace symcop {

struct IterationConfig {
  double tolerance = 1e-10;
  long max_iterations = 100000;
  double shift = 1.0;

  /// Throws std::invalid_argument on tolerance <= 0 or shift < 0.
  void validate() const;
};

struct BlockLambda {
  std::vector<int> indices;
  double lambda = 0.0;
};

/// An H-eigenpair estimate A x^{k-1} = lambda x^{[k-1]} with x >= 0 and
/// sum x_i^k = 1.
struct SpectralResult {
  double lambda = 0.0;
  Vec eigenvector;
  /// max_i |(A x^{k-1})_i - lambda x_i^{k-1}| against the input tensor.
  double residual = 0.0;
  long iterations = 0;
  /// Per weakly irreducible block; lambda is their maximum.
  std::vector<BlockLambda> block_lambdas;
  IterationConfig config;
};

/// Raised when the Perron iteration exhausts max_iterations. Carries the
/// last Collatz-Wielandt bracket, which always contains the block's
/// spectral radius.
class ConvergenceError : public std::runtime_error {
public:
  ConvergenceError(double lower, double upper, long iterations);
  double lower() const { return lower_; }
  double upper() const { return upper_; }
  long iterations() const { return iterations_; }

private:
  double lower_;
  double upper_;
  long iterations_;
};

/// Shifted power iteration on a symmetric nonnegative weakly irreducible
/// tensor:
///   y = (A + shift I) x^{k-1},  x = normalize(y^{[1/(k-1)]}).
/// Stops once the bracket max_i - min_i of y_i / x_i^{k-1} drops below
/// tolerance * (1 + |lambda|) and reports its midpoint minus the shift.
SpectralResult power_iteration_block(const SymTensor &a,
                                     const IterationConfig &cfg = {});

/// Largest H-eigenvalue of a symmetric essentially nonnegative tensor, via
/// A = B + cI, the weakly irreducible partition of B, and a Perron iteration
/// per block. The eigenvector lives on the first block attaining the maximum.
SpectralResult lambda_max(const SymTensor &a, const IterationConfig &cfg = {});

struct VariationalConfig {
  int restarts = 20;
  std::uint64_t seed = 0x5eed;
  int max_iterations = 20000;
};

/// max { A x^k : x >= 0, sum x_i^k = 1 } by multi-start projected ascent. The
/// return value is attained at a feasible point, hence a lower bound on the
/// true maximum.
double lambda_max_variational(const SymTensor &a,
                              const VariationalConfig &cfg = {});

/// Row-sum bracket of lambda_max for nonnegative tensors: upper = R_max,
/// lower = max(R_bar, d_max). Throws std::invalid_argument on negative
/// entries.
struct EigenBounds {
  double lower = 0.0;
  double upper = 0.0;
};
EigenBounds bounds_row_sums(const SymTensor &a);

/// Smallest H-eigenvalue of a symmetric essentially nonpositive tensor,
/// computed as -lambda_max(-A).
SpectralResult lambda_min_ess_nonpos(const SymTensor &a,
                                     const IterationConfig &cfg = {});

/// lower = R_min, upper = min(R_bar, d_min) for essentially nonpositive A.
EigenBounds lambda_min_bounds(const SymTensor &a);

/// Relative agreement demanded of block eigenvalues in has_hpp_eigenvalue.
inline constexpr double kHppRelativeTolerance = 1e-8;

struct HppEigenpair {
  double lambda = 0.0;
  Vec eigenvector; // strictly positive, unit k-norm
  double residual = 0.0;
  std::vector<BlockLambda> block_lambdas;
};

/// The H++-eigenvalue of a symmetric nonnegative tensor, if it has one: it
/// exists iff every weakly irreducible block has the same largest
/// eigenvalue.
std::optional<HppEigenpair> has_hpp_eigenvalue(const SymTensor &a,
                                               const IterationConfig &cfg = {});

/// max_i |(A x^{k-1})_i - lambda x_i^{k-1}|.
double eigen_residual(const SymTensor &a, double lambda,
                      std::span<const double> x);

} // namespace symcop
