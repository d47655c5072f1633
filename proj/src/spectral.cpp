#include "symcop/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "simplex_search.hpp"
#include "symcop/structure.hpp"

namespace symcop {

void IterationConfig::validate() const {
  if (!(tolerance > 0.0))
    throw std::invalid_argument("iteration tolerance must be positive");
  if (!(shift >= 0.0))
    throw std::invalid_argument("iteration shift must be nonnegative");
  if (max_iterations < 1)
    throw std::invalid_argument("max_iterations must be positive");
}

ConvergenceError::ConvergenceError(double lower, double upper, long iterations)
    : std::runtime_error("power iteration did not converge after " +
                         std::to_string(iterations) +
                         " iterations; bracket [" + std::to_string(lower) +
                         ", " + std::to_string(upper) + "]"),
      lower_(lower), upper_(upper), iterations_(iterations) {}

double eigen_residual(const SymTensor &a, double lambda,
                      std::span<const double> x) {
  const Vec ax = symcop::apply(a, x);
  double r = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    r = std::max(r, std::abs(ax[i] - lambda * std::pow(x[i], a.order() - 1)));
  return r;
}

SpectralResult power_iteration_block(const SymTensor &a,
                                     const IterationConfig &cfg) {
  cfg.validate();
  if (!classify(a).nonnegative)
    throw std::invalid_argument("power iteration needs a nonnegative tensor");
  if (!is_weakly_irreducible(a))
    throw std::invalid_argument(
        "power iteration needs a weakly irreducible tensor");

  const int k = a.order();
  const std::size_t n = static_cast<std::size_t>(a.dim());
  Vec x = normalize_knorm(Vec(n, 1.0), k);
  Vec y(n);
  double lo = 0.0, hi = 0.0;
  for (long it = 1; it <= cfg.max_iterations; ++it) {
    const Vec ax = symcop::apply(a, x);
    lo = std::numeric_limits<double>::infinity();
    hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
      const double xp = std::pow(x[i], k - 1);
      y[i] = ax[i] + cfg.shift * xp;
      if (xp > 0.0) {
        const double ratio = y[i] / xp;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
      }
    }
    const double mid = 0.5 * (lo + hi) - cfg.shift;
    if (hi - lo <= cfg.tolerance * (1.0 + std::abs(mid))) {
      SpectralResult res;
      res.lambda = mid;
      res.residual = eigen_residual(a, mid, x);
      res.eigenvector = std::move(x);
      res.iterations = it;
      std::vector<int> all(n);
      for (std::size_t i = 0; i < n; ++i)
        all[i] = static_cast<int>(i);
      res.block_lambdas.push_back({std::move(all), mid});
      res.config = cfg;
      return res;
    }
    for (std::size_t i = 0; i < n; ++i)
      y[i] = std::pow(y[i], 1.0 / (k - 1));
    x = normalize_knorm(y, k);
  }
  throw ConvergenceError(lo - cfg.shift, hi - cfg.shift, cfg.max_iterations);
}

namespace {

struct BlockRun {
  std::vector<int> indices;
  SpectralResult result;
};

std::vector<BlockRun> run_blocks(const SymTensor &nonneg,
                                 const IterationConfig &cfg) {
  std::vector<BlockRun> runs;
  for (auto &block : weakly_irreducible_partition(nonneg).blocks) {
    auto sub = subtensor(nonneg, block);
    runs.push_back({std::move(block), power_iteration_block(sub.tensor, cfg)});
  }
  return runs;
}

} // namespace

SpectralResult lambda_max(const SymTensor &a, const IterationConfig &cfg) {
  cfg.validate();
  const auto decomp = essential_decomposition(a);
  const auto runs = run_blocks(decomp.nonnegative_part, cfg);

  SpectralResult res;
  res.config = cfg;
  std::size_t best = 0;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    const double lam = runs[r].result.lambda + decomp.shift;
    res.block_lambdas.push_back({runs[r].indices, lam});
    res.iterations += runs[r].result.iterations;
    if (lam > res.block_lambdas[best].lambda)
      best = r;
  }
  res.lambda = res.block_lambdas[best].lambda;
  res.eigenvector.assign(static_cast<std::size_t>(a.dim()), 0.0);
  const auto &winner = runs[best];
  for (std::size_t j = 0; j < winner.indices.size(); ++j)
    res.eigenvector[winner.indices[j]] = winner.result.eigenvector[j];
  res.residual = eigen_residual(a, res.lambda, res.eigenvector);
  return res;
}

double lambda_max_variational(const SymTensor &a, const VariationalConfig &cfg) {
  detail::SimplexSearchOptions opts;
  opts.restarts = cfg.restarts;
  opts.seed = cfg.seed;
  opts.max_iterations = cfg.max_iterations;
  opts.vertex_starts = true;
  return detail::search_knorm_simplex(a, +1, opts).value;
}

EigenBounds bounds_row_sums(const SymTensor &a) {
  if (!classify(a).nonnegative)
    throw std::invalid_argument("row-sum bounds need a nonnegative tensor");
  const auto rows = row_stats(a);
  const auto diag = diag_stats(a);
  return {std::max(rows.mean, diag.max), rows.max};
}

SpectralResult lambda_min_ess_nonpos(const SymTensor &a,
                                     const IterationConfig &cfg) {
  if (!classify(a).essentially_nonpositive)
    throw std::invalid_argument(
        "lambda_min needs an essentially nonpositive tensor");
  auto res = lambda_max(negate(a), cfg);
  res.lambda = -res.lambda;
  for (auto &b : res.block_lambdas)
    b.lambda = -b.lambda;
  res.residual = eigen_residual(a, res.lambda, res.eigenvector);
  return res;
}

EigenBounds lambda_min_bounds(const SymTensor &a) {
  if (!classify(a).essentially_nonpositive)
    throw std::invalid_argument(
        "lambda_min bounds need an essentially nonpositive tensor");
  const auto rows = row_stats(a);
  const auto diag = diag_stats(a);
  return {rows.min, std::min(rows.mean, diag.min)};
}

std::optional<HppEigenpair> has_hpp_eigenvalue(const SymTensor &a,
                                               const IterationConfig &cfg) {
  cfg.validate();
  if (!classify(a).nonnegative)
    throw std::invalid_argument("H++ test needs a nonnegative tensor");
  const auto runs = run_blocks(a, cfg);

  HppEigenpair out;
  double top = runs.front().result.lambda;
  for (const auto &r : runs)
    top = std::max(top, r.result.lambda);
  for (const auto &r : runs) {
    const double lam = r.result.lambda;
    out.block_lambdas.push_back({r.indices, lam});
    const double scale = std::max(std::abs(top), std::abs(lam));
    if (std::abs(lam - top) > kHppRelativeTolerance * scale)
      return std::nullopt;
  }

  Vec x(static_cast<std::size_t>(a.dim()), 0.0);
  for (const auto &r : runs)
    for (std::size_t j = 0; j < r.indices.size(); ++j)
      x[r.indices[j]] = r.result.eigenvector[j];
  out.lambda = top;
  out.eigenvector = normalize_knorm(x, a.order());
  out.residual = eigen_residual(a, top, out.eigenvector);
  return out;
}

} // namespace symcop
