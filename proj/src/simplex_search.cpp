#include "simplex_search.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace symcop::detail {

namespace {

// Bound on |(A x^{k-1})_i| for x in the unit box; makes step sizes
// independent of the tensor's scale.
double gradient_scale(const SymTensor &a) {
  Vec abs_rows(static_cast<std::size_t>(a.dim()), 0.0);
  const int k = a.order();
  for (const auto &e : a.entries()) {
    const auto &idx = e.index;
    std::size_t p = 0;
    while (p < idx.size()) {
      std::size_t q = p;
      while (q < idx.size() && idx[q] == idx[p])
        ++q;
      abs_rows[idx[p]] +=
          std::abs(e.value) * e.multiplicity * static_cast<double>(q - p) / k;
      p = q;
    }
  }
  const double s = *std::max_element(abs_rows.begin(), abs_rows.end());
  return s > 0.0 ? s : 1.0;
}

struct LocalResult {
  double value;
  Vec point;
  long iterations;
};

// Projected ascent of F(x) = s * A x^k / sum x_i^k. On the sphere its
// gradient is proportional to A x^{k-1} - (A x^k) x^{[k-1]}.
LocalResult ascend(const SymTensor &a, int sign, Vec x, double scale,
                   int max_iterations) {
  const int k = a.order();
  double f = sign * eval_form(a, x);
  long it = 0;
  int stalls = 0;
  Vec cand(x.size());
  for (; it < max_iterations; ++it) {
    const Vec ax = symcop::apply(a, x);
    Vec dir(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      dir[i] = (sign * ax[i] - f * std::pow(x[i], k - 1)) / scale;

    bool improved = false;
    double fc = f;
    for (double t = 1.0; t > 1e-14; t *= 0.5) {
      double mass = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        cand[i] = std::max(0.0, x[i] + t * dir[i]);
        mass += cand[i];
      }
      if (!(mass > 0.0))
        continue;
      cand = normalize_knorm(cand, k);
      fc = sign * eval_form(a, cand);
      if (fc > f) {
        improved = true;
        break;
      }
    }
    if (!improved)
      break;
    const double gain = fc - f;
    x.swap(cand);
    f = fc;
    if (gain <= 1e-15 * (1.0 + std::abs(f))) {
      if (++stalls >= 5)
        break;
    } else {
      stalls = 0;
    }
  }
  return {f, std::move(x), it};
}

} // namespace

SimplexSearchResult search_knorm_simplex(const SymTensor &a, int sign,
                                         const SimplexSearchOptions &opts) {
  const int n = a.dim();
  const int k = a.order();
  const double scale = gradient_scale(a);

  std::vector<Vec> starts;
  starts.push_back(normalize_knorm(Vec(static_cast<std::size_t>(n), 1.0), k));
  if (opts.vertex_starts)
    for (int i = 0; i < n; ++i)
      starts.push_back(unit_vector(n, i));
  std::mt19937_64 rng(opts.seed);
  for (int r = 1; r < opts.restarts; ++r) {
    Vec x(static_cast<std::size_t>(n));
    for (auto &v : x)
      v = 0.05 + unit_interval(rng());
    starts.push_back(normalize_knorm(x, k));
  }

  SimplexSearchResult best;
  bool have = false;
  for (auto &start : starts) {
    auto local = ascend(a, sign, std::move(start), scale, opts.max_iterations);
    best.iterations += local.iterations;
    if (!have || local.value > best.value) {
      best.value = local.value;
      best.point = std::move(local.point);
      have = true;
    }
  }
  best.value *= sign;
  return best;
}

} // namespace symcop::detail
