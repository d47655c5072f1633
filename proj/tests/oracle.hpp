#pragma once

// Brute-force reference computations over dense n^k arrays. Nothing here
// touches the canonical-orbit arithmetic of the library; tensors enter either
// as explicit position lists or through SymTensor::at lookups.

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "symcop/sym_tensor.hpp"

namespace oracle {

using symcop::Vec;

struct DenseTensor {
  int order = 0;
  int dim = 0;
  std::vector<double> data; // row-major, first index slowest

  DenseTensor(int k, int n)
      : order(k), dim(n),
        data(static_cast<std::size_t>(std::pow(n, k) + 0.5), 0.0) {}

  std::size_t offset(const std::vector<int> &idx) const {
    std::size_t off = 0;
    for (int i : idx)
      off = off * static_cast<std::size_t>(dim) + static_cast<std::size_t>(i);
    return off;
  }
  double &operator()(const std::vector<int> &idx) { return data[offset(idx)]; }
  double operator()(const std::vector<int> &idx) const {
    return data[offset(idx)];
  }
};

/// Visits every tuple in {0..n-1}^k in odometer order.
inline void for_each_tuple(int k, int n,
                           const std::function<void(const std::vector<int> &)> &fn) {
  std::vector<int> idx(static_cast<std::size_t>(k), 0);
  while (true) {
    fn(idx);
    int p = k - 1;
    while (p >= 0 && ++idx[p] == n) {
      idx[p] = 0;
      --p;
    }
    if (p < 0)
      return;
  }
}

/// Writes `value` at every permutation of each listed index.
inline DenseTensor
dense_from_orbits(int k, int n,
                  const std::vector<std::pair<std::vector<int>, double>> &orbits) {
  DenseTensor t(k, n);
  for (auto [idx, v] : orbits) {
    std::sort(idx.begin(), idx.end());
    do {
      t(idx) = v;
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
  return t;
}

inline DenseTensor densify(const symcop::SymTensor &a) {
  DenseTensor t(a.order(), a.dim());
  for_each_tuple(a.order(), a.dim(),
                 [&](const std::vector<int> &idx) { t(idx) = a.at(idx); });
  return t;
}

inline double eval(const DenseTensor &t, const Vec &x) {
  double s = 0.0;
  for_each_tuple(t.order, t.dim, [&](const std::vector<int> &idx) {
    double p = t(idx);
    for (int i : idx)
      p *= x[i];
    s += p;
  });
  return s;
}

inline Vec apply(const DenseTensor &t, const Vec &x) {
  Vec y(static_cast<std::size_t>(t.dim), 0.0);
  for_each_tuple(t.order, t.dim, [&](const std::vector<int> &idx) {
    double p = t(idx);
    for (std::size_t j = 1; j < idx.size(); ++j)
      p *= x[idx[j]];
    y[idx[0]] += p;
  });
  return y;
}

inline double inner(const DenseTensor &a, const DenseTensor &b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i)
    s += a.data[i] * b.data[i];
  return s;
}

inline Vec row_sums(const DenseTensor &t) {
  return oracle::apply(t, Vec(static_cast<std::size_t>(t.dim), 1.0));
}

/// All compositions of `total` into n nonnegative parts, by recursion.
inline std::vector<std::vector<int>> compositions(int n, int total) {
  if (n == 1)
    return {{total}};
  std::vector<std::vector<int>> out;
  for (int first = total; first >= 0; --first)
    for (auto rest : compositions(n - 1, total - first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

/// Composition points rescaled to unit k-norm.
inline std::vector<Vec> grid_points(int n, int k, int resolution) {
  std::vector<Vec> pts;
  for (const auto &m : compositions(n, resolution)) {
    double s = 0.0;
    for (int v : m)
      s += std::pow(v, k);
    const double scale = 1.0 / std::pow(s, 1.0 / k);
    Vec x(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
      x[i] = m[i] * scale;
    pts.push_back(std::move(x));
  }
  return pts;
}

inline double grid_min(const DenseTensor &t, int resolution) {
  double best = INFINITY;
  for (const auto &x : grid_points(t.dim, t.order, resolution))
    best = std::min(best, eval(t, x));
  return best;
}

/// Random point of the nonnegative orthant with components in [0, 1).
inline Vec random_nonneg_vec(std::mt19937_64 &rng, int n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Vec x(static_cast<std::size_t>(n));
  for (auto &v : x)
    v = u(rng);
  return x;
}

inline double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

} // namespace oracle
