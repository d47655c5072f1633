#include "symcop/generators.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "simplex_search.hpp"

namespace symcop {

namespace {

constexpr std::array<std::pair<std::string_view, GeneratorKind>, 10> kKinds{{
    {"identity", GeneratorKind::Identity},
    {"allones", GeneratorKind::AllOnes},
    {"diagonal", GeneratorKind::Diagonal},
    {"random_nonneg", GeneratorKind::RandomNonneg},
    {"random_ess_nonpos", GeneratorKind::RandomEssNonpos},
    {"cp", GeneratorKind::Cp},
    {"hypergraph_adjacency", GeneratorKind::HypergraphAdjacency},
    {"hypergraph_laplacian", GeneratorKind::HypergraphLaplacian},
    {"hypergraph_signless_laplacian",
     GeneratorKind::HypergraphSignlessLaplacian},
    {"paper_sec6", GeneratorKind::PaperSec6},
}};

std::vector<int> degrees(int order, int n,
                         const std::vector<std::vector<int>> &edges) {
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  std::set<std::vector<int>> distinct;
  for (const auto &edge : edges) {
    if (static_cast<int>(edge.size()) != order)
      throw std::invalid_argument("hyperedge of size " +
                                  std::to_string(edge.size()) +
                                  " in an order-" + std::to_string(order) +
                                  " hypergraph");
    std::vector<int> sorted = edge;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("hyperedge repeats a vertex");
    if (sorted.front() < 0 || sorted.back() >= n)
      throw std::invalid_argument("hyperedge vertex out of range");
    if (!distinct.insert(sorted).second)
      throw std::invalid_argument("duplicate hyperedge");
    for (int v : sorted)
      ++deg[v];
  }
  return deg;
}

double factorial(int m) {
  double f = 1.0;
  for (int i = 2; i <= m; ++i)
    f *= i;
  return f;
}

SymTensor degree_plus_adjacency(int order, int n,
                                const std::vector<std::vector<int>> &edges,
                                double adjacency_sign) {
  const auto deg = degrees(order, n, edges);
  const double w = adjacency_sign / factorial(order - 1);
  SymTensorBuilder b(order, n);
  for (const auto &edge : edges)
    b.set(edge, w);
  for (int i = 0; i < n; ++i)
    if (deg[i] != 0)
      b.set(MultiIndex(static_cast<std::size_t>(order), i), deg[i]);
  return b.build();
}

} // namespace

std::optional<GeneratorKind> parse_generator_kind(std::string_view name) {
  for (const auto &[key, kind] : kKinds)
    if (key == name)
      return kind;
  return std::nullopt;
}

std::string_view to_string(GeneratorKind kind) {
  for (const auto &[key, k] : kKinds)
    if (k == kind)
      return key;
  return "unknown";
}

SymTensor zero_diagonal_copositive_example() {
  return SymTensorBuilder(3, 3)
      .set({0, 0, 2}, 2.0)
      .set({1, 1, 2}, 2.0)
      .set({0, 1, 2}, -1.0)
      .build();
}

SymTensor hypergraph_adjacency(int order, int n,
                               const std::vector<std::vector<int>> &edges) {
  degrees(order, n, edges);
  const double w = 1.0 / factorial(order - 1);
  SymTensorBuilder b(order, n);
  for (const auto &edge : edges)
    b.set(edge, w);
  return b.build();
}

SymTensor hypergraph_laplacian(int order, int n,
                               const std::vector<std::vector<int>> &edges) {
  return degree_plus_adjacency(order, n, edges, -1.0);
}

SymTensor hypergraph_signless_laplacian(
    int order, int n, const std::vector<std::vector<int>> &edges) {
  return degree_plus_adjacency(order, n, edges, +1.0);
}

SymTensor generate(GeneratorKind kind, const GeneratorParams &p,
                   std::uint64_t seed) {
  if (p.order < 2)
    throw std::invalid_argument("order must be >= 2");
  std::mt19937_64 rng(seed);
  auto uniform = [&] { return detail::unit_interval(rng()); };

  switch (kind) {
  case GeneratorKind::Identity:
    return identity_tensor(p.order, p.dim);
  case GeneratorKind::AllOnes:
    return all_ones_tensor(p.order, p.dim);
  case GeneratorKind::Diagonal:
    if (p.diagonal.empty())
      throw std::invalid_argument("diagonal generator needs diagonal values");
    return diagonal_tensor(p.order, p.diagonal);
  case GeneratorKind::RandomNonneg:
  case GeneratorKind::RandomEssNonpos: {
    if (p.dim < 1)
      throw std::invalid_argument("dimension must be >= 1");
    if (!(p.density >= 0.0 && p.density <= 1.0))
      throw std::invalid_argument("density must lie in [0, 1]");
    const bool ess_nonpos = kind == GeneratorKind::RandomEssNonpos;
    SymTensorBuilder b(p.order, p.dim);
    for_each_canonical_index(p.order, p.dim, [&](const MultiIndex &idx) {
      const bool diagonal = idx.front() == idx.back();
      // Two draws per orbit keep the stream aligned regardless of density.
      const double keep = uniform();
      const double u = uniform();
      if (keep >= p.density)
        return;
      if (!ess_nonpos)
        b.set(idx, 1.0 - u); // (0, 1]
      else if (diagonal)
        b.set(idx, 2.0 * u - 1.0);
      else
        b.set(idx, u - 1.0); // [-1, 0)
    });
    return b.build();
  }
  case GeneratorKind::Cp:
    return cp_sum(p.factors, p.order);
  case GeneratorKind::HypergraphAdjacency:
    return hypergraph_adjacency(p.order, p.dim, p.edges);
  case GeneratorKind::HypergraphLaplacian:
    return hypergraph_laplacian(p.order, p.dim, p.edges);
  case GeneratorKind::HypergraphSignlessLaplacian:
    return hypergraph_signless_laplacian(p.order, p.dim, p.edges);
  case GeneratorKind::PaperSec6:
    return zero_diagonal_copositive_example();
  }
  throw std::invalid_argument("unknown generator kind");
}

std::vector<std::vector<int>> random_regular_hyperedges(int order, int n,
                                                        int degree,
                                                        std::uint64_t seed) {
  if (order < 2 || n < order || degree < 0)
    throw std::invalid_argument("invalid regular hypergraph parameters");
  if ((n * degree) % order != 0)
    throw std::invalid_argument("n * degree must be divisible by the order");
  std::mt19937_64 rng(seed);
  std::vector<int> stubs;
  for (int v = 0; v < n; ++v)
    for (int d = 0; d < degree; ++d)
      stubs.push_back(v);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    for (std::size_t i = stubs.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(rng() % i);
      std::swap(stubs[i - 1], stubs[j]);
    }
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> edges;
    bool ok = true;
    for (std::size_t s = 0; ok && s < stubs.size(); s += order) {
      std::vector<int> edge(stubs.begin() + s, stubs.begin() + s + order);
      std::sort(edge.begin(), edge.end());
      ok = std::adjacent_find(edge.begin(), edge.end()) == edge.end() &&
           seen.insert(edge).second;
      edges.push_back(std::move(edge));
    }
    if (ok)
      return edges;
  }
  throw std::invalid_argument("no simple regular hypergraph found");
}

} // namespace symcop
