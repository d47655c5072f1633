#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "symcop/sym_tensor.hpp"

namespace symcop {

enum class GeneratorKind {
  Identity,
  AllOnes,
  Diagonal,
  RandomNonneg,
  RandomEssNonpos,
  Cp,
  HypergraphAdjacency,
  HypergraphLaplacian,
  HypergraphSignlessLaplacian,
  PaperSec6,
};

std::optional<GeneratorKind> parse_generator_kind(std::string_view name);
std::string_view to_string(GeneratorKind kind);

struct GeneratorParams {
  int order = 3;
  int dim = 3;
  Vec diagonal;                        // Diagonal
  double density = 1.0;                // random kinds: chance an orbit is set
  std::vector<Vec> factors;            // Cp
  std::vector<std::vector<int>> edges; // hypergraph kinds, 0-based k-subsets
};

/// Deterministic in (kind, params, seed). Throws std::invalid_argument on
/// inconsistent parameters.
SymTensor generate(GeneratorKind kind, const GeneratorParams &params,
                   std::uint64_t seed = 0);

/// k = n = 3 tensor with zero diagonal, 2 on the orbits of (1,1,3) and
/// (2,2,3), -1 on the orbit of (1,2,3): A x^3 = 6 (x1^2 + x2^2 - x1 x2) x3.
/// Copositive, yet fails diagonal dominance.
SymTensor zero_diagonal_copositive_example();

/// Adjacency tensor: 1/(k-1)! at every permutation of each edge.
SymTensor hypergraph_adjacency(int order, int n,
                               const std::vector<std::vector<int>> &edges);
/// D - A with D the diagonal tensor of vertex degrees.
SymTensor hypergraph_laplacian(int order, int n,
                               const std::vector<std::vector<int>> &edges);
/// D + A.
SymTensor hypergraph_signless_laplacian(
    int order, int n, const std::vector<std::vector<int>> &edges);

/// Edge set of a random simple `degree`-regular `order`-uniform hypergraph on
/// n vertices (configuration model with rejection). Throws
/// std::invalid_argument when n * degree is not divisible by the order or no
/// such hypergraph is found.
std::vector<std::vector<int>> random_regular_hyperedges(int order, int n,
                                                        int degree,
                                                        std::uint64_t seed);

} // namespace symcop
