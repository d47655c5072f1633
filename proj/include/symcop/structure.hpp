#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "symcop/sym_tensor.hpp"

namespace symcop {

/// Sign structure of a tensor. Storage is always symmetric, so `symmetric`
/// is true for every SymTensor.
struct StructureClass {
  bool symmetric = true;
  bool nonnegative = false;
  bool essentially_nonnegative = false;
  bool essentially_nonpositive = false;
};

StructureClass classify(const SymTensor &a);

/// A = B + c I with B nonnegative and c = min(0, d_min(A)).
struct EssentialDecomposition {
  SymTensor nonnegative_part;
  double shift = 0.0;
};

/// Throws std::invalid_argument unless A is essentially nonnegative.
EssentialDecomposition essential_decomposition(const SymTensor &a);

/// Undirected co-occurrence graph on 0..n-1: {i, j} is an edge iff i != j
/// both appear in some stored entry. Diagonal entries contribute nothing.
struct RepresentationGraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges; // i < j, sorted, unique
};

RepresentationGraph representation_graph(const SymTensor &a);
bool is_weakly_irreducible(const SymTensor &a);

/// Disjoint blocks covering 0..n-1, each sorted, ordered by smallest member.
struct Partition {
  std::vector<std::vector<int>> blocks;
};

/// Connected components of the representation graph.
Partition weakly_irreducible_partition(const SymTensor &a);

/// Largest dimension for which the subset-enumeration reducibility check runs
/// on a connected representation graph.
inline constexpr int kMaxReducibilityEnumerationDim = 12;

/// Returns a reducing index set I if A is reducible: no nonzero entry has its
/// first index in I and all other indices outside I. A disconnected
/// representation graph yields its first component; otherwise subsets are
/// enumerated. Throws std::domain_error when the graph is connected and
/// n > kMaxReducibilityEnumerationDim.
std::optional<std::vector<int>> is_reducible(const SymTensor &a);

/// Brute-force definition check of a candidate reducing set.
bool is_reducing_set(const SymTensor &a, const std::vector<int> &set);

} // namespace symcop
