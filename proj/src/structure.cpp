#include "symcop/structure.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace symcop {

namespace {

bool is_diagonal(const MultiIndex &idx) {
  return idx.front() == idx.back(); // canonical, so sorted
}

class DisjointSets {
public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b)
      parent_[std::max(a, b)] = std::min(a, b);
  }

private:
  std::vector<int> parent_;
};

} // namespace

StructureClass classify(const SymTensor &a) {
  StructureClass c;
  c.nonnegative = true;
  c.essentially_nonnegative = true;
  c.essentially_nonpositive = true;
  for (const auto &e : a.entries()) {
    if (e.value < 0.0)
      c.nonnegative = false;
    if (is_diagonal(e.index))
      continue;
    if (e.value < 0.0)
      c.essentially_nonnegative = false;
    if (e.value > 0.0)
      c.essentially_nonpositive = false;
  }
  return c;
}

EssentialDecomposition essential_decomposition(const SymTensor &a) {
  if (!classify(a).essentially_nonnegative)
    throw std::invalid_argument(
        "essential decomposition needs an essentially nonnegative tensor");
  const double c = std::min(0.0, diag_stats(a).min);
  if (c == 0.0)
    return {a, 0.0};
  return {add_identity(a, -c), c};
}

RepresentationGraph representation_graph(const SymTensor &a) {
  std::vector<std::pair<int, int>> edges;
  for (const auto &e : a.entries()) {
    const auto &idx = e.index;
    for (std::size_t p = 0; p < idx.size(); ++p)
      for (std::size_t q = p + 1; q < idx.size(); ++q)
        if (idx[p] != idx[q])
          edges.emplace_back(idx[p], idx[q]);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return {a.dim(), std::move(edges)};
}

Partition weakly_irreducible_partition(const SymTensor &a) {
  DisjointSets sets(a.dim());
  for (const auto &e : a.entries())
    for (int i : e.index)
      sets.unite(e.index.front(), i);
  // Roots are the smallest member of each component, so visiting vertices in
  // order yields blocks already sorted by smallest member.
  Partition part;
  std::vector<int> slot(static_cast<std::size_t>(a.dim()), -1);
  for (int v = 0; v < a.dim(); ++v) {
    const int root = sets.find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(part.blocks.size());
      part.blocks.emplace_back();
    }
    part.blocks[slot[root]].push_back(v);
  }
  return part;
}

bool is_weakly_irreducible(const SymTensor &a) {
  return weakly_irreducible_partition(a).blocks.size() == 1;
}

bool is_reducing_set(const SymTensor &a, const std::vector<int> &set) {
  std::vector<char> in(static_cast<std::size_t>(a.dim()), 0);
  for (int i : set) {
    if (i < 0 || i >= a.dim())
      throw std::out_of_range("reducing-set index out of range");
    in[i] = 1;
  }
  const auto size = std::count(in.begin(), in.end(), 1);
  if (size == 0 || size == a.dim())
    return false;
  // Some arrangement of an orbit has i_1 in I and i_2..i_k outside I exactly
  // when the orbit has one position inside I.
  for (const auto &e : a.entries()) {
    int inside = 0;
    for (int i : e.index)
      inside += in[i];
    if (inside == 1)
      return false;
  }
  return true;
}

std::optional<std::vector<int>> is_reducible(const SymTensor &a) {
  const int n = a.dim();
  if (n < 2)
    return std::nullopt;
  auto part = weakly_irreducible_partition(a);
  if (part.blocks.size() > 1)
    return part.blocks.front();
  if (n > kMaxReducibilityEnumerationDim)
    throw std::domain_error("reducibility check on a weakly irreducible "
                            "tensor is limited to dimension <= " +
                            std::to_string(kMaxReducibilityEnumerationDim));
  const unsigned full = (1u << n) - 1u;
  std::vector<int> set;
  for (unsigned mask = 1; mask < full; ++mask) {
    set.clear();
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i))
        set.push_back(i);
    if (is_reducing_set(a, set))
      return set;
  }
  return std::nullopt;
}

} // namespace symcop
