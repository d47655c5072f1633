#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace symcop {

/// Dense real vector. Components are 0-based; the tensor file layer is the
/// only place that speaks 1-based indices.
using Vec = std::vector<double>;

/// Index tuple (i_1, ..., i_k), 0-based. Canonical form is non-decreasing.
using MultiIndex = std::vector<int>;

/// Thrown when operands disagree on order or dimension.
class ShapeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Sorts a copy of `index` into canonical (non-decreasing) order.
MultiIndex canonicalize(MultiIndex index);

/// Number of distinct permutations of a canonical multi-index, k! / prod(c_j!).
double permutation_count(const MultiIndex &canonical);

/// One stored orbit of a symmetric tensor.
struct Entry {
  MultiIndex index;    // canonical
  double value = 0.0;  // value at every permutation of `index`
  double multiplicity = 1.0;
};

/// Real symmetric tensor of order k >= 2 and dimension n >= 1.
///
/// Storage keeps one value per permutation orbit, keyed by the sorted index.
/// Entries equal to exactly 0 are never stored. Instances are immutable; use
/// SymTensorBuilder to make one.
class SymTensor {
public:
  SymTensor(int order, int dim);

  int order() const { return order_; }
  int dim() const { return dim_; }

  /// Canonical entries in lexicographic index order.
  const std::vector<Entry> &entries() const { return entries_; }
  std::size_t stored_entries() const { return entries_.size(); }
  /// Number of nonzero positions among the n^k index tuples.
  double nonzero_positions() const;

  /// Value at any (not necessarily sorted) index tuple.
  double at(const MultiIndex &index) const;
  double diagonal(int i) const;

  /// True when built from non-symmetric input by orbit averaging.
  bool symmetrized() const { return symmetrized_; }

  bool same_shape(const SymTensor &other) const {
    return order_ == other.order_ && dim_ == other.dim_;
  }

  friend bool operator==(const SymTensor &a, const SymTensor &b);

private:
  friend class SymTensorBuilder;

  int order_;
  int dim_;
  bool symmetrized_ = false;
  std::vector<Entry> entries_;
};

/// Accumulates orbit values, then freezes them into a SymTensor.
class SymTensorBuilder {
public:
  SymTensorBuilder(int order, int dim);

  /// Sets the orbit of `index` to `value` (overwrites).
  SymTensorBuilder &set(const MultiIndex &index, double value);
  /// Adds `value` to the orbit of `index`.
  SymTensorBuilder &add(const MultiIndex &index, double value);
  SymTensorBuilder &mark_symmetrized(bool flag = true);

  int order() const { return order_; }
  int dim() const { return dim_; }

  SymTensor build() const;

private:
  void check(const MultiIndex &index) const;

  int order_;
  int dim_;
  bool symmetrized_ = false;
  std::map<MultiIndex, double> values_;
};

// ---------------------------------------------------------------------------
// Multilinear evaluations

/// A x^k.
double eval_form(const SymTensor &a, std::span<const double> x);

/// The vector A x^{k-1}. Satisfies x . apply(A, x) == eval_form(A, x).
Vec apply(const SymTensor &a, std::span<const double> x);

/// Componentwise power x^{[r]}, r >= 1.
Vec power_vec(std::span<const double> x, int r);

/// Sum of x_i^k, the k-norm raised to the k.
double knorm_pow(std::span<const double> x, int k);

/// Rescales a nonzero vector to unit k-norm.
Vec normalize_knorm(std::span<const double> x, int k);

/// e^{(i)} in dimension n.
Vec unit_vector(int n, int i);

// ---------------------------------------------------------------------------
// Row and diagonal statistics

struct RowStats {
  double max = 0.0;
  double min = 0.0;
  double mean = 0.0;
};

/// R_i(A): sum of all entries whose first index is i.
double row_sum(const SymTensor &a, int i);
Vec row_sums(const SymTensor &a);
RowStats row_stats(const SymTensor &a);
RowStats diag_stats(const SymTensor &a);

// ---------------------------------------------------------------------------
// Algebra

/// <A, B> = sum over all n^k tuples of a * b.
double inner_product(const SymTensor &a, const SymTensor &b);

/// True iff every entry of b is <= the matching entry of a.
bool compare_leq(const SymTensor &b, const SymTensor &a);

SymTensor add(const SymTensor &a, const SymTensor &b);
SymTensor scale(const SymTensor &a, double alpha);
SymTensor negate(const SymTensor &a);
/// A + c I.
SymTensor add_identity(const SymTensor &a, double c);
/// Max |a_{i_1...i_k}|, 0 for the zero tensor.
double max_abs_entry(const SymTensor &a);

SymTensor identity_tensor(int order, int dim);
SymTensor all_ones_tensor(int order, int dim);
SymTensor diagonal_tensor(int order, std::span<const double> diag);

/// Restriction A(I) reindexed to 0..|I|-1. index_map[j] is the original index.
struct SubTensor {
  SymTensor tensor;
  std::vector<int> index_map;
};

/// `indices` must be nonempty, in range, and free of duplicates.
SubTensor subtensor(const SymTensor &a, std::span<const int> indices);

/// The rank-one completely positive tensor y^k.
SymTensor rank_one_cp(std::span<const double> y, int order);
/// Sum of (y^{(i)})^k over the factors.
SymTensor cp_sum(const std::vector<Vec> &factors, int order);

/// Calls `fn(const MultiIndex&)` for every canonical index of (order, dim).
template <class Fn> void for_each_canonical_index(int order, int dim, Fn &&fn) {
  MultiIndex idx(static_cast<std::size_t>(order), 0);
  while (true) {
    fn(static_cast<const MultiIndex &>(idx));
    int pos = order - 1;
    while (pos >= 0 && idx[pos] == dim - 1)
      --pos;
    if (pos < 0)
      return;
    const int next = idx[pos] + 1;
    for (int j = pos; j < order; ++j)
      idx[j] = next;
  }
}

} // namespace symcop
