#include "symcop/sym_tensor.hpp"

#include <algorithm>
#include <cmath>

namespace symcop {

namespace {

void require_dim(const SymTensor &a, std::span<const double> x) {
  if (static_cast<int>(x.size()) != a.dim())
    throw ShapeError("vector of length " + std::to_string(x.size()) +
                     " applied to tensor of dimension " +
                     std::to_string(a.dim()));
}

void require_same_shape(const SymTensor &a, const SymTensor &b) {
  if (!a.same_shape(b))
    throw ShapeError("tensor shapes differ: (" + std::to_string(a.order()) +
                     "," + std::to_string(a.dim()) + ") vs (" +
                     std::to_string(b.order()) + "," +
                     std::to_string(b.dim()) + ")");
}

double product(const MultiIndex &idx, std::span<const double> x) {
  double p = 1.0;
  for (int i : idx)
    p *= x[i];
  return p;
}

// Merge-walks the canonical entries of two same-shape tensors.
template <class Fn>
void merge_entries(const SymTensor &a, const SymTensor &b, Fn &&fn) {
  const auto &ea = a.entries();
  const auto &eb = b.entries();
  std::size_t i = 0, j = 0;
  while (i < ea.size() || j < eb.size()) {
    if (j == eb.size() || (i < ea.size() && ea[i].index < eb[j].index)) {
      fn(ea[i].index, ea[i].value, 0.0, ea[i].multiplicity);
      ++i;
    } else if (i == ea.size() || eb[j].index < ea[i].index) {
      fn(eb[j].index, 0.0, eb[j].value, eb[j].multiplicity);
      ++j;
    } else {
      fn(ea[i].index, ea[i].value, eb[j].value, ea[i].multiplicity);
      ++i;
      ++j;
    }
  }
}

} // namespace

MultiIndex canonicalize(MultiIndex index) {
  std::sort(index.begin(), index.end());
  return index;
}

double permutation_count(const MultiIndex &canonical) {
  // Multinomial k! / prod(c_j!) built as a product of binomials so that every
  // intermediate stays an exact integer in binary64 for moderate k.
  double count = 1.0;
  int placed = 0;
  std::size_t p = 0;
  while (p < canonical.size()) {
    std::size_t q = p;
    while (q < canonical.size() && canonical[q] == canonical[p])
      ++q;
    const int run = static_cast<int>(q - p);
    for (int j = 1; j <= run; ++j)
      count = count * (placed + j) / j;
    placed += run;
    p = q;
  }
  return count;
}

// ---------------------------------------------------------------------------

SymTensor::SymTensor(int order, int dim) : order_(order), dim_(dim) {
  if (order < 2)
    throw std::invalid_argument("tensor order must be >= 2");
  if (dim < 1)
    throw std::invalid_argument("tensor dimension must be >= 1");
}

double SymTensor::nonzero_positions() const {
  double total = 0.0;
  for (const auto &e : entries_)
    total += e.multiplicity;
  return total;
}

double SymTensor::at(const MultiIndex &index) const {
  if (static_cast<int>(index.size()) != order_)
    throw ShapeError("multi-index length differs from tensor order");
  for (int i : index)
    if (i < 0 || i >= dim_)
      throw std::out_of_range("multi-index component out of range");
  const MultiIndex key = canonicalize(index);
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), key,
      [](const Entry &e, const MultiIndex &k) { return e.index < k; });
  if (it != entries_.end() && it->index == key)
    return it->value;
  return 0.0;
}

double SymTensor::diagonal(int i) const {
  return at(MultiIndex(static_cast<std::size_t>(order_), i));
}

bool operator==(const SymTensor &a, const SymTensor &b) {
  if (!a.same_shape(b) || a.entries_.size() != b.entries_.size())
    return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i)
    if (a.entries_[i].index != b.entries_[i].index ||
        a.entries_[i].value != b.entries_[i].value)
      return false;
  return true;
}

SymTensorBuilder::SymTensorBuilder(int order, int dim)
    : order_(order), dim_(dim) {
  if (order < 2)
    throw std::invalid_argument("tensor order must be >= 2");
  if (dim < 1)
    throw std::invalid_argument("tensor dimension must be >= 1");
}

void SymTensorBuilder::check(const MultiIndex &index) const {
  if (static_cast<int>(index.size()) != order_)
    throw ShapeError("multi-index has " + std::to_string(index.size()) +
                     " components, tensor order is " + std::to_string(order_));
  for (int i : index)
    if (i < 0 || i >= dim_)
      throw std::out_of_range("multi-index component " + std::to_string(i) +
                              " outside 0.." + std::to_string(dim_ - 1));
}

SymTensorBuilder &SymTensorBuilder::set(const MultiIndex &index, double value) {
  check(index);
  values_[canonicalize(index)] = value;
  return *this;
}

SymTensorBuilder &SymTensorBuilder::add(const MultiIndex &index, double value) {
  check(index);
  values_[canonicalize(index)] += value;
  return *this;
}

SymTensorBuilder &SymTensorBuilder::mark_symmetrized(bool flag) {
  symmetrized_ = flag;
  return *this;
}

SymTensor SymTensorBuilder::build() const {
  SymTensor t(order_, dim_);
  t.symmetrized_ = symmetrized_;
  t.entries_.reserve(values_.size());
  for (const auto &[idx, v] : values_) {
    if (v == 0.0)
      continue;
    t.entries_.push_back(Entry{idx, v, permutation_count(idx)});
  }
  return t;
}

// ---------------------------------------------------------------------------

double eval_form(const SymTensor &a, std::span<const double> x) {
  require_dim(a, x);
  double sum = 0.0;
  for (const auto &e : a.entries())
    sum += e.value * e.multiplicity * product(e.index, x);
  return sum;
}

Vec apply(const SymTensor &a, std::span<const double> x) {
  require_dim(a, x);
  const int k = a.order();
  Vec y(static_cast<std::size_t>(a.dim()), 0.0);
  for (const auto &e : a.entries()) {
    const auto &idx = e.index;
    std::size_t p = 0;
    while (p < idx.size()) {
      std::size_t q = p;
      while (q < idx.size() && idx[q] == idx[p])
        ++q;
      // Tuples with idx[p] in the first slot: the remaining k-1 slots range
      // over arrangements of idx minus one copy of idx[p].
      const double count = e.multiplicity * static_cast<double>(q - p) / k;
      double rest = 1.0;
      for (std::size_t j = 0; j < idx.size(); ++j)
        if (j != p)
          rest *= x[idx[j]];
      y[idx[p]] += e.value * count * rest;
      p = q;
    }
  }
  return y;
}

Vec power_vec(std::span<const double> x, int r) {
  if (r < 1)
    throw std::invalid_argument("power_vec requires r >= 1");
  Vec out(x.begin(), x.end());
  for (auto &v : out) {
    double p = 1.0;
    for (int j = 0; j < r; ++j)
      p *= v;
    v = p;
  }
  return out;
}

double knorm_pow(std::span<const double> x, int k) {
  double s = 0.0;
  for (double v : x)
    s += std::pow(std::abs(v), k);
  return s;
}

Vec normalize_knorm(std::span<const double> x, int k) {
  const double s = knorm_pow(x, k);
  if (!(s > 0.0))
    throw std::invalid_argument("cannot normalize the zero vector");
  const double inv = 1.0 / std::pow(s, 1.0 / k);
  Vec out(x.begin(), x.end());
  for (auto &v : out)
    v *= inv;
  return out;
}

Vec unit_vector(int n, int i) {
  if (i < 0 || i >= n)
    throw std::out_of_range("unit vector index out of range");
  Vec e(static_cast<std::size_t>(n), 0.0);
  e[i] = 1.0;
  return e;
}

// ---------------------------------------------------------------------------

double row_sum(const SymTensor &a, int i) {
  if (i < 0 || i >= a.dim())
    throw std::out_of_range("row index out of range");
  return row_sums(a)[i];
}

Vec row_sums(const SymTensor &a) {
  const Vec ones(static_cast<std::size_t>(a.dim()), 1.0);
  return symcop::apply(a, ones);
}

namespace {
RowStats stats_of(const Vec &v) {
  RowStats s;
  s.max = *std::max_element(v.begin(), v.end());
  s.min = *std::min_element(v.begin(), v.end());
  double total = 0.0;
  for (double x : v)
    total += x;
  s.mean = total / static_cast<double>(v.size());
  return s;
}
} // namespace

RowStats row_stats(const SymTensor &a) { return stats_of(row_sums(a)); }

RowStats diag_stats(const SymTensor &a) {
  Vec d(static_cast<std::size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i)
    d[i] = a.diagonal(i);
  return stats_of(d);
}

// ---------------------------------------------------------------------------

double inner_product(const SymTensor &a, const SymTensor &b) {
  require_same_shape(a, b);
  double sum = 0.0;
  merge_entries(a, b, [&](const MultiIndex &, double va, double vb, double m) {
    sum += va * vb * m;
  });
  return sum;
}

bool compare_leq(const SymTensor &b, const SymTensor &a) {
  require_same_shape(a, b);
  bool ok = true;
  merge_entries(b, a, [&](const MultiIndex &, double vb, double va, double) {
    if (vb > va)
      ok = false;
  });
  return ok;
}

SymTensor add(const SymTensor &a, const SymTensor &b) {
  require_same_shape(a, b);
  SymTensorBuilder out(a.order(), a.dim());
  merge_entries(a, b, [&](const MultiIndex &idx, double va, double vb, double) {
    out.set(idx, va + vb);
  });
  return out.build();
}

SymTensor scale(const SymTensor &a, double alpha) {
  SymTensorBuilder out(a.order(), a.dim());
  for (const auto &e : a.entries())
    out.set(e.index, alpha * e.value);
  return out.build();
}

SymTensor negate(const SymTensor &a) { return scale(a, -1.0); }

SymTensor add_identity(const SymTensor &a, double c) {
  SymTensorBuilder out(a.order(), a.dim());
  for (const auto &e : a.entries())
    out.set(e.index, e.value);
  for (int i = 0; i < a.dim(); ++i)
    out.add(MultiIndex(static_cast<std::size_t>(a.order()), i), c);
  return out.build();
}

double max_abs_entry(const SymTensor &a) {
  double m = 0.0;
  for (const auto &e : a.entries())
    m = std::max(m, std::abs(e.value));
  return m;
}

SymTensor identity_tensor(int order, int dim) {
  SymTensorBuilder b(order, dim);
  for (int i = 0; i < dim; ++i)
    b.set(MultiIndex(static_cast<std::size_t>(order), i), 1.0);
  return b.build();
}

SymTensor all_ones_tensor(int order, int dim) {
  SymTensorBuilder b(order, dim);
  for_each_canonical_index(order, dim,
                           [&](const MultiIndex &idx) { b.set(idx, 1.0); });
  return b.build();
}

SymTensor diagonal_tensor(int order, std::span<const double> diag) {
  SymTensorBuilder b(order, static_cast<int>(diag.size()));
  for (std::size_t i = 0; i < diag.size(); ++i)
    b.set(MultiIndex(static_cast<std::size_t>(order), static_cast<int>(i)),
          diag[i]);
  return b.build();
}

SubTensor subtensor(const SymTensor &a, std::span<const int> indices) {
  if (indices.empty())
    throw std::invalid_argument("subtensor index set is empty");
  std::vector<int> local(static_cast<std::size_t>(a.dim()), -1);
  for (std::size_t j = 0; j < indices.size(); ++j) {
    const int i = indices[j];
    if (i < 0 || i >= a.dim())
      throw std::out_of_range("subtensor index out of range");
    if (local[i] >= 0)
      throw std::invalid_argument("subtensor index set has duplicates");
    local[i] = static_cast<int>(j);
  }
  SymTensorBuilder b(a.order(), static_cast<int>(indices.size()));
  for (const auto &e : a.entries()) {
    MultiIndex mapped;
    mapped.reserve(e.index.size());
    bool inside = true;
    for (int i : e.index) {
      if (local[i] < 0) {
        inside = false;
        break;
      }
      mapped.push_back(local[i]);
    }
    if (inside)
      b.set(mapped, e.value);
  }
  return SubTensor{b.build(), std::vector<int>(indices.begin(), indices.end())};
}

SymTensor rank_one_cp(std::span<const double> y, int order) {
  return cp_sum({Vec(y.begin(), y.end())}, order);
}

SymTensor cp_sum(const std::vector<Vec> &factors, int order) {
  if (factors.empty())
    throw std::invalid_argument("cp_sum needs at least one factor");
  const int n = static_cast<int>(factors.front().size());
  for (const auto &f : factors) {
    if (static_cast<int>(f.size()) != n)
      throw ShapeError("cp factors have different dimensions");
    bool nonzero = false;
    for (double v : f) {
      if (v < 0.0 || std::isnan(v))
        throw std::invalid_argument("cp factor has a negative component");
      nonzero = nonzero || v > 0.0;
    }
    if (!nonzero)
      throw std::invalid_argument("cp factor is the zero vector");
  }
  SymTensorBuilder b(order, n);
  for (const auto &f : factors) {
    std::vector<int> support;
    for (int i = 0; i < n; ++i)
      if (f[i] > 0.0)
        support.push_back(i);
    const int m = static_cast<int>(support.size());
    for_each_canonical_index(order, m, [&](const MultiIndex &local) {
      MultiIndex idx(local.size());
      double p = 1.0;
      for (std::size_t j = 0; j < local.size(); ++j) {
        idx[j] = support[local[j]];
        p *= f[idx[j]];
      }
      b.add(idx, p);
    });
  }
  return b.build();
}

} // namespace symcop
