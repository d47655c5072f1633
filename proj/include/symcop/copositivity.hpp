#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "symcop/sym_tensor.hpp"

namespace symcop {

enum class Verdict {
  CopositiveCertified,
  StrictlyCopositiveCertified,
  NotCopositive,
  NumericallyCopositive,
  Inconclusive,
};

/// Which test settled the verdict.
enum class CertificateReason {
  DiagNecessary,
  DiagDominanceNonneg,
  DiagDominancePos,
  NonnegativeEntries,
  EssNonposRowsum,
  NminSearch,
  GridOracle,
};

std::string_view to_string(Verdict v);
std::string_view to_string(CertificateReason r);

/// Result of certify(). A NotCopositive verdict always carries a witness
/// w >= 0 with sum w_i^k = 1 and A w^k < 0.
struct CopositivityCertificate {
  Verdict verdict = Verdict::Inconclusive;
  CertificateReason reason = CertificateReason::NminSearch;
  std::optional<Vec> witness;
  std::optional<double> nmin_estimate;

  bool certified() const {
    return verdict == Verdict::CopositiveCertified ||
           verdict == Verdict::StrictlyCopositiveCertified;
  }
};

struct SearchConfig {
  int restarts = 50;
  int grid_resolution = 20;
  double tolerance = 1e-9;
  std::uint64_t seed = 0x5eed;

  void validate() const;
};

// ---------------------------------------------------------------------------
// Exact tests

/// d_min(A) >= 0, necessary for copositivity.
bool check_diag_necessary(const SymTensor &a);
/// Index of the smallest diagonal entry (first on ties).
int argmin_diagonal(const SymTensor &a);

enum class DiagDominance { Positive, Nonnegative, Neither };
std::string_view to_string(DiagDominance d);

/// s_i = a_{i...i} + sum of the negative off-diagonal entries of row i, each
/// index tuple (i, i_2, ..., i_k) counted separately.
Vec diag_dominance_margins(const SymTensor &a);

/// Positive if every s_i > 0 (strictly copositive), Nonnegative if every
/// s_i >= 0 (copositive), else Neither.
DiagDominance check_diag_dominance(const SymTensor &a);

/// Row-sum test for essentially nonpositive tensors: strictly copositive if
/// R_min > 0, copositive if R_min >= 0. Absent otherwise, including for
/// tensors that are not essentially nonpositive.
std::optional<Verdict> check_ess_nonpos(const SymTensor &a);

// ---------------------------------------------------------------------------
// Numeric search for N_min(A) = min { A x^k : x >= 0, sum x_i^k = 1 }

struct NminResult {
  double value = 0.0;
  Vec argmin;
};

/// Multi-start projected descent. `value` is attained at `argmin`, so it is
/// an upper bound on N_min.
NminResult nmin_search(const SymTensor &a, const SearchConfig &cfg = {});

inline constexpr int kMaxGridOracleDim = 5;

/// Calls fn(const Vec&) for every composition m of `resolution` into n
/// nonnegative parts, rescaled to unit k-norm. Deterministic order.
template <class Fn>
void for_each_grid_point(int n, int order, int resolution, Fn &&fn);

/// Minimum of A x^k over the composition grid. Throws std::domain_error when
/// n > kMaxGridOracleDim.
NminResult nmin_grid_oracle(const SymTensor &a, int resolution);

// ---------------------------------------------------------------------------

/// Certification pipeline: diagonal necessity, nonnegative entries, diagonal
/// dominance, the essentially nonpositive row-sum test, then N_min search
/// (topped up by the grid oracle when n <= kMaxGridOracleDim). Only the exact
/// tests can certify; search can only refute.
CopositivityCertificate certify(const SymTensor &a, const SearchConfig &cfg = {});

/// Refutation threshold used by certify(): tolerance * max |a|.
double refutation_threshold(const SymTensor &a, const SearchConfig &cfg);

// ---------------------------------------------------------------------------
// Property checks for tensors known to be copositive

/// For an H+-eigenpair (lambda, x) of a copositive tensor, checks
/// lambda >= -tolerance, also through lambda = A x^k / sum x_i^k. Throws
/// std::invalid_argument if x is not nonnegative and nonzero or if the pair
/// is not an eigenpair within residual_tolerance * (1 + |lambda|).
bool check_hplus_sign(const SymTensor &a, double lambda,
                      std::span<const double> x, double tolerance = 1e-9,
                      double residual_tolerance = 1e-8);

/// For x >= 0 with |A x^k| <= zero_tolerance, checks
/// min_i (A x^{k-1})_i >= -gradient_tolerance. Throws std::invalid_argument
/// when x is not such a point.
bool check_zero_set_gradient(const SymTensor &a, std::span<const double> x,
                             double zero_tolerance = 1e-9,
                             double gradient_tolerance = 1e-7);

/// <A, sum_i (y^{(i)})^k>.
double dual_pairing(const SymTensor &a, const std::vector<Vec> &factors);

/// dual_pairing(A, factors) >= -tolerance. Throws on negative factors.
bool dual_pairing_check(const SymTensor &a, const std::vector<Vec> &factors,
                        double tolerance = 1e-9);

// ---------------------------------------------------------------------------

template <class Fn>
void for_each_grid_point(int n, int order, int resolution, Fn &&fn) {
  if (n < 1 || resolution < 1)
    return;
  std::vector<int> m(static_cast<std::size_t>(n), 0);
  m[0] = resolution;
  Vec x(static_cast<std::size_t>(n));
  while (true) {
    for (int i = 0; i < n; ++i)
      x[i] = static_cast<double>(m[i]);
    fn(static_cast<const Vec &>(normalize_knorm(x, order)));
    // Next composition in reverse-lexicographic order.
    int last = n - 1;
    if (n == 1 || m[last] == resolution)
      return;
    int j = last - 1;
    while (m[j] == 0)
      --j;
    --m[j];
    const int tail = m[last] + 1;
    m[last] = 0;
    m[j + 1] = tail;
  }
}

} // namespace symcop
