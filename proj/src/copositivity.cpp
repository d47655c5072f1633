#include "symcop/copositivity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "simplex_search.hpp"
#include "symcop/structure.hpp"

namespace symcop {

std::string_view to_string(Verdict v) {
  switch (v) {
  case Verdict::CopositiveCertified:
    return "copositive-certified";
  case Verdict::StrictlyCopositiveCertified:
    return "strictly-copositive-certified";
  case Verdict::NotCopositive:
    return "not-copositive";
  case Verdict::NumericallyCopositive:
    return "numerically-copositive";
  case Verdict::Inconclusive:
    return "inconclusive";
  }
  return "inconclusive";
}

std::string_view to_string(CertificateReason r) {
  switch (r) {
  case CertificateReason::DiagNecessary:
    return "diag_necessary";
  case CertificateReason::DiagDominanceNonneg:
    return "diag_dominance_nonneg";
  case CertificateReason::DiagDominancePos:
    return "diag_dominance_pos";
  case CertificateReason::NonnegativeEntries:
    return "nonnegative_entries";
  case CertificateReason::EssNonposRowsum:
    return "ess_nonpos_rowsum";
  case CertificateReason::NminSearch:
    return "nmin_search";
  case CertificateReason::GridOracle:
    return "grid_oracle";
  }
  return "nmin_search";
}

std::string_view to_string(DiagDominance d) {
  switch (d) {
  case DiagDominance::Positive:
    return "positive";
  case DiagDominance::Nonnegative:
    return "nonnegative";
  case DiagDominance::Neither:
    return "neither";
  }
  return "neither";
}

void SearchConfig::validate() const {
  if (restarts < 1 || grid_resolution < 1 || !(tolerance > 0.0))
    throw std::invalid_argument(
        "search restarts, grid resolution and tolerance must be positive");
}

// ---------------------------------------------------------------------------

int argmin_diagonal(const SymTensor &a) {
  int best = 0;
  for (int i = 1; i < a.dim(); ++i)
    if (a.diagonal(i) < a.diagonal(best))
      best = i;
  return best;
}

bool check_diag_necessary(const SymTensor &a) {
  return a.diagonal(argmin_diagonal(a)) >= 0.0;
}

Vec diag_dominance_margins(const SymTensor &a) {
  const int k = a.order();
  Vec s(static_cast<std::size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i)
    s[i] = a.diagonal(i);
  for (const auto &e : a.entries()) {
    if (e.value >= 0.0 || e.index.front() == e.index.back())
      continue;
    const auto &idx = e.index;
    std::size_t p = 0;
    while (p < idx.size()) {
      std::size_t q = p;
      while (q < idx.size() && idx[q] == idx[p])
        ++q;
      // positions in row idx[p] occupied by this orbit
      s[idx[p]] += e.value * e.multiplicity * static_cast<double>(q - p) / k;
      p = q;
    }
  }
  return s;
}

DiagDominance check_diag_dominance(const SymTensor &a) {
  const Vec s = diag_dominance_margins(a);
  const double lowest = *std::min_element(s.begin(), s.end());
  if (lowest > 0.0)
    return DiagDominance::Positive;
  if (lowest >= 0.0)
    return DiagDominance::Nonnegative;
  return DiagDominance::Neither;
}

std::optional<Verdict> check_ess_nonpos(const SymTensor &a) {
  if (!classify(a).essentially_nonpositive)
    return std::nullopt;
  const double rmin = row_stats(a).min;
  if (rmin > 0.0)
    return Verdict::StrictlyCopositiveCertified;
  if (rmin >= 0.0)
    return Verdict::CopositiveCertified;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

NminResult nmin_search(const SymTensor &a, const SearchConfig &cfg) {
  cfg.validate();
  detail::SimplexSearchOptions opts;
  opts.restarts = cfg.restarts;
  opts.seed = cfg.seed;
  opts.vertex_starts = true;
  auto found = detail::search_knorm_simplex(a, -1, opts);
  return {found.value, std::move(found.point)};
}

NminResult nmin_grid_oracle(const SymTensor &a, int resolution) {
  if (a.dim() > kMaxGridOracleDim)
    throw std::domain_error("grid oracle is limited to dimension <= " +
                            std::to_string(kMaxGridOracleDim));
  if (resolution < 1)
    throw std::invalid_argument("grid resolution must be positive");
  NminResult best;
  bool have = false;
  for_each_grid_point(a.dim(), a.order(), resolution, [&](const Vec &x) {
    const double v = eval_form(a, x);
    if (!have || v < best.value) {
      best.value = v;
      best.argmin = x;
      have = true;
    }
  });
  return best;
}

double refutation_threshold(const SymTensor &a, const SearchConfig &cfg) {
  return cfg.tolerance * max_abs_entry(a);
}

CopositivityCertificate certify(const SymTensor &a, const SearchConfig &cfg) {
  cfg.validate();
  CopositivityCertificate cert;

  if (!check_diag_necessary(a)) {
    const int i = argmin_diagonal(a);
    cert.verdict = Verdict::NotCopositive;
    cert.reason = CertificateReason::DiagNecessary;
    cert.witness = unit_vector(a.dim(), i);
    cert.nmin_estimate = a.diagonal(i);
    return cert;
  }

  const auto dominance = check_diag_dominance(a);
  if (classify(a).nonnegative) {
    if (dominance == DiagDominance::Positive) {
      cert.verdict = Verdict::StrictlyCopositiveCertified;
      cert.reason = CertificateReason::DiagDominancePos;
    } else {
      cert.verdict = Verdict::CopositiveCertified;
      cert.reason = CertificateReason::NonnegativeEntries;
    }
    return cert;
  }

  if (dominance == DiagDominance::Positive) {
    cert.verdict = Verdict::StrictlyCopositiveCertified;
    cert.reason = CertificateReason::DiagDominancePos;
    return cert;
  }
  if (dominance == DiagDominance::Nonnegative) {
    cert.verdict = Verdict::CopositiveCertified;
    cert.reason = CertificateReason::DiagDominanceNonneg;
    return cert;
  }

  if (auto v = check_ess_nonpos(a)) {
    cert.verdict = *v;
    cert.reason = CertificateReason::EssNonposRowsum;
    return cert;
  }

  auto found = nmin_search(a, cfg);
  cert.reason = CertificateReason::NminSearch;
  const double threshold = refutation_threshold(a, cfg);
  if (found.value >= -threshold && a.dim() <= kMaxGridOracleDim) {
    auto grid = nmin_grid_oracle(a, cfg.grid_resolution);
    if (grid.value < -threshold) {
      found = std::move(grid);
      cert.reason = CertificateReason::GridOracle;
    }
  }
  cert.nmin_estimate = found.value;
  if (found.value < -threshold) {
    cert.verdict = Verdict::NotCopositive;
    cert.witness = std::move(found.argmin);
  } else {
    cert.verdict = Verdict::NumericallyCopositive;
  }
  return cert;
}

// ---------------------------------------------------------------------------

namespace {

void require_nonnegative_nonzero(std::span<const double> x) {
  bool nonzero = false;
  for (double v : x) {
    if (!(v >= 0.0))
      throw std::invalid_argument("vector must be nonnegative");
    nonzero = nonzero || v > 0.0;
  }
  if (!nonzero)
    throw std::invalid_argument("vector must be nonzero");
}

} // namespace

bool check_hplus_sign(const SymTensor &a, double lambda,
                      std::span<const double> x, double tolerance,
                      double residual_tolerance) {
  require_nonnegative_nonzero(x);
  const int k = a.order();
  const Vec ax = symcop::apply(a, x);
  double resid = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    resid = std::max(resid, std::abs(ax[i] - lambda * std::pow(x[i], k - 1)));
  if (resid > residual_tolerance * (1.0 + std::abs(lambda)))
    throw std::invalid_argument("(lambda, x) is not an eigenpair: residual " +
                                std::to_string(resid));
  const double rayleigh = eval_form(a, x) / knorm_pow(x, k);
  return lambda >= -tolerance && rayleigh >= -tolerance;
}

bool check_zero_set_gradient(const SymTensor &a, std::span<const double> x,
                             double zero_tolerance,
                             double gradient_tolerance) {
  require_nonnegative_nonzero(x);
  const double value = eval_form(a, x);
  if (std::abs(value) > zero_tolerance)
    throw std::invalid_argument("A x^k is not zero at x: " +
                                std::to_string(value));
  const Vec ax = symcop::apply(a, x);
  return *std::min_element(ax.begin(), ax.end()) >= -gradient_tolerance;
}

double dual_pairing(const SymTensor &a, const std::vector<Vec> &factors) {
  return inner_product(a, cp_sum(factors, a.order()));
}

bool dual_pairing_check(const SymTensor &a, const std::vector<Vec> &factors,
                        double tolerance) {
  return dual_pairing(a, factors) >= -tolerance;
}

} // namespace symcop
