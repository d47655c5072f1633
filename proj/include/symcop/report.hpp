#pragma once

#include <optional>
#include <string>

#include "symcop/copositivity.hpp"
#include "symcop/spectral.hpp"
#include "symcop/structure.hpp"

namespace symcop {

/// Everything a CLI command computed about one tensor. Sections that were not
/// computed stay empty and are omitted from the output.
struct Report {
  int order = 0;
  int dim = 0;
  std::size_t stored_entries = 0;
  double nonzero_positions = 0.0;
  bool symmetrized = false;

  std::optional<StructureClass> structure;
  std::optional<RowStats> rows;
  std::optional<RowStats> diagonal;
  std::optional<Partition> partition;

  std::optional<SpectralResult> lambda_max;
  std::optional<SpectralResult> lambda_min;
  std::optional<EigenBounds> lambda_max_bounds;
  std::optional<EigenBounds> lambda_min_bounds;
  bool hpp_checked = false;
  std::optional<HppEigenpair> hpp;

  std::optional<DiagDominance> dominance;
  std::optional<CopositivityCertificate> certificate;
  std::optional<SearchConfig> search;

  std::optional<double> pairing;
};

/// Header fields (shape, entry counts) filled from `a`.
Report make_report(const SymTensor &a);

/// Human-readable, 1-based indices.
std::string report_text(const Report &r);
/// JSON document, 1-based indices.
std::string report_json(const Report &r);

} // namespace symcop
