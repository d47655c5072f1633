#include "symcop/report.hpp"

#include <sstream>

#include <json.hpp>

#include "symcop/tensor_io.hpp"

namespace symcop {

namespace {

using nlohmann::json;

std::vector<int> one_based(const std::vector<int> &v) {
  std::vector<int> out(v);
  for (auto &i : out)
    ++i;
  return out;
}

json iteration_json(const IterationConfig &c) {
  return {{"tolerance", c.tolerance},
          {"max_iterations", c.max_iterations},
          {"shift", c.shift}};
}

json spectral_json(const SpectralResult &s) {
  json blocks = json::array();
  for (const auto &b : s.block_lambdas)
    blocks.push_back({{"indices", one_based(b.indices)}, {"lambda", b.lambda}});
  return {{"lambda", s.lambda},
          {"eigenvector", s.eigenvector},
          {"residual", s.residual},
          {"iterations", s.iterations},
          {"blocks", blocks},
          {"config", iteration_json(s.config)}};
}

json stats_json(const RowStats &s) {
  return {{"max", s.max}, {"min", s.min}, {"mean", s.mean}};
}

std::string vec_text(const Vec &v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      out += ", ";
    out += format_double(v[i]);
  }
  return out + ")";
}

std::string set_text(const std::vector<int> &v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      out += ",";
    out += std::to_string(v[i] + 1);
  }
  return out + "}";
}

const char *yes_no(bool b) { return b ? "yes" : "no"; }

} // namespace

Report make_report(const SymTensor &a) {
  Report r;
  r.order = a.order();
  r.dim = a.dim();
  r.stored_entries = a.stored_entries();
  r.nonzero_positions = a.nonzero_positions();
  r.symmetrized = a.symmetrized();
  return r;
}

std::string report_json(const Report &r) {
  json j = {{"order", r.order},
            {"dim", r.dim},
            {"stored_entries", r.stored_entries},
            {"nonzero_positions", r.nonzero_positions},
            {"symmetrized", r.symmetrized}};
  if (r.structure)
    j["structure"] = {
        {"symmetric", r.structure->symmetric},
        {"nonnegative", r.structure->nonnegative},
        {"essentially_nonnegative", r.structure->essentially_nonnegative},
        {"essentially_nonpositive", r.structure->essentially_nonpositive}};
  if (r.rows)
    j["row_sums"] = stats_json(*r.rows);
  if (r.diagonal)
    j["diagonal"] = stats_json(*r.diagonal);
  if (r.partition) {
    json blocks = json::array();
    for (const auto &b : r.partition->blocks)
      blocks.push_back(one_based(b));
    j["partition"] = blocks;
  }
  if (r.lambda_max)
    j["lambda_max"] = spectral_json(*r.lambda_max);
  if (r.lambda_min)
    j["lambda_min"] = spectral_json(*r.lambda_min);
  if (r.hpp_checked)
    j["hpp_eigenvalue"] =
        r.hpp ? json{{"lambda", r.hpp->lambda},
                     {"eigenvector", r.hpp->eigenvector},
                     {"residual", r.hpp->residual},
                     {"relative_tolerance", kHppRelativeTolerance}}
              : json(nullptr);
  if (r.lambda_max_bounds)
    j["lambda_max_bounds"] = {{"lower", r.lambda_max_bounds->lower},
                              {"upper", r.lambda_max_bounds->upper},
                              {"config", "exact"}};
  if (r.lambda_min_bounds)
    j["lambda_min_bounds"] = {{"lower", r.lambda_min_bounds->lower},
                              {"upper", r.lambda_min_bounds->upper},
                              {"config", "exact"}};
  if (r.dominance)
    j["diag_dominance"] = std::string(to_string(*r.dominance));
  if (r.certificate) {
    const auto &c = *r.certificate;
    json cj = {{"verdict", std::string(to_string(c.verdict))},
               {"reason", std::string(to_string(c.reason))}};
    cj["witness"] = c.witness ? json(*c.witness) : json(nullptr);
    cj["nmin_estimate"] =
        c.nmin_estimate ? json(*c.nmin_estimate) : json(nullptr);
    if (r.search)
      cj["config"] = {{"restarts", r.search->restarts},
                      {"grid_resolution", r.search->grid_resolution},
                      {"tolerance", r.search->tolerance},
                      {"seed", r.search->seed}};
    j["certificate"] = cj;
  }
  if (r.pairing)
    j["inner_product"] = *r.pairing;
  return j.dump(2);
}

std::string report_text(const Report &r) {
  std::ostringstream out;
  out << "tensor: order " << r.order << ", dimension " << r.dim << ", "
      << r.stored_entries << " stored orbits, "
      << format_double(r.nonzero_positions) << " nonzero positions"
      << (r.symmetrized ? " (symmetrized)" : "") << "\n";
  if (r.structure)
    out << "nonnegative: " << yes_no(r.structure->nonnegative)
        << "\nessentially nonnegative: "
        << yes_no(r.structure->essentially_nonnegative)
        << "\nessentially nonpositive: "
        << yes_no(r.structure->essentially_nonpositive) << "\n";
  if (r.rows)
    out << "row sums: max " << format_double(r.rows->max) << ", min "
        << format_double(r.rows->min) << ", mean "
        << format_double(r.rows->mean) << "\n";
  if (r.diagonal)
    out << "diagonal: max " << format_double(r.diagonal->max) << ", min "
        << format_double(r.diagonal->min) << ", mean "
        << format_double(r.diagonal->mean) << "\n";
  if (r.partition) {
    out << "partition: " << r.partition->blocks.size() << " block(s)";
    for (const auto &b : r.partition->blocks)
      out << " " << set_text(b);
    out << "\n";
  }
  auto spectral = [&](const char *name, const SpectralResult &s) {
    out << name << ": " << format_double(s.lambda) << "\n  eigenvector "
        << vec_text(s.eigenvector) << "\n  residual "
        << format_double(s.residual) << ", iterations " << s.iterations
        << " (tolerance " << format_double(s.config.tolerance) << ", shift "
        << format_double(s.config.shift) << ")\n";
    for (const auto &b : s.block_lambdas)
      out << "  block " << set_text(b.indices) << ": "
          << format_double(b.lambda) << "\n";
  };
  if (r.lambda_max)
    spectral("lambda_max", *r.lambda_max);
  if (r.lambda_min)
    spectral("lambda_min", *r.lambda_min);
  if (r.hpp_checked) {
    if (r.hpp)
      out << "H++ eigenvalue: " << format_double(r.hpp->lambda)
          << " with positive eigenvector " << vec_text(r.hpp->eigenvector)
          << "\n";
    else
      out << "H++ eigenvalue: none (block eigenvalues differ)\n";
  }
  if (r.lambda_max_bounds)
    out << "lambda_max bounds: " << format_double(r.lambda_max_bounds->lower)
        << " <= lambda_max <= " << format_double(r.lambda_max_bounds->upper)
        << "\n";
  if (r.lambda_min_bounds)
    out << "lambda_min bounds: " << format_double(r.lambda_min_bounds->lower)
        << " <= lambda_min <= " << format_double(r.lambda_min_bounds->upper)
        << "\n";
  if (r.dominance)
    out << "diagonal dominance: " << to_string(*r.dominance) << "\n";
  if (r.certificate) {
    const auto &c = *r.certificate;
    out << "verdict: " << to_string(c.verdict) << "\nreason: "
        << to_string(c.reason) << "\n";
    if (c.witness)
      out << "witness: " << vec_text(*c.witness) << "\n";
    if (c.nmin_estimate)
      out << "nmin_estimate: " << format_double(*c.nmin_estimate) << "\n";
    if (r.search)
      out << "search: restarts " << r.search->restarts << ", tolerance "
          << format_double(r.search->tolerance) << ", seed " << r.search->seed
          << "\n";
  }
  if (r.pairing)
    out << "inner product: " << format_double(*r.pairing) << "\n";
  return out.str();
}

} // namespace symcop
