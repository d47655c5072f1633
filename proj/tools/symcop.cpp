// symcop: spectral analysis and copositivity certification of symmetric
// tensors stored in the plain-text tensor format.
//
// Exit status:
//   0  success; for `certify`, a certified (strictly) copositive verdict
//   1  usage, input, or I/O error
//   2  `certify`: numerically copositive (no certificate)
//   3  `certify`: not copositive (witness printed)
//   4  power iteration did not converge
// Errors print one line to stderr: "error: <category>: <message>".

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symcop/copositivity.hpp"
#include "symcop/generators.hpp"
#include "symcop/report.hpp"
#include "symcop/spectral.hpp"
#include "symcop/structure.hpp"
#include "symcop/tensor_io.hpp"

namespace {

using namespace symcop;

enum ExitCode {
  kOk = 0,
  kError = 1,
  kNumeric = 2,
  kRefuted = 3,
  kNoConvergence = 4,
};

constexpr std::uint64_t kDefaultSeed = 0x5eed;

struct CommonOptions {
  std::optional<double> tolerance;
  std::uint64_t seed = kDefaultSeed;
  int restarts = SearchConfig{}.restarts;
  int grid = SearchConfig{}.grid_resolution;
  bool json = false;

  IterationConfig iteration() const {
    IterationConfig c;
    if (tolerance)
      c.tolerance = *tolerance;
    return c;
  }
  SearchConfig search() const {
    SearchConfig c;
    c.restarts = restarts;
    c.grid_resolution = grid;
    c.seed = seed;
    if (tolerance)
      c.tolerance = *tolerance;
    return c;
  }
};

class CliError : public std::runtime_error {
public:
  CliError(std::string category, const std::string &what)
      : std::runtime_error(what), category_(std::move(category)) {}
  const std::string &category() const { return category_; }

private:
  std::string category_;
};

std::uint64_t seed_from_env() {
  if (const char *env = std::getenv("SYMCOP_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception &) {
      throw CliError("usage", "SYMCOP_SEED is not an unsigned integer");
    }
  }
  return kDefaultSeed;
}

Vec parse_vec(const std::string &text) {
  Vec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size())
        throw std::invalid_argument(item);
    } catch (const std::exception &) {
      throw CliError("usage", "malformed number '" + item + "' in '" + text +
                                  "'");
    }
  }
  return out;
}

std::vector<int> parse_edge(const std::string &text) {
  std::vector<int> edge;
  for (double v : parse_vec(text)) {
    if (v != static_cast<int>(v) || v < 1)
      throw CliError("usage", "hyperedge vertices must be integers >= 1");
    edge.push_back(static_cast<int>(v) - 1);
  }
  return edge;
}

void print(const Report &r, const CommonOptions &o) {
  std::cout << (o.json ? report_json(r) + "\n" : report_text(r));
}

int cmd_info(const SymTensor &a, const CommonOptions &o) {
  auto r = make_report(a);
  r.structure = classify(a);
  r.rows = row_stats(a);
  r.diagonal = diag_stats(a);
  r.dominance = check_diag_dominance(a);
  print(r, o);
  return kOk;
}

int cmd_partition(const SymTensor &a, const CommonOptions &o) {
  auto r = make_report(a);
  r.partition = weakly_irreducible_partition(a);
  print(r, o);
  return kOk;
}

int cmd_eigen(const SymTensor &a, const CommonOptions &o) {
  const auto cls = classify(a);
  if (!cls.essentially_nonnegative && !cls.essentially_nonpositive)
    throw CliError("input", "lambda_max and lambda_min are only computed for "
                            "essentially nonnegative or essentially "
                            "nonpositive tensors");
  auto r = make_report(a);
  r.structure = cls;
  if (cls.essentially_nonnegative)
    r.lambda_max = lambda_max(a, o.iteration());
  if (cls.essentially_nonpositive)
    r.lambda_min = lambda_min_ess_nonpos(a, o.iteration());
  if (cls.nonnegative) {
    r.hpp_checked = true;
    r.hpp = has_hpp_eigenvalue(a, o.iteration());
  }
  print(r, o);
  return kOk;
}

int cmd_bounds(const SymTensor &a, const CommonOptions &o) {
  const auto cls = classify(a);
  if (!cls.nonnegative && !cls.essentially_nonpositive)
    throw CliError("input", "row-sum bounds need a nonnegative or an "
                            "essentially nonpositive tensor");
  auto r = make_report(a);
  r.structure = cls;
  r.rows = row_stats(a);
  r.diagonal = diag_stats(a);
  if (cls.nonnegative)
    r.lambda_max_bounds = bounds_row_sums(a);
  if (cls.essentially_nonpositive)
    r.lambda_min_bounds = lambda_min_bounds(a);
  print(r, o);
  return kOk;
}

int cmd_certify(const SymTensor &a, const CommonOptions &o) {
  auto r = make_report(a);
  r.search = o.search();
  r.dominance = check_diag_dominance(a);
  r.certificate = certify(a, *r.search);
  print(r, o);
  switch (r.certificate->verdict) {
  case Verdict::CopositiveCertified:
  case Verdict::StrictlyCopositiveCertified:
    return kOk;
  case Verdict::NotCopositive:
    return kRefuted;
  default:
    return kNumeric;
  }
}

int cmd_pair(const SymTensor &a, const SymTensor &b, const CommonOptions &o) {
  if (!a.same_shape(b))
    throw CliError("input", "tensors have different order or dimension");
  auto r = make_report(a);
  r.pairing = inner_product(a, b);
  print(r, o);
  return kOk;
}

struct GenOptions {
  std::string kind;
  int order = 3;
  int dim = 3;
  std::string diagonal;
  double density = 1.0;
  std::vector<std::string> factors;
  std::vector<std::string> edges;
  std::optional<int> regular;
  std::string output;
};

int cmd_gen(const GenOptions &g, const CommonOptions &o) {
  const auto kind = parse_generator_kind(g.kind);
  if (!kind)
    throw CliError("usage", "unknown generator kind '" + g.kind + "'");
  GeneratorParams p;
  p.order = g.order;
  p.dim = g.dim;
  p.density = g.density;
  if (!g.diagonal.empty())
    p.diagonal = parse_vec(g.diagonal);
  for (const auto &f : g.factors)
    p.factors.push_back(parse_vec(f));
  for (const auto &e : g.edges)
    p.edges.push_back(parse_edge(e));
  if (g.regular)
    p.edges = random_regular_hyperedges(g.order, g.dim, *g.regular, o.seed);
  const auto tensor = generate(*kind, p, o.seed);
  if (g.output.empty())
    std::cout << emit_tensor(tensor);
  else
    write_tensor_file(g.output, tensor);
  return kOk;
}

SymTensor load(const std::string &path) {
  try {
    return read_tensor_file(path);
  } catch (const TensorParseError &e) {
    throw CliError("parse", path + ": " + e.what());
  } catch (const std::runtime_error &e) {
    throw CliError("io", e.what());
  }
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Spectral analysis and copositivity certification of "
               "symmetric tensors"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonOptions opts;
  try {
    opts.seed = seed_from_env();
  } catch (const CliError &e) {
    std::cerr << "error: " << e.category() << ": " << e.what() << "\n";
    return kError;
  }
  app.add_option("--tolerance", opts.tolerance,
                 "Convergence/refutation tolerance");
  app.add_option("--seed", opts.seed, "Random seed (default $SYMCOP_SEED)");
  app.add_option("--restarts", opts.restarts, "Search restarts")
      ->check(CLI::PositiveNumber);
  app.add_option("--grid", opts.grid, "Grid-oracle resolution")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", opts.json, "Emit a JSON report");

  std::string file_a, file_b;
  auto add_file_cmd = [&](const char *name, const char *help) {
    auto *sub = app.add_subcommand(name, help);
    sub->add_option("file", file_a, "Tensor file")->required();
    return sub;
  };
  auto *info = add_file_cmd("info", "Sign structure, row and diagonal stats");
  auto *partition = add_file_cmd("partition", "Weakly irreducible blocks");
  auto *eigen = add_file_cmd("eigen", "lambda_max / lambda_min with residuals");
  auto *bounds = add_file_cmd("bounds", "Row-sum eigenvalue bounds");
  auto *cert = add_file_cmd("certify", "Copositivity certificate");
  auto *pair = app.add_subcommand("pair", "Inner product <A, B>");
  pair->add_option("a", file_a, "First tensor file")->required();
  pair->add_option("b", file_b, "Second tensor file")->required();

  GenOptions gen_opts;
  auto *gen = app.add_subcommand("gen", "Write a generated tensor");
  gen->add_option("kind", gen_opts.kind,
                  "identity | allones | diagonal | random_nonneg | "
                  "random_ess_nonpos | cp | hypergraph_adjacency | "
                  "hypergraph_laplacian | hypergraph_signless_laplacian | "
                  "paper_sec6")
      ->required();
  gen->add_option("--order,-k", gen_opts.order, "Tensor order");
  gen->add_option("--dim,-n", gen_opts.dim, "Tensor dimension");
  gen->add_option("--diag", gen_opts.diagonal, "Diagonal values, e.g. 3,1,2");
  gen->add_option("--density", gen_opts.density,
                  "Chance an orbit is nonzero (random kinds)");
  gen->add_option("--factor", gen_opts.factors,
                  "CP factor, e.g. 1,0 (repeatable)");
  gen->add_option("--edge", gen_opts.edges,
                  "Hyperedge, 1-based, e.g. 1,2,3 (repeatable)");
  gen->add_option("--regular", gen_opts.regular,
                  "Use a random simple d-regular hypergraph");
  gen->add_option("-o,--output", gen_opts.output, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return kError;
  }

  try {
    if (*gen)
      return cmd_gen(gen_opts, opts);
    if (*pair)
      return cmd_pair(load(file_a), load(file_b), opts);
    const auto tensor = load(file_a);
    if (*info)
      return cmd_info(tensor, opts);
    if (*partition)
      return cmd_partition(tensor, opts);
    if (*eigen)
      return cmd_eigen(tensor, opts);
    if (*bounds)
      return cmd_bounds(tensor, opts);
    if (*cert)
      return cmd_certify(tensor, opts);
  } catch (const CliError &e) {
    std::cerr << "error: " << e.category() << ": " << e.what() << "\n";
    return kError;
  } catch (const ConvergenceError &e) {
    std::cerr << "error: convergence: " << e.what() << "\n";
    return kNoConvergence;
  } catch (const std::exception &e) {
    std::cerr << "error: input: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
