#include "ncfree/cli.hpp"

#include "CLI11.hpp"
#include "ncfree/mc.hpp"
#include "ncfree/opvalued.hpp"
#include "ncfree/oracle.hpp"
#include "ncfree/specfile.hpp"

#include <algorithm>
#include <ostream>

namespace ncfree {

namespace {

constexpr double kCostWarning = 1e8;

struct Options {
  // series
  std::string kind;
  int s = 1;
  int d = 1;
  int order = 0;
  // spec-driven commands
  std::string spec_path;
  std::string action;
  int budget = 4;
  std::string algebra = "B";
  std::string word;
  // verify
  std::string suite = "all";
  // mc
  int size = 512;
  int trials = 20;
  std::uint64_t seed = 1;
  int max_moment = 6;
};

class CheckFailed : public std::runtime_error {
 public:
  explicit CheckFailed(const std::string& witness) : std::runtime_error(witness) {}
};

void warn_cost(int alphabet, int order, std::ostream& err) {
  double cost = convolution_cost(alphabet, order);
  if (cost > kCostWarning) {
    err << "warning: dense convolution cost estimate " << cost << " exceeds " << kCostWarning << '\n';
  }
}

SpecFile spec_with_order(const Options& o) {
  SpecFile spec = load_spec(o.spec_path);
  if (o.order > 0) spec.order = o.order;
  return spec;
}

int cmd_series(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.order < 1) throw std::invalid_argument("--order must be positive");
  Series f(1, 1);
  if (o.kind == "zeta") {
    f = zeta(o.s, o.order);
  } else if (o.kind == "moebius") {
    f = moebius(o.s, o.order);
  } else if (o.kind == "delta") {
    f = delta(o.s, o.order);
  } else if (o.kind == "Gd") {
    f = geometric(o.d, o.order);
  } else {
    warn_cost(o.d, o.order, err);
    f = h_series(o.d, o.order);
  }
  out << to_tsv(f);
  return kExitOk;
}

int cmd_rcyclic(const Options& o, std::ostream& out, std::ostream& err) {
  SpecFile spec = spec_with_order(o);
  MatrixFamily fam = to_family(spec);
  if (o.action == "check") {
    auto result = is_rcyclic(fam);
    if (!result.rcyclic) throw CheckFailed(result.witness.describe());
    out << "PASS\tR-cyclic up to order " << spec.order << '\n';
    return kExitOk;
  }
  Series f = determining_series(fam);
  if (o.action == "determining-series") {
    out << to_tsv(f, fam.d);
  } else {
    warn_cost(fam.s() * fam.d, spec.order, err);
    out << to_tsv(o.action == "moments" ? family_moments(f, fam.d) : family_rtransform(f, fam.d));
  }
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream&) {
  SpecFile spec = load_spec(o.spec_path);
  MatrixFamily fam = to_family(spec);
  auto result = check_amalgamated_freeness(fam.model, fam.matrices, o.budget);
  if (!result.free) {
    std::string flat;
    for (Eigen::Index i = 0; i < result.value.rows(); ++i) {
      for (Eigen::Index j = 0; j < result.value.cols(); ++j) flat += (flat.empty() ? "" : ",") + to_string(result.value(i, j));
    }
    throw CheckFailed(result.witness + "\t" + flat);
  }
  out << "PASS\t" << result.words_checked << " words up to degree " << o.budget << '\n';
  return kExitOk;
}

int cmd_opcumulant(const Options& o, std::ostream& out, std::ostream&) {
  SpecFile spec = load_spec(o.spec_path);
  MatrixFamily fam = to_family(spec);
  Word w = parse_word(o.word);
  if (w.empty()) throw std::invalid_argument("--word must be non-empty");
  std::vector<PolyMatrix> xs;
  for (Letter r : w) {
    if (r < 1 || r > fam.s()) throw std::invalid_argument("--word letter " + std::to_string(r) + " out of range");
    xs.push_back(fam.matrices[static_cast<std::size_t>(r - 1)]);
  }
  out << to_tsv(opvalued_cumulant_generic(fam.model, xs, o.algebra == "B" ? Algebra::B : Algebra::D));
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream&) {
  auto reports = oracle::run_suite(o.suite, o.order > 0 ? o.order : 4);
  const oracle::OracleReport* first_failure = nullptr;
  for (const auto& r : reports) {
    out << r.to_tsv() << '\n';
    if (!r.pass && !first_failure) first_failure = &r;
  }
  if (first_failure) throw CheckFailed(first_failure->name + "\t" + first_failure->inputs);
  return kExitOk;
}

int cmd_mc(const Options& o, std::ostream& out, std::ostream&) {
  SpecFile spec = load_spec(o.spec_path);
  McConfig cfg{spec.d, radii_from_spec(spec), o.size, o.trials, o.seed};
  auto lines = compare(cfg, sample_block_moments(cfg, o.max_moment), exact_block_moments(spec, o.max_moment));
  const McLine* first_failure = nullptr;
  for (const auto& l : lines) {
    out << l.to_tsv() << '\n';
    if (!l.pass && !first_failure) first_failure = &l;
  }
  if (first_failure) throw CheckFailed("moment " + std::to_string(first_failure->n) + " outside tolerance");
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact free-probability engine for R-cyclic matrix families", "ncfree"};
  app.require_subcommand(1);
  Options o;

  auto* series = app.add_subcommand("series", "Print a named series as TSV");
  series->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"zeta", "moebius", "delta", "Gd", "Hd"}));
  series->add_option("--s", o.s, "Alphabet size for zeta/moebius/delta")->check(CLI::PositiveNumber);
  series->add_option("--d", o.d, "Dimension for Gd/Hd")->check(CLI::PositiveNumber);
  series->add_option("--order", o.order)->required();

  auto* rcyclic = app.add_subcommand("rcyclic", "Distribution of an R-cyclic family from a spec file");
  rcyclic->add_option("action", o.action)
      ->required()
      ->check(CLI::IsMember({"moments", "rtransform", "determining-series", "check"}));
  rcyclic->add_option("--spec", o.spec_path)->required();
  rcyclic->add_option("--order", o.order, "Override the spec's truncation order");

  auto* check = app.add_subcommand("check", "Structural checks");
  check->add_option("property", o.action)->required()->check(CLI::IsMember({"amalg-freeness"}));
  check->add_option("--spec", o.spec_path)->required();
  check->add_option("--budget", o.budget, "Degree budget")->check(CLI::NonNegativeNumber);

  auto* opcumulant = app.add_subcommand("opcumulant", "Operator-valued cumulant of matrices from a spec");
  opcumulant->add_option("--spec", o.spec_path)->required();
  opcumulant->add_option("--algebra", o.algebra)->check(CLI::IsMember({"B", "D"}));
  opcumulant->add_option("--word", o.word, "Matrix indices, e.g. 1,1,2")->required();

  auto* verify = app.add_subcommand("verify", "Compare fast paths against the brute-force oracles");
  verify->add_option("--suite", o.suite);
  verify->add_option("--order", o.order);

  auto* mc = app.add_subcommand("mc", "Monte Carlo check against Gaussian random matrices");
  mc->add_option("--spec", o.spec_path)->required();
  mc->add_option("--size", o.size);
  mc->add_option("--trials", o.trials);
  mc->add_option("--seed", o.seed);
  mc->add_option("--max-moment", o.max_moment);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*series) return cmd_series(o, out, err);
    if (*rcyclic) return cmd_rcyclic(o, out, err);
    if (*check) return cmd_check(o, out, err);
    if (*opcumulant) return cmd_opcumulant(o, out, err);
    if (*verify) return cmd_verify(o, out, err);
    if (*mc) return cmd_mc(o, out, err);
  } catch (const CheckFailed& e) {
    out << "WITNESS\t" << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const SpecError& e) {
    err << "error: " << o.spec_path << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    out << "WITNESS\t" << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ncfree
