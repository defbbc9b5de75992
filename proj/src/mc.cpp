#include "ncfree/mc.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <random>

namespace ncfree {

void validate(const McConfig& cfg) {
  if (cfg.d < 1) throw std::invalid_argument("mc: d must be positive");
  if (cfg.radii.rows() != cfg.d || cfg.radii.cols() != cfg.d) throw std::invalid_argument("mc: radii must be d×d");
  if ((cfg.radii.array() < 0).any()) throw std::invalid_argument("mc: radii must be non-negative");
  if (cfg.radii != cfg.radii.transpose()) throw std::invalid_argument("mc: radii must be symmetric");
  if (cfg.matrix_size < 16) throw std::invalid_argument("mc: matrix size must be at least 16");
  if (cfg.trials < 1) throw std::invalid_argument("mc: trials must be positive");
}

Eigen::MatrixXd radii_from_spec(const SpecFile& spec) {
  if (spec.s != 1) throw std::invalid_argument("mc: the spec must declare exactly one matrix");
  Eigen::MatrixXd radii = Eigen::MatrixXd::Zero(spec.d, spec.d);
  for (const auto& decl : spec.declarations) {
    if (auto* sc = std::get_if<SemicircularDecl>(&decl)) {
      radii(sc->i - 1, sc->i - 1) = to_double(sc->radius);
    } else if (auto* ci = std::get_if<CircularDecl>(&decl)) {
      radii(ci->i - 1, ci->j - 1) = radii(ci->j - 1, ci->i - 1) = to_double(ci->radius);
    } else {
      throw std::invalid_argument("mc: only semicircular and circular declarations can be sampled");
    }
  }
  return radii;
}

namespace {

Eigen::MatrixXcd sample_matrix(const McConfig& cfg, std::mt19937_64& rng) {
  const int M = cfg.matrix_size;
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(cfg.d * M, cfg.d * M);
  for (int bi = 0; bi < cfg.d; ++bi) {
    for (int bj = bi; bj < cfg.d; ++bj) {
      // E|entry|² = r²/(4M)
      const double sigma = cfg.radii(bi, bj) / (2.0 * std::sqrt(static_cast<double>(M)));
      if (sigma == 0) continue;
      const double half = sigma / std::sqrt(2.0);
      for (int i = 0; i < M; ++i) {
        for (int j = (bi == bj ? i : 0); j < M; ++j) {
          std::complex<double> z;
          if (bi == bj && i == j) {
            z = sigma * normal(rng);
          } else {
            z = {half * normal(rng), half * normal(rng)};
          }
          a(bi * M + i, bj * M + j) = z;
          a(bj * M + j, bi * M + i) = std::conj(z);
        }
      }
    }
  }
  return a;
}

}  // namespace

std::vector<MomentEstimate> sample_block_moments(const McConfig& cfg, int max_moment) {
  validate(cfg);
  if (max_moment < 1 || max_moment > 8) throw std::invalid_argument("mc: max moment must be in 1..8");
  const double size = static_cast<double>(cfg.d) * cfg.matrix_size;
  std::vector<std::vector<double>> samples(static_cast<std::size_t>(max_moment));
  for (int t = 0; t < cfg.trials; ++t) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(t)};
    std::mt19937_64 rng(seq);
    Eigen::MatrixXcd a = sample_matrix(cfg, rng);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& ev = solver.eigenvalues();
    Eigen::VectorXd power = Eigen::VectorXd::Ones(ev.size());
    for (int n = 1; n <= max_moment; ++n) {
      power = power.cwiseProduct(ev);
      samples[static_cast<std::size_t>(n - 1)].push_back(power.sum() / size);
    }
  }
  std::vector<MomentEstimate> out;
  for (int n = 1; n <= max_moment; ++n) {
    const auto& xs = samples[static_cast<std::size_t>(n - 1)];
    double mean = 0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double se = 0;
    if (xs.size() > 1) {
      double var = 0;
      for (double x : xs) var += (x - mean) * (x - mean);
      var /= static_cast<double>(xs.size() - 1);
      se = std::sqrt(var / static_cast<double>(xs.size()));
    }
    out.push_back({n, mean, se});
  }
  return out;
}

double finite_size_allowance(const McConfig& cfg, int n) { return 4.0 * std::pow(cfg.radii.maxCoeff(), n); }

std::string McLine::to_tsv() const {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%d\t%.6f\t%.6f\t", n, empirical, std_error);
  return buf + to_string(exact) + "\t" + (pass ? "PASS" : "FAIL");
}

std::vector<McLine> compare(const McConfig& cfg, const std::vector<MomentEstimate>& estimates,
                            const std::vector<Rational>& exact) {
  std::vector<McLine> out;
  for (const auto& e : estimates) {
    if (e.n < 1 || e.n > static_cast<int>(exact.size())) throw std::invalid_argument("mc: no prediction for moment " + std::to_string(e.n));
    const Rational& x = exact[static_cast<std::size_t>(e.n - 1)];
    double band = 3.0 * (e.std_error + finite_size_allowance(cfg, e.n) / cfg.matrix_size);
    out.push_back({e.n, e.mean, e.std_error, x, std::abs(e.mean - to_double(x)) <= band});
  }
  return out;
}

std::vector<Rational> exact_block_moments(const SpecFile& spec, int max_moment) {
  if (spec.s != 1) throw std::invalid_argument("mc: the spec must declare exactly one matrix");
  SpecFile deep = spec;
  deep.order = std::max(spec.order, max_moment);
  MatrixFamily fam = to_family(deep);
  Series m = family_moments(determining_series(fam), fam.d);
  std::vector<Rational> out;
  for (int n = 1; n <= max_moment; ++n) out.push_back(m.coef(Word(static_cast<std::size_t>(n), 1)));
  return out;
}

}  // namespace ncfree
