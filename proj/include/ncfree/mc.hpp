#pragma once

#include "ncfree/specfile.hpp"

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace ncfree {

/// A d×d block matrix of Gaussian blocks: semicircular of radius r_ii on the diagonal,
/// circular of radius r_ij off it.
struct McConfig {
  int d = 1;
  Eigen::MatrixXd radii;  // symmetric, non-negative
  int matrix_size = 512;  // M, at least 16
  int trials = 20;
  std::uint64_t seed = 1;
};

/// Throws std::invalid_argument on a malformed config.
void validate(const McConfig& cfg);

/// Radii of a one-matrix spec made only of semicircular/circular declarations.
Eigen::MatrixXd radii_from_spec(const SpecFile& spec);

struct MomentEstimate {
  int n;
  double mean;
  double std_error;  // standard error of the mean across trials; 0 for one trial
};

/// (1/(dM)) tr(A^n) for n = 1..max_moment (at most 8), averaged over trials. Trial t
/// draws from its own stream seeded by (seed, t).
std::vector<MomentEstimate> sample_block_moments(const McConfig& cfg, int max_moment);

struct McLine {
  int n;
  double empirical;
  double std_error;
  Rational exact;
  bool pass;

  /// `n<TAB>empirical<TAB>stderr<TAB>exact<TAB>pass`
  std::string to_tsv() const;
};

/// Default finite-size allowance C = 4·(max radius)^n.
double finite_size_allowance(const McConfig& cfg, int n);

/// Flags |empirical − exact| > 3·(stderr + C/M). `exact[n-1]` is the prediction for
/// moment n.
std::vector<McLine> compare(const McConfig& cfg, const std::vector<MomentEstimate>& estimates,
                            const std::vector<Rational>& exact);

/// family_moments of the spec's single matrix, coefficients z^1..z^max_moment.
std::vector<Rational> exact_block_moments(const SpecFile& spec, int max_moment);

}  // namespace ncfree
