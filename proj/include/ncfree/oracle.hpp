#pragma once

#include "ncfree/rcyclic.hpp"

#include <map>
#include <string>
#include <vector>

/// Deliberately naive reference implementations. Nothing here calls the fast
/// paths it is meant to check.
namespace ncfree::oracle {

/// Every set partition of {1..n} (Bell(n) of them) from restricted growth strings.
/// Throws std::out_of_range unless 1 <= n <= 9.
std::vector<Partition> all_set_partitions(int n);

/// Crossing test over all quadruples a < b < c < d.
bool naive_is_noncrossing(const Partition& p);

/// all_set_partitions filtered by naive_is_noncrossing.
std::vector<Partition> nc_by_filter(int n);

/// The unique q ∈ NC(n) with perm_p ∘ perm_q = γ_n, by exhaustive search.
/// Throws std::logic_error if there is not exactly one.
Partition kreweras_by_search(const Partition& p);

/// Solves moment = Σ_{π ∈ NC(n)} k_π length by length. The word set must be closed
/// under sub-words; lengths above 6 are rejected.
std::map<Word, Rational, ShortLex> cumulants_by_inversion(const std::map<Word, Rational, ShortLex>& moments);

/// φ of a generator word by summing cumulant products over the filtered NC(n).
Rational naive_phi(const CumulantModel& model, const Word& w);

/// Moment series of a matrix family in (M_d(A), tr_d ⊗ φ): explicit index sums
/// (1/d) Σ φ(a^{(r_1)}_{i_1 i_2} ⋯ a^{(r_n)}_{i_n i_1}) with naive_phi.
Series matrix_moments_bruteforce(const MatrixFamily& fam, int order);

struct OracleReport {
  std::string name;
  std::string inputs;
  std::string expected;
  std::string actual;
  bool pass = false;

  /// `name<TAB>inputs<TAB>expected<TAB>actual<TAB>PASS|FAIL`
  std::string to_tsv() const;
};

OracleReport make_report(std::string name, std::string inputs, std::string expected, std::string actual);

/// Suites: nc, kreweras, cumulants, moments, all. Throws std::invalid_argument for
/// an unknown name.
std::vector<OracleReport> run_suite(const std::string& name, int order);

}  // namespace ncfree::oracle
