#pragma once

#include "ncfree/rcyclic.hpp"

#include <map>
#include <string>
#include <vector>

namespace ncfree {

/// Entrywise φ: M_d(A) -> B.
ScalarMatrix expect_b(const CumulantModel& model, const PolyMatrix& x);

/// Diagonal of expect_b: M_d(A) -> D.
ScalarMatrix expect_d(const CumulantModel& model, const PolyMatrix& x);

enum class Algebra { B, D };

/// Which interval block k_π peels off first. The insertion law makes the value
/// independent of the choice.
enum class Extraction { Leftmost, Rightmost };

/// k_n^{(B or D)} by the defining recursion k_n = E(X_1⋯X_n) − Σ_{π ≠ 1_n} k_π.
ScalarMatrix opvalued_cumulant_generic(const CumulantModel& model, const std::vector<PolyMatrix>& xs, Algebra algebra,
                                       Extraction extraction = Extraction::Leftmost);

/// k_π^{(B or D)}: repeatedly replace an interval block by its cumulant b, multiplied
/// into the left neighbour (x_k·b), or into the right one (b·x_{k+p+1}) when the block
/// starts at 1.
ScalarMatrix opvalued_cumulant_pi(const CumulantModel& model, const Partition& pi, const std::vector<PolyMatrix>& xs,
                                  Algebra algebra, Extraction extraction = Extraction::Leftmost);

/// (i,j) entry: Σ over chains i -> i_1 -> ... -> i_{n-1} -> j of k_n of the entries.
/// Entries must be single generators or zero.
ScalarMatrix bvalued_cumulant_entrywise(const CumulantModel& model, const std::vector<PolyMatrix>& xs);

/// The same chain sum with k_π in place of k_n.
ScalarMatrix bvalued_cumulant_pi(const CumulantModel& model, const Partition& pi, const std::vector<PolyMatrix>& xs);

struct ChainWitness {
  Word r_word;
  std::vector<int> indices;  // j, i_1, ..., i_n
  Rational value;
};

struct Eq73Result {
  bool holds = true;
  ChainWitness witness;
};

/// Whether every chain-consistent cumulant k_n(a_{j,i_1}, a_{i_1,i_2}, ..., a_{i_{n-1},i_n})
/// with j != i_n vanishes, up to the model order.
Eq73Result check_chain_hypothesis(const MatrixFamily& fam);

/// k_n^{(D)}(A_{r_1}Λ_1, ..., A_{r_{n-1}}Λ_{n-1}, A_{r_n}) by the chain formula; `lambdas`
/// holds the n-1 diagonal Λ's. Throws std::domain_error if the chain hypothesis fails.
ScalarMatrix dvalued_cumulant(const MatrixFamily& fam, const Word& r_word, const std::vector<ScalarMatrix>& lambdas);

/// A formal sum of n-fold tensor words of generators.
using TensorSum = std::map<Word, Rational, ShortLex>;
using TensorGrid = std::vector<std::vector<TensorSum>>;

/// A_1 ⊙ ... ⊙ A_n, for matrices with generator (or zero) entries.
TensorGrid odot(const std::vector<PolyMatrix>& xs);

/// k̃_n applied entrywise (B), on the diagonal (D), or as (1/d)·Σ_i k_n(x_ii) (C).
ScalarMatrix ktilde_b(const CumulantModel& model, const TensorGrid& grid);
ScalarMatrix ktilde_d(const CumulantModel& model, const TensorGrid& grid);
Rational ktilde_c(const CumulantModel& model, const TensorGrid& grid);

struct AmalgamationResult {
  bool free = true;
  std::string witness;  // e.g. `E_D(C1 V[2,1] I)`
  ScalarMatrix value;   // the nonzero E_D of the witness word
  std::size_t words_checked = 0;
};

/// Enumerates C_1 V_{i_1,j_1} C_2 ⋯ V_{i_{n-1},j_{n-1}} C_n with off-diagonal matrix units,
/// interior C_m drawn from the E_D-centered monomials G_1 Q_1 G_2 ⋯ G_k (G from
/// `generators`, Q from {P_1..P_d}), ends additionally allowed to be the unit, and the sum
/// of generator degrees at most `budget`. Reports the first word whose E_D is nonzero,
/// ordered by the number of V's, then total degree, then lexicographically with the
/// unit placed after every monomial.
AmalgamationResult check_amalgamated_freeness(const CumulantModel& model, const std::vector<PolyMatrix>& generators,
                                              int budget);

/// Coefficient at ((r_1,i_1),...,(r_n,i_n)) = (i_n,i_n) entry of
/// k_n^{(D)}(A_{r_1}P_{i_1}, ..., A_{r_{n-1}}P_{i_{n-1}}, A_{r_n}), computed by the generic
/// recursion for n <= order.
Series dcumulant_table(const MatrixFamily& fam, int order);

/// The prescribed-cumulant family whose cyclic cumulants are read off D-cumulant data.
RCyclicFamily rcyclic_witness_from_dcumulants(const Series& dcumulants, int d, int s, int order);

}  // namespace ncfree
