#pragma once

#include "ncfree/matrix.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ncfree {

/// Generator index of entry (i,j) of matrix r in the canonical presentation:
/// ((r-1)·d + (i-1))·d + j, all 1-based.
int entry_generator(int r, int i, int j, int d);

struct EntryIndex {
  int r, i, j;
  friend bool operator==(const EntryIndex&, const EntryIndex&) = default;
};
EntryIndex entry_of_generator(int g, int d);

/// s matrices of size d over a shared model.
struct MatrixFamily {
  CumulantModel model;
  int d = 0;
  std::vector<PolyMatrix> matrices;

  int s() const { return static_cast<int>(matrices.size()); }
};

/// Matrices whose entries are the model's generators, laid out by entry_generator.
/// The model must have exactly s·d·d generators.
MatrixFamily canonical_family(CumulantModel model, int d, int s);

/// An R-cyclic family presented by its determining series alone: the coefficient
/// at ((r_1,i_1),...,(r_n,i_n)) is k_n(a^{(r_1)}_{i_n,i_1}, a^{(r_2)}_{i_1,i_2}, ...).
struct RCyclicFamily {
  int d = 0;
  int s = 0;
  Series table{1, 1};

  friend bool operator==(const RCyclicFamily&, const RCyclicFamily&) = default;
};

/// A canonical MatrixFamily realizing the table: its only nonzero cumulants are the
/// cyclic ones prescribed by `fam`.
MatrixFamily realize(const RCyclicFamily& fam);

/// Generator word k_n is evaluated on for the cyclic argument list of
/// ((r_1,i_1),...,(r_n,i_n)) in the canonical presentation.
Word cyclic_generator_word(const Word& pair_word, int d);

struct CyclicityWitness {
  std::vector<EntryIndex> entries;  // argument list of the offending cumulant
  Rational value;

  std::string describe() const;
};

struct RCyclicResult {
  bool rcyclic = true;
  CyclicityWitness witness;
};

/// Def 2.9 up to the model order. Entries must be generators (coefficient 1) or zero;
/// throws std::invalid_argument otherwise. The witness is the first violation in
/// shortlex order of the generator words.
RCyclicResult is_rcyclic(const MatrixFamily& fam);

/// Throws std::domain_error carrying the witness when the family is not R-cyclic.
Series determining_series(const MatrixFamily& fam);

/// Sums a pair-alphabet series over inner indices: z_{r,i} ↦ z_r.
Series substitute_outer(const Series& g, int d);

/// (1/d)(f ⊛̃ G_d) with z_{r,i} ↦ z_r.
Series family_moments(const Series& f, int d);

/// (1/d)(f ⊛̃ H_d) with z_{r,i} ↦ z_r.
Series family_rtransform(const Series& f, int d);

enum class Projection { Moments, RTransform };

/// (1/d)(f ⊛̃ G_d) or (1/d)(f ⊛̃ H_d), left over the pair alphabet.
Series projected_series(const Series& f, int d, Projection which);

/// Raised when the partial sums over i_1..i_{n-1} depend on i_n.
class PartialSumViolation : public std::domain_error {
 public:
  PartialSumViolation(Word r_word, int i_n, int i_n_prime, Rational sum, Rational sum_prime);

  const Word r_word;
  const int i_n, i_n_prime;
  const Rational sum, sum_prime;
};

/// R(z) = Σ λ_{r_1..r_n} z_{r_1}⋯z_{r_n} from the partial sums of f; the
/// independence of the sums from i_n is checked for every r-word.
Series partial_sum_rtransform(const Series& f, int d);

struct PartitionTerm {
  Partition pi;
  Rational value;
};

/// T_π = (1/d) Σ_{i_1..i_n} gen_coef(f, ((r,i)), π)·gen_coef(H_d, i, Kr π) for every π ∈ NC(n).
std::vector<PartitionTerm> partial_sum_terms(const Series& f, int d, const Word& r_word);

struct ClosureResult {
  bool rcyclic = true;
  CyclicityWitness witness;  // r = s+1 denotes the adjoined matrix
};

/// Whether fam ∪ {new_matrix} is R-cyclic, from the moments of all entries inverted to
/// cumulants over entry words of length <= budget and total degree <= min(budget, order).
ClosureResult closure_check(const MatrixFamily& fam, const PolyMatrix& new_matrix, int budget);

}  // namespace ncfree
