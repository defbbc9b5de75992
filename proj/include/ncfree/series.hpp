#pragma once

#include "ncfree/ncpartition.hpp"
#include "ncfree/rational.hpp"
#include "ncfree/word.hpp"

#include <map>
#include <string>

namespace ncfree {

/// Truncated noncommutative power series without constant term.
///
/// Invariants: every stored word has length in [1, order], letters in
/// [1, alphabet], and a nonzero coefficient.
class Series {
 public:
  using Terms = std::map<Word, Rational, ShortLex>;

  Series(int alphabet, int order);

  int alphabet() const { return alphabet_; }
  int order() const { return order_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Throws std::out_of_range when |w| exceeds the order: truncation is not zero.
  Rational coef(const Word& w) const;

  void set(const Word& w, const Rational& value);
  void add_to(const Word& w, const Rational& value);

  /// Drops every word longer than `new_order` (which may not exceed order()).
  Series truncated(int new_order) const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  void check_word(const Word& w) const;

  int alphabet_;
  int order_;
  Terms terms_;
};

Series operator+(const Series& f, const Series& g);
Series operator-(const Series& f, const Series& g);
Series operator*(const Rational& a, const Series& f);

/// Product over blocks of p of coef(f, w|B).
Rational gen_coef(const Series& f, const Word& w, const Partition& p);

/// f ⊛ g. Operands must share alphabet and order.
Series boxed_convolve(const Series& f, const Series& g);

/// f ⊛̃ g for f over the pair alphabet s*d and g over d; g reads the inner index
/// of each pair letter.
Series ext_boxed_convolve(const Series& f, const Series& g);

/// Inverse under ⊛; throws std::domain_error if a degree-1 coefficient vanishes.
Series boxed_inverse(const Series& f);

/// f(a z_1, ..., a z_s).
Series dilate(const Series& f, const Rational& a);

Series zeta(int s, int order);
Series moebius(int s, int order);
Series delta(int s, int order);

/// Coefficient 1 on every constant word (i,...,i), over d letters.
Series geometric(int d, int order);

/// G_d ⊛ (d · Möb_d ∘ D_{1/d}).
Series h_series(int d, int order);

/// Signed Catalan coefficient of Möb at length n.
Rational moebius_coefficient(int n);

/// Dense cost estimate of one convolution: sum over lengths of Catalan(n) * s^n.
double convolution_cost(int alphabet, int order);

/// One line per term: `w<TAB>p/q`. With pair_d > 0 letters print as `r:i`.
std::string to_tsv(const Series& f, int pair_d = 0);

}  // namespace ncfree
