#pragma once

#include "ncfree/series.hpp"

#include <map>
#include <optional>
#include <vector>

namespace ncfree {

/// A noncommutative probability space presented by the joint cumulants of m
/// generators. Unlisted cumulants vanish; moments are always derived.
class CumulantModel {
 public:
  CumulantModel(int generators, int order) : table_(generators, order) {}
  explicit CumulantModel(Series table) : table_(std::move(table)) {}

  int generators() const { return table_.alphabet(); }
  int order() const { return table_.order(); }

  /// k_n(g_{w_1}, ..., g_{w_n}) as a series over the generator alphabet.
  const Series& table() const { return table_; }

  Rational cumulant(const Word& w) const { return table_.coef(w); }
  void set_cumulant(const Word& w, const Rational& value) { table_.set(w, value); }

  friend bool operator==(const CumulantModel&, const CumulantModel&) = default;

 private:
  Series table_;
};

/// Noncommutative polynomial in the generators; the empty word is the unit I.
class NcPolynomial {
 public:
  using Terms = std::map<Word, Rational, ShortLex>;

  NcPolynomial() = default;
  NcPolynomial(int scalar) : NcPolynomial(Rational(scalar)) {}  // NOLINT: Eigen needs Scalar(0), Scalar(1)
  NcPolynomial(const Rational& scalar);                         // NOLINT

  static NcPolynomial generator(int g) { return monomial({g}); }
  static NcPolynomial monomial(const Word& w, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Largest word length present; 0 for scalars and for the zero polynomial.
  int degree() const;

  /// Coefficient of the empty word.
  Rational constant() const;

  /// Some g with *this == g·1, if any.
  std::optional<int> as_generator() const;

  NcPolynomial& operator+=(const NcPolynomial& other);
  NcPolynomial& operator-=(const NcPolynomial& other);
  NcPolynomial& operator*=(const NcPolynomial& other);

  friend NcPolynomial operator+(NcPolynomial a, const NcPolynomial& b) { return a += b; }
  friend NcPolynomial operator-(NcPolynomial a, const NcPolynomial& b) { return a -= b; }
  friend NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b);
  friend NcPolynomial operator-(const NcPolynomial& a);
  friend bool operator==(const NcPolynomial&, const NcPolynomial&) = default;

  std::string to_string() const;

 private:
  void add_term(const Word& w, const Rational& c);
  Terms terms_;
};

/// φ(g_{w_1} ⋯ g_{w_n}) = Σ_{π ∈ NC(n)} k_π. Throws std::out_of_range when |w| > order.
Rational phi_word(const CumulantModel& model, const Word& w);

/// Linear extension of phi_word with φ(I) = 1.
Rational phi_poly(const CumulantModel& model, const NcPolynomial& p);

/// Joint moment series of `elements` up to word length `order` (defaults to the
/// model order). A product whose degree exceeds the model order is an error.
Series moment_series(const CumulantModel& model, const std::vector<NcPolynomial>& elements, int order = 0);

/// M ⊛ Möb and R ⊛ Zeta.
Series r_transform(const Series& moments);
Series m_from_r(const Series& rtransform);

/// Free cumulants of `elements`, i.e. r_transform(moment_series(...)).
Series element_cumulants(const CumulantModel& model, const std::vector<NcPolynomial>& elements, int order = 0);

/// Cumulants from moments on a word set closed under restriction to sub-words:
/// k(w) = Σ_π M(w|π)·Möb(Kr π). Words outside the set are never consulted.
std::map<Word, Rational, ShortLex> cumulants_from_moments(const std::map<Word, Rational, ShortLex>& moments);

struct FreenessResult {
  bool free = true;
  Word witness;  // first mixed word with nonzero coefficient, in shortlex order
};

/// Whether R has no mixed coefficient across the blocks of `grouping` (a partition
/// of the alphabet).
FreenessResult check_free(const Series& rtransform, const Partition& grouping);

/// Right-hand side of the product-entry formula for k_{n-1}(x_1, ..., x_m x_{m+1}, ..., x_n),
/// each x a generator index; 1 <= m < n.
Rational product_cumulant(const CumulantModel& model, const std::vector<int>& xs, int m);

}  // namespace ncfree

namespace Eigen {

template <>
struct NumTraits<ncfree::NcPolynomial> : GenericNumTraits<ncfree::NcPolynomial> {
  using Real = ncfree::NcPolynomial;
  using NonInteger = ncfree::NcPolynomial;
  using Nested = ncfree::NcPolynomial;
  using Literal = ncfree::NcPolynomial;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 200,
    MulCost = 400
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
