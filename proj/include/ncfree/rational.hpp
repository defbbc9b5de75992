#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <string>
#include <string_view>

namespace ncfree {

/// Exact rational with arbitrary-precision numerator and denominator.
using Rational = mpq_class;

/// Formats as `p/q` in lowest terms with q > 0, integers included (`3/1`).
std::string to_string(const Rational& x);

/// Accepts `p/q` or a bare integer `p`; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

/// num/den in lowest terms; mpq_class(num, den) alone leaves the fraction uncanonicalized.
Rational ratio(long num, long den);

Rational pow(const Rational& base, int exponent);

double to_double(const Rational& x);

}  // namespace ncfree

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = mpq_class;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
