#pragma once

#include "ncfree/freeprob.hpp"

#include <Eigen/Core>

#include <string>

namespace ncfree {

/// d×d matrix over M_d(A): entries are polynomials in the model's generators.
using PolyMatrix = Eigen::Matrix<NcPolynomial, Eigen::Dynamic, Eigen::Dynamic>;

/// d×d matrix of exact scalars: elements of B = M_d(C) and of its diagonal D.
using ScalarMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// V_{i,j}: 1 at (i,j), 1-based.
ScalarMatrix matrix_unit(int d, int i, int j);

inline ScalarMatrix zero_scalar(int d) { return ScalarMatrix::Constant(d, d, Rational(0)); }
inline PolyMatrix zero_poly(int d) { return PolyMatrix::Constant(d, d, NcPolynomial()); }

/// Embeds B into M_d(A) through λ ↦ λ·I.
PolyMatrix lift(const ScalarMatrix& m);

PolyMatrix identity_poly(int d);

/// Largest entry degree.
int degree(const PolyMatrix& m);

/// Row-major, one row per line, entries `p/q` separated by tabs.
std::string to_tsv(const ScalarMatrix& m);

bool is_diagonal(const ScalarMatrix& m);

}  // namespace ncfree
