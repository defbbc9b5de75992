#include "ncfree/matrix.hpp"

#include <sstream>

namespace ncfree {

ScalarMatrix matrix_unit(int d, int i, int j) {
  ScalarMatrix m = zero_scalar(d);
  m(i - 1, j - 1) = 1;
  return m;
}

PolyMatrix lift(const ScalarMatrix& m) {
  PolyMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = NcPolynomial(m(i, j));
  }
  return out;
}

PolyMatrix identity_poly(int d) {
  PolyMatrix out = zero_poly(d);
  for (int i = 0; i < d; ++i) out(i, i) = NcPolynomial(1);
  return out;
}

int degree(const PolyMatrix& m) {
  int deg = 0;
  for (Eigen::Index i = 0; i < m.size(); ++i) deg = std::max(deg, m.data()[i].degree());
  return deg;
}

std::string to_tsv(const ScalarMatrix& m) {
  std::ostringstream out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << (j ? "\t" : "") << to_string(m(i, j));
    out << '\n';
  }
  return out.str();
}

bool is_diagonal(const ScalarMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (i != j && m(i, j) != 0) return false;
    }
  }
  return true;
}

}  // namespace ncfree
