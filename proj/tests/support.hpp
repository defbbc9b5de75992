#pragma once

#include "ncfree/opvalued.hpp"
#include "ncfree/series.hpp"
#include "ncfree/specfile.hpp"

#include <random>

namespace ncfree::testing {

inline Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  return ratio(num(rng), den(rng));
}

inline Rational nonzero_rational(std::mt19937_64& rng) {
  Rational x = 0;
  while (x == 0) x = small_rational(rng);
  x.canonicalize();
  return x;
}

/// Each word is kept with probability `density`; degree-1 coefficients are forced
/// nonzero when `invertible`.
inline Series random_series(std::mt19937_64& rng, int alphabet, int order, double density, bool invertible = false) {
  Series f(alphabet, order);
  std::bernoulli_distribution keep(density);
  for (int n = 1; n <= order; ++n) {
    for_each_word(alphabet, n, [&](const Word& w) {
      if (n == 1 && invertible) {
        f.set(w, nonzero_rational(rng));
      } else if (keep(rng)) {
        Rational x = small_rational(rng);
        x.canonicalize();
        f.set(w, x);
      }
    });
  }
  return f;
}

inline RCyclicFamily random_rcyclic(std::mt19937_64& rng, int d, int s, int order, double density) {
  return {d, s, random_series(rng, s * d, order, density)};
}

/// d×d matrices whose entries are single generators (or zero) from a random model.
inline MatrixFamily random_generator_family(std::mt19937_64& rng, int d, int s, int generators, int order) {
  CumulantModel model(random_series(rng, generators, order, 0.35));
  std::uniform_int_distribution<int> pick(0, generators);
  MatrixFamily fam{model, d, {}};
  for (int r = 0; r < s; ++r) {
    PolyMatrix a = zero_poly(d);
    for (int k = 0; k < a.size(); ++k) {
      int g = pick(rng);
      if (g > 0) a.data()[k] = NcPolynomial::generator(g);
    }
    fam.matrices.push_back(a);
  }
  return fam;
}

/// Diagonal matrix of two free semicirculars (k_2 = 1 and 4).
inline SpecFile diagonal_spec(int order) { return gaussian_spec({{{2, 0}, {0, 4}}}, order); }

/// [[0, c], [c*, 0]] with c circular of radius 2.
inline SpecFile circular_spec(int order) { return gaussian_spec({{{0, 2}, {2, 0}}}, order); }

/// Semicircular diagonal, circular off-diagonal, distinct radii.
inline SpecFile mixed_spec(int order) { return gaussian_spec({{{2, 3}, {3, 1}}}, order); }

/// All radii 2.
inline SpecFile equal_radii_spec(int order, int s = 1) {
  std::vector<std::vector<std::vector<Rational>>> grids(static_cast<std::size_t>(s), {{2, 2}, {2, 2}});
  return gaussian_spec(grids, order);
}

/// Two matrices of the mixed kind over free entry families.
inline SpecFile two_free_spec(int order) { return gaussian_spec({{{2, 3}, {3, 1}}, {{1, 2}, {2, 2}}}, order); }

/// Non-Gaussian R-diagonal entry: alternating cumulants of orders 2 and 4.
inline SpecFile rdiagonal_spec(int order) {
  return parse_spec("order " + std::to_string(order) +
                    "\ndim 2\nmatrices 1\n"
                    "cumulant 1:1,2 1:2,1 = 1\ncumulant 1:2,1 1:1,2 = 1\n"
                    "cumulant 1:1,2 1:2,1 1:1,2 1:2,1 = -1/2\ncumulant 1:2,1 1:1,2 1:2,1 1:1,2 = -1/2\n");
}

}  // namespace ncfree::testing
