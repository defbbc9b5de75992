#include "doctest.h"
#include "support.hpp"

using namespace ncfree;
using namespace ncfree::testing;

namespace {

ScalarMatrix diag(std::initializer_list<Rational> values) {
  ScalarMatrix m = zero_scalar(static_cast<int>(values.size()));
  int k = 0;
  for (const auto& v : values) m(k, k) = v, ++k;
  return m;
}

// Matrices with random degree-1 polynomial entries.
std::vector<PolyMatrix> random_linear_matrices(std::mt19937_64& rng, int d, int n, int generators) {
  std::uniform_int_distribution<int> pick(1, generators);
  std::vector<PolyMatrix> out;
  for (int m = 0; m < n; ++m) {
    PolyMatrix a = zero_poly(d);
    for (int k = 0; k < a.size(); ++k) {
      a.data()[k] = NcPolynomial::generator(pick(rng)) * NcPolynomial(small_rational(rng)) + NcPolynomial(small_rational(rng));
    }
    out.push_back(a);
  }
  return out;
}

std::vector<PolyMatrix> pick_matrices(const MatrixFamily& fam, const Word& r) {
  std::vector<PolyMatrix> xs;
  for (Letter l : r) xs.push_back(fam.matrices[static_cast<std::size_t>(l - 1)]);
  return xs;
}

}  // namespace

TEST_CASE("conditional expectations") {
  CumulantModel semi(1, 4);
  semi.set_cumulant({1, 1}, 1);
  PolyMatrix x = zero_poly(2);
  x(0, 0) = NcPolynomial::generator(1);
  CHECK(expect_b(semi, x) == zero_scalar(2));
  ScalarMatrix sq = expect_b(semi, x * x);
  CHECK(sq == matrix_unit(2, 1, 1));
  CHECK(expect_b(semi, identity_poly(3)) == ScalarMatrix(ScalarMatrix::Identity(3, 3)));
  ScalarMatrix b(2, 2);
  b << 1, 2, 3, 4;
  CHECK(expect_b(semi, lift(b)) == b);
  CHECK(expect_d(semi, lift(b)) == diag({1, 4}));
  CHECK(expect_d(semi, lift(matrix_unit(2, 1, 2))) == zero_scalar(2));
  CHECK(expect_d(semi, lift(matrix_unit(2, 1, 2) * matrix_unit(2, 2, 1))) == matrix_unit(2, 1, 1));
}

TEST_CASE("first two operator-valued cumulants") {
  std::mt19937_64 rng(41);
  CumulantModel model(random_series(rng, 3, 4, 0.5));
  auto xs = random_linear_matrices(rng, 2, 2, 3);
  for (Algebra alg : {Algebra::B, Algebra::D}) {
    auto E = [&](const PolyMatrix& x) { return alg == Algebra::B ? expect_b(model, x) : expect_d(model, x); };
    CHECK(opvalued_cumulant_generic(model, {xs[0]}, alg) == E(xs[0]));
    CHECK(opvalued_cumulant_generic(model, xs, alg) == ScalarMatrix(E(xs[0] * xs[1]) - E(xs[0]) * E(xs[1])));
  }
}

TEST_CASE("scalar case agrees with free cumulants") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 8; ++trial) {
    CumulantModel model(random_series(rng, 2, 4, 0.5));
    for (int n = 1; n <= 4; ++n) {
      for_each_word(2, n, [&](const Word& w) {
        std::vector<PolyMatrix> xs;
        for (Letter l : w) xs.push_back(PolyMatrix::Constant(1, 1, NcPolynomial::generator(l)));
        CHECK(opvalued_cumulant_generic(model, xs, Algebra::B)(0, 0) == model.cumulant(w));
      });
    }
  }
}

TEST_CASE("k_pi does not depend on which interval block is peeled first") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 4; ++trial) {
    CumulantModel model(random_series(rng, 3, 4, 0.4));
    auto xs = random_linear_matrices(rng, 2, 4, 3);
    for (const auto& pair : nc_table(4)) {
      for (Algebra alg : {Algebra::B, Algebra::D}) {
        CHECK(opvalued_cumulant_pi(model, pair.pi, xs, alg, Extraction::Leftmost) ==
              opvalued_cumulant_pi(model, pair.pi, xs, alg, Extraction::Rightmost));
      }
    }
  }
}

TEST_CASE("cumulants over NC(n) sum to the expectation") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 4; ++trial) {
    CumulantModel model(random_series(rng, 3, 4, 0.4));
    for (int n = 1; n <= 4; ++n) {
      auto xs = random_linear_matrices(rng, 2, n, 3);
      PolyMatrix product = xs[0];
      for (int k = 1; k < n; ++k) product = product * xs[static_cast<std::size_t>(k)];
      ScalarMatrix sum = zero_scalar(2);
      for (const auto& pair : nc_table(n)) sum += opvalued_cumulant_pi(model, pair.pi, xs, Algebra::B);
      CHECK(sum == expect_b(model, product));
    }
  }
}

TEST_CASE("entrywise B-valued cumulants") {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 10; ++trial) {
    auto fam = random_generator_family(rng, 2, 4, 3, 4);
    for (int n = 1; n <= 4; ++n) {
      Word r;
      for (int k = 0; k < n; ++k) r.push_back((trial + k) % 4 + 1);
      auto xs = pick_matrices(fam, r);
      auto entrywise = bvalued_cumulant_entrywise(fam.model, xs);
      CHECK(entrywise == opvalued_cumulant_generic(fam.model, xs, Algebra::B));
      CHECK(entrywise == ktilde_b(fam.model, odot(xs)));
      PolyMatrix product = xs[0];
      for (int k = 1; k < n; ++k) product = product * xs[static_cast<std::size_t>(k)];
      ScalarMatrix sum = zero_scalar(2);
      for (const auto& pair : nc_table(n)) {
        auto kpi = bvalued_cumulant_pi(fam.model, pair.pi, xs);
        CHECK(kpi == opvalued_cumulant_pi(fam.model, pair.pi, xs, Algebra::B));
        sum += kpi;
      }
      CHECK(sum == expect_b(fam.model, product));
    }
  }
  CumulantModel zero(3, 3);
  auto fam = random_generator_family(rng, 2, 2, 3, 3);
  CHECK(bvalued_cumulant_entrywise(zero, fam.matrices) == zero_scalar(2));
}

TEST_CASE("entries must be generator multiples for the entrywise formula") {
  auto fam = to_family(circular_spec(3));
  fam.matrices[0](0, 0) = NcPolynomial::generator(1) * NcPolynomial::generator(2);
  CHECK_THROWS_AS(bvalued_cumulant_entrywise(fam.model, {fam.matrices[0]}), std::invalid_argument);
}

TEST_CASE("D-valued cumulants by the chain formula") {
  std::mt19937_64 rng(46);
  std::vector<MatrixFamily> corpus = {to_family(circular_spec(4)), to_family(mixed_spec(4)), to_family(rdiagonal_spec(4)),
                                      to_family(two_free_spec(4))};
  for (int trial = 0; trial < 4; ++trial) corpus.push_back(realize(random_rcyclic(rng, 2, 2, 4, 0.3)));
  // Satisfies the chain hypothesis without being R-cyclic: k_2(a_11, a_22) couples two diagonal entries.
  corpus.push_back(to_family(parse_spec("order 4\ndim 2\nmatrices 1\ncumulant 1:1,1 1:2,2 = 1\nsemicircular r=1 i=1 radius 2\n")));
  CHECK_FALSE(is_rcyclic(corpus.back()).rcyclic);

  for (const auto& fam : corpus) {
    REQUIRE(check_chain_hypothesis(fam).holds);
    for (int n = 1; n <= 4; ++n) {
      for_each_word(fam.s(), n, [&](const Word& r) {
        std::vector<ScalarMatrix> lambdas;
        std::vector<PolyMatrix> xs;
        for (int k = 0; k < n - 1; ++k) {
          lambdas.push_back(diag({small_rational(rng), small_rational(rng)}));
          xs.push_back(fam.matrices[static_cast<std::size_t>(r[static_cast<std::size_t>(k)] - 1)] * lift(lambdas.back()));
        }
        xs.push_back(fam.matrices[static_cast<std::size_t>(r.back() - 1)]);
        CHECK(dvalued_cumulant(fam, r, lambdas) == opvalued_cumulant_generic(fam.model, xs, Algebra::D));

        std::vector<ScalarMatrix> units(static_cast<std::size_t>(n - 1), ScalarMatrix::Identity(2, 2));
        CHECK(dvalued_cumulant(fam, r, units) == ktilde_d(fam.model, odot(pick_matrices(fam, r))));
      });
    }
  }
}

TEST_CASE("projection weights pick out single cyclic cumulants") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 4; ++trial) {
    auto rc = random_rcyclic(rng, 2, 2, 4, 0.4);
    auto fam = realize(rc);
    for (int n = 1; n <= 4; ++n) {
      for_each_word(4, n, [&](const Word& w) {
        Word r;
        std::vector<ScalarMatrix> lambdas;
        for (std::size_t m = 0; m < w.size(); ++m) {
          r.push_back(pair_outer(w[m], 2));
          if (m + 1 < w.size()) lambdas.push_back(matrix_unit(2, pair_inner(w[m], 2), pair_inner(w[m], 2)));
        }
        int last = pair_inner(w.back(), 2);
        CHECK(dvalued_cumulant(fam, r, lambdas)(last - 1, last - 1) == rc.table.coef(w));
      });
    }
  }
}

TEST_CASE("scalar D-cumulants match the trace formula") {
  auto fam = to_family(equal_radii_spec(4));
  auto r = family_rtransform(determining_series(fam), 2);
  for (int n = 1; n <= 4; ++n) {
    Word w(static_cast<std::size_t>(n), 1);
    std::vector<ScalarMatrix> units(static_cast<std::size_t>(n - 1), ScalarMatrix::Identity(2, 2));
    auto k = dvalued_cumulant(fam, w, units);
    CHECK(k == ScalarMatrix(r.coef(w) * ScalarMatrix::Identity(2, 2)));
    CHECK(ktilde_c(fam.model, odot(pick_matrices(fam, w))) == r.coef(w));
  }
}

TEST_CASE("chain hypothesis violations are reported") {
  auto fam = to_family(parse_spec("order 3\ndim 2\nmatrices 1\ncumulant 1:1,1 1:1,2 = 1\n"));
  auto hyp = check_chain_hypothesis(fam);
  CHECK_FALSE(hyp.holds);
  CHECK(hyp.witness.r_word == Word{1, 1});
  CHECK(hyp.witness.indices == std::vector<int>{1, 1, 2});
  CHECK_THROWS_AS(dvalued_cumulant(fam, {1, 1}, {ScalarMatrix::Identity(2, 2)}), std::domain_error);
  CHECK_THROWS_AS(dvalued_cumulant(to_family(circular_spec(3)), {1, 1}, {}), std::invalid_argument);
}

TEST_CASE("amalgamated freeness over the diagonal") {
  for (const auto& spec : {diagonal_spec(4), circular_spec(4), mixed_spec(4), rdiagonal_spec(4), two_free_spec(4)}) {
    auto fam = to_family(spec);
    auto result = check_amalgamated_freeness(fam.model, fam.matrices, 4);
    CHECK(result.free);
    CHECK(result.words_checked > 0);
  }
  auto bad = to_family(parse_spec("order 4\ndim 2\nmatrices 1\nsemicircular r=1 i=1 radius 2\ncumulant 1:1,2 = 1\n"));
  auto result = check_amalgamated_freeness(bad.model, bad.matrices, 4);
  CHECK_FALSE(result.free);
  CHECK(result.witness == "E_D(c(A1) V[2,1] I)");
  CHECK(result.value(0, 0) == 1);
  CHECK(result.value(1, 1) == 0);

  CumulantModel any(1, 2);
  CHECK(check_amalgamated_freeness(any, {identity_poly(2)}, 2).free);
  CHECK_THROWS_AS(check_amalgamated_freeness(any, {identity_poly(2)}, 3), std::out_of_range);
}

TEST_CASE("D-cumulant data reproduces the cyclic table") {
  std::mt19937_64 rng(48);
  std::vector<RCyclicFamily> corpus;
  for (const auto& spec : {circular_spec(4), mixed_spec(4), rdiagonal_spec(4), two_free_spec(4)}) {
    auto fam = to_family(spec);
    corpus.push_back({fam.d, fam.s(), determining_series(fam)});
  }
  for (int trial = 0; trial < 3; ++trial) corpus.push_back(random_rcyclic(rng, 2, 2, 4, 0.3));
  for (const auto& rc : corpus) {
    auto fam = realize(rc);
    auto data = dcumulant_table(fam, 4);
    auto witness = rcyclic_witness_from_dcumulants(data, rc.d, rc.s, 4);
    CHECK(witness == rc);
    CHECK(family_moments(witness.table, rc.d) == family_moments(rc.table, rc.d));
  }
  CHECK(rcyclic_witness_from_dcumulants(Series(4, 3), 2, 2, 3).table.is_zero());

  auto alt = dcumulant_table(to_family(rdiagonal_spec(4)), 4);
  Series expected(2, 4);
  expected.set({1, 2}, 1);
  expected.set({2, 1}, 1);
  expected.set({1, 2, 1, 2}, Rational(-1, 2));
  expected.set({2, 1, 2, 1}, Rational(-1, 2));
  CHECK(alt == expected);
}
