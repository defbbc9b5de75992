#include "doctest.h"
#include "ncfree/series.hpp"
#include "support.hpp"

using namespace ncfree;
using ncfree::testing::random_series;

namespace {

Series dense_by_definition(const Series& f, const Series& g) {
  Series out(f.alphabet(), f.order());
  for (int n = 1; n <= f.order(); ++n) {
    for_each_word(f.alphabet(), n, [&](const Word& w) {
      Rational sum = 0;
      for (const auto& pair : nc_table(n)) sum += gen_coef(f, w, pair.pi) * gen_coef(g, w, pair.kr);
      out.set(w, sum);
    });
  }
  return out;
}

bool no_stored_zeros(const Series& f) {
  for (const auto& [w, c] : f.terms()) {
    if (c == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("coefficient access respects the truncation boundary") {
  Series f(2, 3);
  f.set({1, 2}, ratio(3, 6));
  CHECK(f.coef({1, 2}) == Rational(1, 2));
  CHECK(f.coef({2, 1}) == 0);
  CHECK_THROWS_AS(f.coef({1, 1, 1, 1}), std::out_of_range);
  CHECK_THROWS_AS(f.coef({3}), std::out_of_range);
  CHECK_THROWS_AS(f.set({}, 1), std::invalid_argument);
  f.set({1, 2}, 0);
  CHECK(f.is_zero());
  f.add_to({1}, 1);
  f.add_to({1}, -1);
  CHECK(f.is_zero());
}

TEST_CASE("special series") {
  auto z = zeta(2, 4);
  auto m = moebius(2, 4);
  auto dl = delta(2, 4);
  CHECK(z.coef({2, 1, 2}) == 1);
  CHECK(m.coef({1, 2, 1}) == 2);
  const int expected[] = {1, -1, 2, -5, 14};
  for (int n = 1; n <= 5; ++n) CHECK(moebius_coefficient(n) == expected[n - 1]);
  CHECK(dl.coef({2}) == 1);
  CHECK(dl.coef({2, 2}) == 0);
  CHECK(dl.terms().size() == 2);
  CHECK(boxed_convolve(z, m) == dl);
  CHECK(boxed_convolve(dl, dl) == dl);
  CHECK(boxed_inverse(z) == m);
  CHECK(boxed_inverse(dl) == dl);
  auto g = geometric(3, 4);
  CHECK(g.coef({2, 2, 2}) == 1);
  CHECK(g.coef({2, 2, 1}) == 0);
}

TEST_CASE("generalized coefficient") {
  Series f(4, 4);
  f.set({1, 3}, 2);
  f.set({2}, 3);
  f.set({4}, 5);
  CHECK(gen_coef(f, {1, 2, 3, 4}, Partition::parse("{1,3}{2}{4}")) == 30);
  CHECK(gen_coef(f, {1, 3}, Partition::one(2)) == 2);
  CHECK(gen_coef(f, {1, 2, 3, 4}, Partition::singletons(4)) == 0);
  CHECK_THROWS_AS(gen_coef(f, {1, 2}, Partition::one(3)), std::invalid_argument);
}

TEST_CASE("support-driven convolution equals the definition") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    int s = 1 + trial % 3;
    auto f = random_series(rng, s, 4, 0.3);
    auto g = random_series(rng, s, 4, 0.5);
    auto h = boxed_convolve(f, g);
    CHECK(h == dense_by_definition(f, g));
    CHECK(no_stored_zeros(h));
  }
}

TEST_CASE("convolution is associative and unital") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 15; ++trial) {
    int s = 1 + trial % 3;
    auto f = random_series(rng, s, 5, 0.15);
    auto g = random_series(rng, s, 5, 0.15);
    auto h = random_series(rng, s, 5, 0.15);
    CHECK(boxed_convolve(boxed_convolve(f, g), h) == boxed_convolve(f, boxed_convolve(g, h)));
    CHECK(boxed_convolve(f, delta(s, 5)) == f);
    CHECK(boxed_convolve(delta(s, 5), f) == f);
  }
  CHECK_THROWS_AS(boxed_convolve(zeta(1, 3), zeta(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(boxed_convolve(zeta(1, 3), zeta(1, 4)), std::invalid_argument);
}

TEST_CASE("inversion round trip") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = random_series(rng, 2, 5, 0.3, true);
    auto g = boxed_inverse(f);
    CHECK(boxed_convolve(f, g) == delta(2, 5));
    CHECK(boxed_convolve(g, f) == delta(2, 5));
    CHECK(boxed_inverse(g) == f);
  }
  Series singular(2, 3);
  singular.set({1}, 1);
  CHECK_THROWS_AS(boxed_inverse(singular), std::domain_error);
}

TEST_CASE("dilation") {
  std::mt19937_64 rng(14);
  auto f = random_series(rng, 2, 4, 0.5);
  CHECK(dilate(f, 1) == f);
  CHECK(dilate(f, 0).is_zero());
  auto g = dilate(f, Rational(1, 3));
  for (const auto& [w, c] : f.terms()) CHECK(g.coef(w) == c * pow(Rational(1, 3), static_cast<int>(w.size())));
}

TEST_CASE("extended convolution identities") {
  std::mt19937_64 rng(15);
  const Rational alphas[] = {Rational(2), Rational(-1), Rational(1, 3)};
  for (int trial = 0; trial < 12; ++trial) {
    const int s = 1 + trial % 2;
    const int d = 2 + trial % 2;
    const int N = 4;
    auto f = random_series(rng, s * d, N, 0.1);
    auto g = random_series(rng, d, N, 0.3);
    auto h = random_series(rng, d, N, 0.3);
    CHECK(ext_boxed_convolve(ext_boxed_convolve(f, g), h) == ext_boxed_convolve(f, boxed_convolve(g, h)));
    CHECK(ext_boxed_convolve(f, zeta(d, N)) == boxed_convolve(f, zeta(s * d, N)));
    CHECK(ext_boxed_convolve(f, moebius(d, N)) == boxed_convolve(f, moebius(s * d, N)));
    const Rational& a = alphas[trial % 3];
    CHECK(ext_boxed_convolve(dilate(f, a), g) == dilate(ext_boxed_convolve(f, g), a));
    CHECK(ext_boxed_convolve(a * f, a * g) == a * dilate(ext_boxed_convolve(f, g), a));
    CHECK(ext_boxed_convolve(a * f, g) == a * ext_boxed_convolve(f, (1 / a) * dilate(g, a)));
  }
  auto f1 = random_series(rng, 3, 4, 0.3);
  auto g1 = random_series(rng, 3, 4, 0.3);
  CHECK(ext_boxed_convolve(f1, g1) == boxed_convolve(f1, g1));  // s = 1
  CHECK_THROWS_AS(ext_boxed_convolve(zeta(5, 3), zeta(2, 3)), std::invalid_argument);
}

TEST_CASE("H_d truncation to order three") {
  for (int d = 2; d <= 3; ++d) {
    auto h = h_series(d, 3);
    const Rational inv(1, d);
    for_each_word(d, 1, [&](const Word& w) { CHECK(h.coef(w) == 1); });
    for_each_word(d, 2, [&](const Word& w) { CHECK(h.coef(w) == Rational(w[0] == w[1]) - inv); });
    for_each_word(d, 3, [&](const Word& w) {
      Rational expected = Rational(w[0] == w[1] && w[1] == w[2]) -
                          inv * (Rational(w[0] == w[1]) + Rational(w[0] == w[2]) + Rational(w[1] == w[2])) + 2 * inv * inv;
      CHECK(h.coef(w) == expected);
    });
  }
  auto h2 = h_series(2, 3);
  for (const auto& [w, c] : h2.terms()) CHECK(w.size() < 3);
}

TEST_CASE("H_d two constructions agree") {
  for (int d = 1; d <= 4; ++d) {
    const int N = d <= 3 ? 6 : 5;
    auto g = geometric(d, N);
    CHECK(h_series(d, N) == Rational(d) * boxed_convolve(Rational(1, d) * g, moebius(d, N)));
  }
}

TEST_CASE("H_d slot sums vanish beyond degree one") {
  for (int d = 1; d <= 3; ++d) {
    auto h = h_series(d, 5);
    for (int n = 2; n <= 5; ++n) {
      for (int slot = 0; slot < n; ++slot) {
        for_each_word(d, n, [&](const Word& w) {
          if (w[static_cast<std::size_t>(slot)] != 1) return;
          Rational sum = 0;
          Word v = w;
          for (int i = 1; i <= d; ++i) {
            v[static_cast<std::size_t>(slot)] = i;
            sum += h.coef(v);
          }
          CHECK(sum == 0);
        });
      }
    }
  }
}

TEST_CASE("TSV emission") {
  Series f(4, 2);
  f.set({3}, 3);
  f.set({1, 2}, Rational(-1, 2));
  CHECK(to_tsv(f) == "3\t3/1\n1,2\t-1/2\n");
  CHECK(to_tsv(f, 2) == "2:1\t3/1\n1:1,1:2\t-1/2\n");
  CHECK(convolution_cost(2, 3) == doctest::Approx(1 * 2 + 2 * 4 + 5 * 8));
}
