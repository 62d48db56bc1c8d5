#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tenscat/weightcalc.hpp"

using namespace tenscat;

namespace {

Weight w(std::initializer_list<std::pair<int, int>> pairs) {
  Weight out;
  for (const auto& [j, n] : pairs) out.add(j, n);
  return out;
}

std::int64_t ipow(int base, int exp) {
  std::int64_t out = 1;
  for (int t = 0; t < exp; ++t) out *= base;
  return out;
}

// Relabel coordinates a <-> a+1 in every weight of the map.
WeightMultiplicities transpose_coords(const WeightMultiplicities& wm, int a) {
  WeightMultiplicities out;
  for (const auto& [weight, mult] : wm) {
    Weight moved;
    for (const auto& [j, n] : weight.coeffs()) {
      int jj = j;
      if (j == a) jj = a + 1;
      else if (j == a + 1) jj = a;
      moved.add(jj, n);
    }
    out[moved] += mult;
  }
  return out;
}

}  // namespace

TEST_CASE("weight arithmetic and text form") {
  CHECK(Weight{}.text() == "");
  CHECK(w({{1, 1}, {3, -1}}).text() == "1:1,3:-1");
  CHECK((w({{1, 1}}) + w({{1, -1}})).zero());
  CHECK((w({{2, 2}}) - w({{2, 2}})).text() == "");
  CHECK_THROWS_AS(Weight::basis(0), DomainError);
}

TEST_CASE("weight_multiplicity examples") {
  CHECK(weight_multiplicity(1, 1, 2, 3, w({{1, 1}, {3, -1}})) == 1);
  CHECK(weight_multiplicity(1, 1, 2, 2, Weight{}) == 2);
  CHECK(weight_multiplicity(1, 0, 5, 0, w({{2, 1}})) == 1);
  CHECK(weight_multiplicity(1, 1, 2, 3, w({{3, 1}})) == 0);

  CHECK_THROWS_AS(weight_multiplicity(6, 0, 1, 1, Weight{}), BoundError);
  CHECK_THROWS_AS(weight_multiplicity(1, 1, 9, 1, Weight{}), BoundError);
  CHECK_THROWS_AS(weight_multiplicity(-1, 0, 1, 1, Weight{}), DomainError);
}

TEST_CASE("weight_support_check implements the three printed constraints") {
  CHECK(weight_support_check(1, 1, 2, w({{1, 1}, {3, -1}})));
  CHECK_FALSE(weight_support_check(1, 0, 1, w({{2, 1}})));  // positive past i
  CHECK(weight_support_check(0, 0, 1, Weight{}));

  CHECK_FALSE(weight_support_check(1, 1, 2, w({{1, 2}, {2, -2}})));  // n_1 > p
  CHECK_FALSE(weight_support_check(1, 2, 2, w({{1, -3}, {2, 2}})));  // n_1 < -q
  CHECK_FALSE(weight_support_check(2, 1, 2, w({{1, 2}})));           // sum != p-q
  CHECK(weight_support_check(2, 1, 2, w({{1, 2}, {4, -1}})));
}

TEST_CASE("enumerate_weights examples") {
  CHECK(enumerate_weights(1, 0, 2, 0) ==
        WeightMultiplicities{{w({{1, 1}}), 1}, {w({{2, 1}}), 1}});
  CHECK(enumerate_weights(0, 1, 0, 2) ==
        WeightMultiplicities{{w({{1, -1}}), 1}, {w({{2, -1}}), 1}});
  CHECK(enumerate_weights(1, 1, 2, 2) ==
        WeightMultiplicities{{w({{1, 1}, {2, -1}}), 1},
                             {w({{1, -1}, {2, 1}}), 1},
                             {Weight{}, 2}});
}

TEST_CASE("mass, support and pointwise consistency") {
  for (int p = 0; p <= 2; ++p) {
    for (int q = 0; q <= 2; ++q) {
      for (int i = 0; i <= 4; ++i) {
        for (int j = 0; j <= 4; ++j) {
          const auto wm = enumerate_weights(p, q, i, j);
          std::int64_t mass = 0;
          for (const auto& [chi, mult] : wm) {
            CHECK(mult > 0);
            mass += mult;
            CHECK(weight_support_check(p, q, i, chi));
            CHECK(weight_multiplicity(p, q, i, j, chi) == mult);
          }
          CHECK(mass == ipow(i, p) * ipow(j, q));
        }
      }
    }
  }
}

TEST_CASE("convolution kernel equals brute-force tuple enumeration") {
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q)
      for (int i = 0; i <= 4; ++i)
        for (int j = 0; j <= 4; ++j)
          CHECK(enumerate_weights(p, q, i, j) == enumerate_weights_brute(p, q, i, j));

  CHECK(enumerate_weights(3, 2, 5, 4) == enumerate_weights_brute(3, 2, 5, 4));
}

TEST_CASE("transposing two covariant coordinates fixes the multiplicity map") {
  for (int p = 0; p <= 2; ++p) {
    for (int q = 0; q <= 2; ++q) {
      const int i = 4, j = 4;
      const auto wm = enumerate_weights(p, q, i, j);
      for (int a = 1; a + 1 <= i; ++a) CHECK(transpose_coords(wm, a) == wm);
    }
  }
}
