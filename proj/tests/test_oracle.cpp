#include <catch2/catch_amalgamated.hpp>

#include "sympbf/models.hpp"
#include "sympbf/oracle.hpp"
#include "test_support.hpp"

using namespace sympbf;
using namespace sympbf::testing;

TEST_CASE("brute_values tabulates by direct monomial products") {
  SECTION("3-variable delta") {
    CHECK(brute_values(make_delta(3)) == std::vector<Rational>{1, 0, 0, 0, 0, 0, 0, 1});
  }

  SECTION("constant 7 on two variables") {
    const auto f = MultilinearPBF::from_terms(2, {{0b00, 7}});
    CHECK(brute_values(f) == std::vector<Rational>{7, 7, 7, 7});
  }

  SECTION("4-variable parity table") {
    const auto values = brute_values(make_xor(4));
    REQUIRE(values.size() == 16);
    for (std::uint64_t x = 0; x < 16; ++x) CHECK(values[x] == std::popcount(x) % 2);
  }

  SECTION("refuses n above the limit") {
    CHECK_THROWS_AS(brute_values(MultilinearPBF(12), 10), EnumerationLimitError);
  }
}

TEST_CASE("brute_kernel_size counts exact zeros") {
  CHECK(brute_kernel_size(make_delta(3)) == 6);
  CHECK(brute_kernel_size(make_xor(3)) == 4);
  CHECK(brute_kernel_size(MultilinearPBF::from_terms(2, {{0b00, 1}})) == 0);
  CHECK(brute_kernel_size(MultilinearPBF(4)) == 16);
}

TEST_CASE("brute_extrema finds the exact Boolean range") {
  CHECK(brute_extrema(make_delta(3)) == std::pair<Rational, Rational>{0, 1});
  CHECK(brute_extrema(make_ising(IsingParams(3, 1, 0))) == std::pair<Rational, Rational>{0, Rational(3, 2)});
  const auto f = MultilinearPBF::from_terms(2, {{0b01, 1}, {0b10, -1}});
  CHECK(brute_extrema(f) == std::pair<Rational, Rational>{-1, 1});
}

TEST_CASE("brute_symmetric_check inspects weight classes semantically") {
  CHECK(brute_symmetric_check(MultilinearPBF::from_terms(2, {{0b01, 1}, {0b10, 1}, {0b11, -2}})));
  CHECK_FALSE(brute_symmetric_check(MultilinearPBF::from_terms(2, {{0b01, 1}})));
  CHECK(brute_symmetric_check(make_ising(IsingParams(5, Rational(2, 3), Rational(-1, 7)))));
  CHECK_THROWS_AS(brute_symmetric_check(MultilinearPBF(11)), EnumerationLimitError);
}

TEST_CASE("oracle agrees with the optimized evaluation path") {
  auto rng = make_rng(0x5eed0401);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = static_cast<int>(rng() % 13);
    const auto f = random_pbf(rng, n);
    const auto values = brute_values(f);
    for (std::uint64_t x = 0; x < values.size(); ++x)
      CHECK(values[x] == eval_boolean(f, BooleanPoint(n, x)));
  }
}

TEST_CASE("both symmetry checks agree on random and symmetrized functions") {
  auto rng = make_rng(0x5eed0402);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = static_cast<int>(rng() % 11);
    const auto f = random_pbf(rng, n);
    CHECK(brute_symmetric_check(f) == is_symmetric(f));
    const auto g = from_symmetric(random_symmetric_coeffs(rng, n));
    CHECK(brute_symmetric_check(g));
    CHECK(is_symmetric(g));
  }
}
