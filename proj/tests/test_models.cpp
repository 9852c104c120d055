#include <catch2/catch_amalgamated.hpp>

#include "sympbf/models.hpp"
#include "sympbf/factor.hpp"
#include "sympbf/oracle.hpp"
#include "test_support.hpp"

using namespace sympbf;
using namespace sympbf::testing;

namespace {

FactoredForm factor_model(const MultilinearPBF& f) {
  return find_roots(to_univariate(series_from_symmetric(to_symmetric(f))), {}, f.n());
}

}  // namespace

TEST_CASE("make_delta builds the indicator of the two constant inputs") {
  const auto f = make_delta(3);
  CHECK(f == MultilinearPBF::from_terms(3, {{0b000, 1},
                                            {0b001, -1},
                                            {0b010, -1},
                                            {0b100, -1},
                                            {0b011, 1},
                                            {0b101, 1},
                                            {0b110, 1}}));
  CHECK_THROWS_AS(make_delta(1), std::invalid_argument);

  SECTION("k = 3 factors as (1/2)(1 - X)(2 - X)") {
    const auto fact = factor_model(f);
    CHECK(fact.constant == Rational(1, 2));
    REQUIRE(fact.roots.size() == 2);
    CHECK(*fact.roots[0].exact_value == 1);
    CHECK(*fact.roots[1].exact_value == 2);
  }
}

TEST_CASE("delta product structure, brute-force verified for k = 2..8") {
  // Odd k: degree k-1, simple roots 1..k-1, constant 1/(k-1)!.
  // Even k: the top multilinear coefficient is 1 + (-1)^k = 2, so the
  // degree is k, the root k/2 doubles, and the constant is 2/k!.
  for (int k = 2; k <= 8; ++k) {
    const auto f = make_delta(k);
    const auto values = brute_values(f);
    for (std::uint64_t x = 0; x < values.size(); ++x) {
      const bool constant_input = x == 0 || x == ((1ull << k) - 1);
      CHECK(values[x] == (constant_input ? 1 : 0));
    }

    const auto fact = factor_model(f);
    CHECK(fact.all_exact);
    if (k % 2 == 1) {
      CHECK(fact.degree == k - 1);
      CHECK(fact.constant == Rational(1, factorial(static_cast<unsigned>(k - 1))));
      REQUIRE(fact.roots.size() == static_cast<std::size_t>(k - 1));
      for (int l = 1; l < k; ++l) {
        CHECK(*fact.roots[static_cast<std::size_t>(l - 1)].exact_value == l);
        CHECK(fact.roots[static_cast<std::size_t>(l - 1)].multiplicity == 1);
      }
    } else {
      CHECK(fact.degree == k);
      CHECK(fact.constant == Rational(2, factorial(static_cast<unsigned>(k))));
      REQUIRE(fact.roots.size() == static_cast<std::size_t>(k - 1));
      for (int l = 1; l < k; ++l) {
        const auto& entry = fact.roots[static_cast<std::size_t>(l - 1)];
        CHECK(*entry.exact_value == l);
        CHECK(entry.multiplicity == (l == k / 2 ? 2 : 1));
      }
    }

    const auto report = classify_kernel(fact, k);
    CHECK(report.kernel_size == (Integer(1) << k) - 2);
    CHECK(report.kernel_size == Integer(brute_kernel_size(f)));
  }
}

TEST_CASE("make_xor builds parity") {
  SECTION("one variable is the identity") {
    CHECK(make_xor(1) == MultilinearPBF::from_terms(1, {{0b1, 1}}));
  }

  SECTION("parity identity holds exhaustively up to n = 12") {
    for (int n = 1; n <= 12; ++n) {
      const auto f = make_xor(n);
      const auto values = brute_values(f);
      for (std::uint64_t x = 0; x < values.size(); ++x)
        CHECK(values[x] == std::popcount(x) % 2);
    }
  }

  SECTION("elementary-symmetric coefficients follow a_r = (-2)^(r-1)") {
    for (int n = 1; n <= 10; ++n) {
      const auto sym = to_symmetric(make_xor(n));
      CHECK(sym.a[0] == 0);
      for (int r = 1; r <= n; ++r)
        CHECK(sym.a[static_cast<std::size_t>(r)] == pow_rational(Rational(-2), static_cast<unsigned>(r - 1)));
    }
  }

  SECTION("n = 3 series and roots") {
    const auto series = series_from_symmetric(to_symmetric(make_xor(3)));
    CHECK(series.c == std::vector<Rational>{0, Rational(10, 3), -3, Rational(2, 3)});
    const auto fact = factor_model(make_xor(3));
    REQUIRE(fact.roots.size() == 3);
    CHECK(*fact.roots[0].exact_value == 0);
    CHECK(*fact.roots[1].exact_value == 2);
    CHECK(*fact.roots[2].exact_value == Rational(5, 2));
    CHECK(classify_kernel(fact, 3).kernel_size == 4);
  }
}

TEST_CASE("make_ising and its factored identity") {
  CHECK_THROWS_AS(IsingParams(4, 0, 1), std::invalid_argument);

  SECTION("factored form is (J/4)(X + 4h/J - 1) X") {
    const auto fact = factor_model(make_ising(IsingParams(5, Rational(3, 2), Rational(1, 3))));
    CHECK(fact.constant == Rational(3, 8));  // J/4
    REQUIRE(fact.roots.size() == 2);
    CHECK(*fact.roots[0].exact_value == 0);
    CHECK(*fact.roots[1].exact_value == 1 - Rational(4, 1) * Rational(1, 3) / Rational(3, 2));
  }

  SECTION("J=1, h=0, n=4: roots {0, 1}, kernel of size 5") {
    const auto f = make_ising(IsingParams(4, 1, 0));
    const auto fact = factor_model(f);
    REQUIRE(fact.roots.size() == 2);
    CHECK(*fact.roots[0].exact_value == 0);
    CHECK(*fact.roots[1].exact_value == 1);
    CHECK(fact.constant == Rational(1, 4));
    CHECK(classify_kernel(fact, 4).kernel_size == 5);
    CHECK(brute_kernel_size(f) == 5);
  }

  SECTION("J=4, h=1: the second root merges into a double root at zero") {
    const auto f = make_ising(IsingParams(4, 4, 1));
    const auto fact = factor_model(f);
    REQUIRE(fact.roots.size() == 1);
    CHECK(*fact.roots[0].exact_value == 0);
    CHECK(fact.roots[0].multiplicity == 2);
    CHECK(classify_kernel(fact, 4).kernel_size == 1);
  }

  SECTION("energy equals (J/4)(w + 4h/J - 1) w at every weight, random parameters") {
    auto rng = make_rng(0x5eed0301);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 9);
      const Rational coupling = random_nonzero_rational(rng, 8, 8);
      const Rational bias = random_rational(rng, 8, 8);
      const auto f = make_ising(IsingParams(n, coupling, bias));
      const auto values = brute_values(f);
      for (std::uint64_t x = 0; x < values.size(); ++x) {
        const int w = std::popcount(x);
        CHECK(values[x] == coupling / 4 * (w + 4 * bias / coupling - 1) * w);
      }
    }
  }
}

TEST_CASE("ising_kernel_condition detects quarter-integer bias ratios") {
  SECTION("h/J = 1/4 gives k = 1 and merges with the root at zero") {
    const auto cond = ising_kernel_condition(IsingParams(3, 1, Rational(1, 4)));
    CHECK(cond.feasible_k == std::vector<long long>{1});
    CHECK(cond.second_root == 0);
  }

  SECTION("h/J = -1/2 gives k = -2 and the all-ones input vanishes") {
    const auto p = IsingParams(3, 1, Rational(-1, 2));
    const auto cond = ising_kernel_condition(p);
    CHECK(cond.feasible_k == std::vector<long long>{-2});
    CHECK(cond.second_root == 3);
    const auto values = brute_values(make_ising(p));
    CHECK(values[0b111] == 0);
    const auto report = classify_kernel(factor_model(make_ising(p)), 3);
    CHECK(report.boolean_roots == std::vector<std::pair<int, int>>{{0, 1}, {3, 1}});
  }

  SECTION("h/J = 1/3 is off-lattice: fractional second root") {
    const auto cond = ising_kernel_condition(IsingParams(3, 1, Rational(1, 3)));
    CHECK(cond.feasible_k.empty());
    CHECK(cond.second_root == Rational(-1, 3));
  }

  SECTION("k below 1 - n is out of Boolean range") {
    const auto cond = ising_kernel_condition(IsingParams(3, 1, Rational(-3, 4)));
    CHECK(cond.feasible_k.empty());  // k = -3 would need weight 4 of 3
    CHECK(cond.second_root == 4);
  }
}

TEST_CASE("embed_diagonal uses the declared x1-most-significant order") {
  SECTION("delta on three variables") {
    const auto d = embed_diagonal(make_delta(3));
    CHECK(d.diag == std::vector<Rational>{1, 0, 0, 0, 0, 0, 0, 1});
  }

  SECTION("zero function") {
    CHECK(embed_diagonal(MultilinearPBF(2)).diag == std::vector<Rational>{0, 0, 0, 0});
  }

  SECTION("two-variable parity") {
    CHECK(embed_diagonal(make_xor(2)).diag == std::vector<Rational>{0, 1, 1, 0});
  }

  SECTION("f = x1 pins the bit order: the high index bit is x1") {
    const auto f = MultilinearPBF::from_terms(2, {{0b01, 1}});
    CHECK(embed_diagonal(f).diag == std::vector<Rational>{0, 0, 1, 1});
  }

  SECTION("entries match evaluation exhaustively") {
    auto rng = make_rng(0x5eed0302);
    const auto f = random_pbf(rng, 6);
    const auto d = embed_diagonal(f);
    for (std::uint64_t index = 0; index < d.diag.size(); ++index) {
      std::uint64_t bits = 0;
      for (int i = 0; i < 6; ++i)
        if (index & (1ull << (5 - i))) bits |= 1ull << i;
      CHECK(d.diag[index] == eval_boolean(f, BooleanPoint(6, bits)));
    }
  }

  SECTION("the enumeration limit applies") {
    CHECK_THROWS_AS(embed_diagonal(MultilinearPBF(12), 10), EnumerationLimitError);
  }
}

TEST_CASE("flatten inverts the diagonal embedding") {
  SECTION("all-ones diagonal is the constant 1") {
    const DiagonalEmbedding d(2, {1, 1, 1, 1});
    CHECK(flatten(d) == MultilinearPBF::from_terms(2, {{0b00, 1}}));
  }

  SECTION("single one at the last index is the full product term") {
    const DiagonalEmbedding d(2, {0, 0, 0, 1});
    CHECK(flatten(d) == MultilinearPBF::from_terms(2, {{0b11, 1}}));
  }

  SECTION("round trip is exact on random sparse functions") {
    auto rng = make_rng(0x5eed0303);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = static_cast<int>(rng() % 11);
      const auto f = random_pbf(rng, n);
      CHECK(flatten(embed_diagonal(f)) == f);
    }
  }
}
