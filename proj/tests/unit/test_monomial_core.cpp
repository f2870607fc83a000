#include <doctest.h>

#include <algorithm>

#include "asymprime/ideal.hpp"
#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"

using namespace asymprime;
using fx::ideal;

TEST_CASE("ring context rejects bad variable lists") {
  CHECK_THROWS_AS(RingContext({}), SpecError);
  CHECK_THROWS_AS(RingContext({"x", "x"}), SpecError);
  std::vector<std::string> many;
  for (int i = 0; i < 33; ++i) many.push_back("v" + std::to_string(i));
  CHECK_THROWS_AS(RingContext{many}, SpecError);
  RingContext r({"x", "y"});
  CHECK(r.index_of("y") == 1);
  CHECK(r.index_of("z") == 2);
}

TEST_CASE("monomial arithmetic") {
  const Monomial a{3, 2, 0}, b{1, 4, 2};
  CHECK(lcm(a, b) == Monomial{3, 4, 2});
  CHECK(colon(a, b) == Monomial{2, 0, 0});
  CHECK(a * b == Monomial{4, 6, 2});
  CHECK(pow(a, 3) == Monomial{9, 6, 0});
  CHECK(a.degree() == 5);
  CHECK(Monomial{1, 0, 0}.divides(a));
  CHECK_FALSE(a.divides(b));
  CHECK(to_string(Monomial{2, 1}, fx::xy()) == "x^2*y");
  CHECK(to_string(Monomial{0, 0}, fx::xy()) == "1");
}

TEST_CASE("monomial overflow fails loudly") {
  const Monomial big{0xFFFFFFFFu};
  CHECK_THROWS_AS(big * Monomial{1}, OverflowError);
  CHECK_THROWS_AS(pow(Monomial{1u << 20}, 1u << 20), OverflowError);
}

TEST_CASE("canonicalize examples") {
  CHECK(ideal(2, {{2, 0}, {3, 0}, {0, 1}}) == ideal(2, {{2, 0}, {0, 1}}));
  CHECK(ideal(2, {}).is_zero());
  CHECK(ideal(2, {{1, 1}, {1, 0}, {0, 1}}) == ideal(2, {{1, 0}, {0, 1}}));
  CHECK(ideal(2, {{1, 0}, {2, 0}}) == ideal(2, {{1, 0}}));
  CHECK_THROWS_AS(ideal(2, {{1, 0, 0}}), DimensionError);
}

TEST_CASE("membership examples") {
  const auto i = ideal(2, {{2, 0}, {1, 1}});
  CHECK(i.contains(Monomial{2, 1}));
  CHECK_FALSE(i.contains(Monomial{0, 3}));
  CHECK_FALSE(MonomialIdeal::zero(2).contains(Monomial{0, 0}));
}

TEST_CASE("sum, product, power examples") {
  const auto x = ideal(2, {{1, 0}}), y = ideal(2, {{0, 1}}), m = ideal(2, {{1, 0}, {0, 1}});
  CHECK(sum(x, y) == m);
  CHECK(product(m, m) == ideal(2, {{2, 0}, {1, 1}, {0, 2}}));
  CHECK(power(ideal(2, {{2, 0}, {1, 1}}), 2) == ideal(2, {{4, 0}, {3, 1}, {2, 2}}));
  CHECK(power(m, 0).is_unit());
  CHECK(power(MonomialIdeal::zero(2), 3).is_zero());
}

TEST_CASE("intersection examples") {
  CHECK(intersect(ideal(3, {{1, 0, 0}, {0, 1, 0}}), ideal(3, {{0, 1, 0}, {0, 0, 1}})) ==
        ideal(3, {{0, 1, 0}, {1, 0, 1}}));
  const auto i = ideal(2, {{2, 0}, {1, 3}});
  CHECK(intersect(i, MonomialIdeal::unit(2)) == i);
  for (std::uint32_t n = 1; n <= 5; ++n) {
    CHECK(intersect(ideal(2, {{n, 0}}), ideal(2, {{0, n}})) == ideal(2, {{n, n}}));
  }
}

TEST_CASE("colon examples") {
  CHECK(colon(ideal(2, {{1, 1}}), ideal(2, {{1, 0}})) == ideal(2, {{0, 1}}));
  CHECK(colon(ideal(2, {{2, 0}, {1, 1}}), ideal(2, {{1, 0}})) == ideal(2, {{1, 0}, {0, 1}}));
  const auto i = ideal(2, {{3, 1}, {0, 2}});
  CHECK(colon(i, MonomialIdeal::unit(2)) == i);
  CHECK(colon(i, MonomialIdeal::zero(2)).is_unit());
}

TEST_CASE("saturation examples") {
  CHECK(saturate(ideal(2, {{2, 1}}), ideal(2, {{0, 1}})) == ideal(2, {{2, 0}}));
  CHECK(saturate(ideal(2, {{2, 1}}), MonomialIdeal::unit(2)) == ideal(2, {{2, 1}}));
  CHECK(saturate(ideal(2, {{2, 1}}), ideal(2, {{1, 0}})) == ideal(2, {{0, 1}}));
  const auto j = ideal(2, {{2, 0}, {1, 1}}), m = ideal(2, {{1, 0}, {0, 1}});
  for (std::uint32_t n = 1; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(saturate(power(j, n), m) == ideal(2, {{n, 0}}));
  }
  CHECK_THROWS_AS(saturate(j, MonomialIdeal::zero(2)), SpecError);
}

TEST_CASE("radical examples") {
  CHECK(radical(ideal(2, {{2, 0}, {0, 3}})) == ideal(2, {{1, 0}, {0, 1}}));
  CHECK(radical(MonomialIdeal::zero(2)).is_zero());
  CHECK(radical(ideal(2, {{2, 1}})) == ideal(2, {{1, 1}}));
}

TEST_CASE("localization examples") {
  CHECK(localize(ideal(3, {{2, 1, 0}, {0, 0, 1}}), VariableSet::of({0})).is_unit());
  const auto i = ideal(3, {{2, 1, 0}, {0, 1, 3}});
  CHECK(localize(i, VariableSet::all(3)) == i);
  CHECK(localize(ideal(2, {{1, 1}, {0, 2}}), VariableSet::of({1})) == ideal(2, {{0, 1}}));
}

TEST_CASE("subset and equality examples") {
  CHECK(is_subset(ideal(2, {{2, 0}, {1, 1}}), ideal(2, {{1, 0}})));
  CHECK_FALSE(is_subset(ideal(2, {{1, 0}}), ideal(2, {{2, 0}, {1, 1}})));
  CHECK(ideal(1, {{1}, {2}}) == ideal(1, {{1}}));
}

TEST_CASE("primes and rendering") {
  MonomialPrime p;
  CHECK(as_prime(ideal(2, {{1, 0}, {0, 1}}), p));
  CHECK(p.support() == VariableSet::of({0, 1}));
  CHECK_FALSE(as_prime(ideal(2, {{2, 0}}), p));
  CHECK(as_prime(MonomialIdeal::zero(2), p));
  CHECK(p.is_zero());
  CHECK(to_string(MonomialPrime(VariableSet::of({1, 0})), fx::xy()) == "{x,y}");
  CHECK(to_string(MonomialPrime(), fx::xy()) == "(0)");
  CHECK(to_string(ideal(2, {{1, 1}, {2, 0}}), fx::xy()) == "(x^2, x*y)");
  CHECK(to_string(MonomialIdeal::zero(2), fx::xy()) == "(0)");
  // () < (0) < (0,1) < (1)
  CHECK(MonomialPrime() < MonomialPrime(VariableSet::of({0})));
  CHECK(MonomialPrime(VariableSet::of({0})) < MonomialPrime(VariableSet::of({0, 1})));
  CHECK(MonomialPrime(VariableSet::of({0, 1})) < MonomialPrime(VariableSet::of({1})));
}

// ---- properties over random instances ----

namespace {

constexpr int kTrials = 150;

MonomialIdeal rand_ideal(oracle::Rng& rng, std::size_t v) { return oracle::random_ideal(rng, v, 4, 3); }

}  // namespace

TEST_CASE("property: canonical form is idempotent and order-insensitive") {
  oracle::Rng rng(11);
  for (int t = 0; t < kTrials; ++t) {
    const std::size_t v = 1 + rng.below(3);
    std::vector<Monomial> gens;
    for (std::uint32_t k = rng.below(7); k > 0; --k) gens.push_back(oracle::random_monomial(rng, v, 4));
    const auto once = MonomialIdeal::from_generators(v, gens);
    std::vector<Monomial> again(once.generators().begin(), once.generators().end());
    CHECK(MonomialIdeal::from_generators(v, again) == once);
    std::shuffle(gens.begin(), gens.end(), rng.engine);
    CHECK(MonomialIdeal::from_generators(v, gens) == once);
    std::vector<oracle::Exps> raw;
    for (const auto& g : gens) raw.push_back(oracle::exps(g));
    CHECK(oracle::minimal(v, raw) == once);
  }
}

TEST_CASE("property: operations agree with box-enumeration oracles") {
  oracle::Rng rng(12);
  for (int t = 0; t < kTrials; ++t) {
    const std::size_t v = 1 + rng.below(3);
    const auto a = rand_ideal(rng, v), b = rand_ideal(rng, v);
    CHECK(sum(a, b) == oracle::sum(a, b));
    CHECK(product(a, b) == oracle::product(a, b));
    CHECK(intersect(a, b) == oracle::intersect(a, b));
    CHECK(colon(a, b) == oracle::colon(a, b));
    const std::uint32_t n = rng.below(4);
    CHECK(power(a, n) == oracle::power(a, n));
    if (!b.is_zero()) CHECK(saturate(a, b) == oracle::saturate(a, b));
    const VariableSet s(rng.below(1u << v));
    CHECK(localize(a, s) == oracle::localize(a, s));
  }
}

TEST_CASE("property: colon adjunction K*J in I iff K in (I:J)") {
  oracle::Rng rng(13);
  for (int t = 0; t < kTrials; ++t) {
    const std::size_t v = 1 + rng.below(3);
    const auto i = rand_ideal(rng, v), j = rand_ideal(rng, v), k = rand_ideal(rng, v);
    CHECK(is_subset(product(k, j), i) == is_subset(k, colon(i, j)));
  }
}

TEST_CASE("property: (I:J):K = I:(JK)") {
  oracle::Rng rng(14);
  for (int t = 0; t < kTrials; ++t) {
    const std::size_t v = 1 + rng.below(3);
    const auto i = rand_ideal(rng, v), j = rand_ideal(rng, v), k = rand_ideal(rng, v);
    CHECK(colon(colon(i, j), k) == colon(i, product(j, k)));
  }
}

TEST_CASE("property: saturation is idempotent") {
  oracle::Rng rng(15);
  for (int t = 0; t < kTrials; ++t) {
    const std::size_t v = 1 + rng.below(3);
    const auto i = rand_ideal(rng, v), j = oracle::random_proper_ideal(rng, v, 3, 3);
    const auto s = saturate(i, j);
    CHECK(saturate(s, j) == s);
    CHECK(is_subset(i, s));
  }
}

TEST_CASE("property: power laws") {
  oracle::Rng rng(16);
  for (int t = 0; t < kTrials; ++t) {
    const std::size_t v = 1 + rng.below(3);
    const auto i = rand_ideal(rng, v), j = rand_ideal(rng, v);
    const std::uint32_t n = rng.below(4), a = rng.below(3), b = rng.below(3);
    CHECK(power(product(i, j), n) == product(power(i, n), power(j, n)));
    CHECK(power(i, a + b) == product(power(i, a), power(i, b)));
  }
}

TEST_CASE("property: localization commutes with the ideal operations") {
  oracle::Rng rng(17);
  for (int t = 0; t < kTrials; ++t) {
    const std::size_t v = 1 + rng.below(3);
    const auto i = rand_ideal(rng, v), j = rand_ideal(rng, v);
    const VariableSet s(rng.below(1u << v));
    auto loc = [&](const MonomialIdeal& x) { return localize(x, s); };
    CHECK(loc(sum(i, j)) == sum(loc(i), loc(j)));
    CHECK(loc(product(i, j)) == product(loc(i), loc(j)));
    CHECK(loc(intersect(i, j)) == intersect(loc(i), loc(j)));
    CHECK(loc(colon(i, j)) == colon(loc(i), loc(j)));
  }
}

TEST_CASE("property: membership agrees with brute-force products g*m'") {
  oracle::Rng rng(18);
  for (int t = 0; t < 60; ++t) {
    const std::size_t v = 1 + rng.below(3);
    const auto i = rand_ideal(rng, v);
    // The set {g * m'} over generators g and all cofactors m' up to exponent 4.
    std::set<oracle::Exps> reachable;
    for (const auto& g : i.generators()) {
      oracle::for_box(oracle::Exps(v, 4), [&](const oracle::Exps& m) {
        reachable.insert(oracle::add(oracle::exps(g), m));
      });
    }
    oracle::for_box(oracle::Exps(v, 4), [&](const oracle::Exps& m) {
      CHECK(i.contains(Monomial(m)) == (reachable.count(m) > 0));
    });
  }
}
