#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

#include "algeq/finite_field.hpp"
#include "support.hpp"

using namespace algeq;
using boost::multiprecision::cpp_int;

namespace {

cpp_int big(u128 v) {
  cpp_int r = static_cast<std::uint64_t>(v >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(v);
  return r;
}

FieldElement fe(std::int64_t v, const PrimeModulus& m) { return FieldElement::from_int(v, m); }

}  // namespace

TEST_CASE("presets") {
  CHECK(PrimeModulus::m31().value() == (u128{1} << 31) - 1);
  CHECK(PrimeModulus::p63().value() == (u128{1} << 63) - 25);
  CHECK(PrimeModulus::m127().value() == (u128{1} << 127) - 1);
  for (const auto& m : testing::presets()) CHECK(is_probable_prime(m.value()));
  CHECK(PrimeModulus::parse("m31") == PrimeModulus::m31());
  CHECK(PrimeModulus::parse("p63").name() == "p63");
  CHECK(PrimeModulus::parse("1000003").name() == "1000003");
}

TEST_CASE("custom primes are checked") {
  CHECK_THROWS_AS(PrimeModulus::custom(15), Error);
  CHECK_THROWS_AS(PrimeModulus::custom(3), Error);
  CHECK_THROWS_AS(PrimeModulus::parse("12x"), Error);
  CHECK_NOTHROW(PrimeModulus::custom(7));
  // Carmichael number and a strong pseudoprime to several small bases.
  CHECK_FALSE(is_probable_prime(561));
  CHECK_FALSE(is_probable_prime(3215031751ULL));
  CHECK(is_probable_prime(1000000007));
  CHECK_FALSE(is_probable_prime(u128{1000000007} * 998244353));
  try {
    PrimeModulus::custom(21);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPrime);
  }
}

TEST_CASE("arithmetic examples") {
  const auto p7 = PrimeModulus::custom(7);
  const auto m31 = PrimeModulus::m31();
  CHECK(ff_add(fe(3, p7), fe(4, p7)).residue() == 0);
  CHECK(ff_add(fe(6, p7), FieldElement::zero(p7)) == fe(6, p7));
  CHECK(ff_add(FieldElement(m31.value() - 1, m31), FieldElement::one(m31)).is_zero());
  CHECK(ff_mul(fe(2, m31), FieldElement(u128{1} << 30, m31)) == FieldElement::one(m31));
  CHECK(ff_sub(fe(3, p7), fe(5, p7)).residue() == 5);
  CHECK(ff_neg(fe(2, p7)).residue() == 5);
  CHECK(ff_inv(fe(2, m31)).residue() == (u128{1} << 30));
  CHECK(ff_inv(FieldElement::one(m31)) == FieldElement::one(m31));
  CHECK(ff_inv(fe(3, p7)).residue() == 5);
  CHECK(ff_from_rational(3, 4, p7).residue() == 6);
  CHECK(ff_from_rational(0, 9, p7).is_zero());
  CHECK(ff_from_rational(5, 1, p7).residue() == 5);
  CHECK(ff_from_rational(-1, 2, p7).residue() == 3);
}

TEST_CASE("error kinds") {
  const auto p7 = PrimeModulus::custom(7);
  const auto p11 = PrimeModulus::custom(11);
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind_of([&] { (void)ff_add(fe(1, p7), fe(1, p11)); }) == ErrorKind::ModulusMismatch);
  CHECK(kind_of([&] { (void)ff_inv(FieldElement::zero(p7)); }) == ErrorKind::ZeroInverse);
  CHECK(kind_of([&] { (void)ff_from_rational(1, 14, p7); }) == ErrorKind::DenominatorVanishes);
  CHECK_THROWS_AS(FieldElement(7, p7), Error);
}

TEST_CASE("inverse oracle: exhaustive search over F_7") {
  const auto p7 = PrimeModulus::custom(7);
  for (std::int64_t a = 1; a < 7; ++a) {
    std::int64_t found = 0;
    for (std::int64_t b = 1; b < 7; ++b)
      if (a * b % 7 == 1) found = b;
    CHECK(ff_inv(fe(a, p7)).residue() == static_cast<u128>(found));
  }
}

TEST_CASE("multiplication and inversion match big-integer arithmetic") {
  RandomStream rng(11);
  std::vector<PrimeModulus> moduli = testing::presets();
  moduli.push_back(PrimeModulus::custom(1000000007));
  moduli.push_back(PrimeModulus::custom((u128{1} << 89) - 1));
  moduli.push_back(PrimeModulus::custom((u128{1} << 64) - 59));
  for (const auto& m : moduli) {
    const cpp_int p = big(m.value());
    for (int i = 0; i < 2000; ++i) {
      const auto a = ff_sample_uniform(m, rng);
      const auto b = ff_sample_uniform(m, rng);
      CHECK(big(ff_mul(a, b).residue()) == (big(a.residue()) * big(b.residue())) % p);
      CHECK(big(ff_add(a, b).residue()) == (big(a.residue()) + big(b.residue())) % p);
      if (!a.is_zero()) CHECK(big(ff_mul(a, ff_inv(a)).residue()) == 1);
    }
    // Extremes.
    const FieldElement top(m.value() - 1, m);
    CHECK(ff_mul(top, top) == FieldElement::one(m));
    CHECK(ff_inv(top) == top);
  }
}

TEST_CASE("field axioms on random triples") {
  for (const auto& m : testing::presets()) {
    RandomStream rng(2024, 1);
    for (int i = 0; i < 10000; ++i) {
      const auto a = ff_sample_uniform(m, rng);
      const auto b = ff_sample_uniform(m, rng);
      const auto c = ff_sample_uniform(m, rng);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a - a == FieldElement::zero(m));
      if (!a.is_zero()) REQUIRE(a * a.inverse() == FieldElement::one(m));
    }
  }
}

TEST_CASE("from_rational respects addition") {
  RandomStream rng(5);
  for (const auto& m : testing::presets()) {
    for (int i = 0; i < 1000; ++i) {
      const auto a = static_cast<std::int64_t>(rng.uniform_below(2000001)) - 1000000;
      const auto b = static_cast<std::int64_t>(rng.uniform_below(1000000)) + 1;
      const auto c = static_cast<std::int64_t>(rng.uniform_below(2000001)) - 1000000;
      const auto d = static_cast<std::int64_t>(rng.uniform_below(1000000)) + 1;
      CHECK(ff_from_rational(a, b, m) + ff_from_rational(c, d, m) ==
            ff_from_rational(a * d + b * c, b * d, m));
    }
  }
}

TEST_CASE("sampling is seed-deterministic") {
  const auto m = PrimeModulus::m127();
  RandomStream a(99), b(99), c(100), d(99, 1);
  bool differs_seed = false, differs_stream = false;
  for (int i = 0; i < 64; ++i) {
    const auto x = ff_sample_uniform(m, a);
    CHECK(x == ff_sample_uniform(m, b));
    CHECK(x.residue() < m.value());
    differs_seed |= x != ff_sample_uniform(m, c);
    differs_stream |= x != ff_sample_uniform(m, d);
  }
  CHECK(differs_seed);
  CHECK(differs_stream);
  CHECK(mix_seed(1, 0) != mix_seed(1, 1));
}

TEST_CASE("sampling frequency at p = 7") {
  const auto p7 = PrimeModulus::custom(7);
  RandomStream rng(31337);
  constexpr int draws = 1000000;
  std::array<int, 7> counts{};
  for (int i = 0; i < draws; ++i) ++counts[static_cast<std::size_t>(ff_sample_uniform(p7, rng).residue())];
  const double expected = draws / 7.0;
  const double sigma = std::sqrt(draws * (1.0 / 7) * (6.0 / 7));
  for (int c : counts) CHECK(std::abs(c - expected) < 4 * sigma);
}

TEST_CASE("decimal helpers") {
  CHECK(to_decimal(0) == "0");
  CHECK(to_decimal((u128{1} << 127) - 1) == "170141183460469231731687303715884105727");
  CHECK(parse_u128("170141183460469231731687303715884105727") == (u128{1} << 127) - 1);
  CHECK_THROWS_AS(parse_u128("340282366920938463463374607431768211456"), Error);
  CHECK_THROWS_AS(parse_u128(""), Error);
}
