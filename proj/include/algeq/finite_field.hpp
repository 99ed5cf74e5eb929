#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "algeq/error.hpp"

namespace algeq {

using u128 = unsigned __int128;

std::string to_decimal(u128 value);
// Parses an unsigned decimal literal; throws InvalidArgument on junk or overflow.
u128 parse_u128(std::string_view text);

enum class PrimePreset { M31, P63, M127, Custom };

/// A prime modulus p together with the reduction strategy used for it.
///
/// Residues are carried as 128-bit unsigned integers. Custom primes must lie
/// in [5, 2^127) so that the sum of two residues never overflows.
class PrimeModulus {
 public:
  static PrimeModulus m31();   // 2^31 - 1
  static PrimeModulus p63();   // 2^63 - 25
  static PrimeModulus m127();  // 2^127 - 1
  static PrimeModulus custom(u128 p);
  /// Accepts `m31`, `p63`, `m127` or a decimal literal.
  static PrimeModulus parse(std::string_view text);

  u128 value() const noexcept { return p_; }
  PrimePreset preset() const noexcept { return preset_; }
  /// Preset name, or the decimal value for custom primes.
  std::string name() const;

  u128 add(u128 a, u128 b) const noexcept {
    const u128 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u128 sub(u128 a, u128 b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
  u128 neg(u128 a) const noexcept { return a == 0 ? 0 : p_ - a; }
  u128 mul(u128 a, u128 b) const noexcept;
  /// Extended Euclid. Throws ZeroInverse for a == 0.
  u128 inv(u128 a) const;
  u128 pow(u128 base, u128 exponent) const noexcept;
  u128 reduce(std::int64_t value) const noexcept;

  friend bool operator==(const PrimeModulus& a, const PrimeModulus& b) noexcept {
    return a.p_ == b.p_;
  }

 private:
  enum class Reduction : std::uint8_t { Word32, Word64, Mersenne127, Wide };

  PrimeModulus(u128 p, PrimePreset preset);

  u128 p_;
  PrimePreset preset_;
  Reduction reduction_;
};

/// Miller-Rabin. Deterministic below 3.3e24 (first 13 prime bases); above
/// that a fixed set of extra bases makes a composite slipping through
/// vanishingly unlikely.
bool is_probable_prime(u128 n);

/// Seed-deterministic stream of 64-bit words. Every randomized operation takes
/// one of these explicitly; there is no global generator.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream_index = 0);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_index() const noexcept { return index_; }

  std::uint64_t next() { return engine_(); }
  /// Exactly uniform on [0, bound) by rejection; bound > 0.
  u128 uniform_below(u128 bound);

 private:
  std::uint64_t seed_;
  std::uint64_t index_;
  std::mt19937_64 engine_;
};

/// splitmix64 finaliser; used to derive independent stream seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) noexcept;

class FieldElement {
 public:
  /// `residue` must already be reduced modulo `modulus`.
  FieldElement(u128 residue, const PrimeModulus& modulus);

  static FieldElement zero(const PrimeModulus& m) { return {0, m}; }
  static FieldElement one(const PrimeModulus& m) { return {1, m}; }
  static FieldElement from_int(std::int64_t value, const PrimeModulus& m);

  u128 residue() const noexcept { return residue_; }
  const PrimeModulus& modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return residue_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.modulus_ == b.modulus_ && a.residue_ == b.residue_;
  }

  std::string to_string() const { return to_decimal(residue_); }

 private:
  void check_same(const FieldElement& o) const;

  u128 residue_;
  PrimeModulus modulus_;
};

FieldElement ff_add(const FieldElement& a, const FieldElement& b);
FieldElement ff_sub(const FieldElement& a, const FieldElement& b);
FieldElement ff_mul(const FieldElement& a, const FieldElement& b);
FieldElement ff_neg(const FieldElement& a);
FieldElement ff_inv(const FieldElement& a);
/// (num mod p) * inv(den mod p); throws DenominatorVanishes when p | den.
FieldElement ff_from_rational(std::int64_t num, std::int64_t den, const PrimeModulus& m);
FieldElement ff_sample_uniform(const PrimeModulus& m, RandomStream& rng);

}  // namespace algeq
