#include "algeq/finite_field.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace algeq {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::CyclicGraph: return "CyclicGraph";
    case ErrorKind::NotBAP: return "NotBAP";
    case ErrorKind::NotDAG: return "NotDAG";
    case ErrorKind::NodeCountMismatch: return "NodeCountMismatch";
    case ErrorKind::NoNonadjacentPair: return "NoNonadjacentPair";
    case ErrorKind::NTooSmall: return "NTooSmall";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownNode: return "UnknownNode";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::SelfLoop: return "SelfLoop";
  }
  return "Unknown";
}

std::string to_decimal(u128 value) {
  if (value == 0) return "0";
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

u128 parse_u128(std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::InvalidArgument, "empty integer literal");
  const u128 max = ~u128{0};
  u128 value = 0;
  for (char c : text) {
    if (c < '0' || c > '9')
      throw Error(ErrorKind::InvalidArgument, "not a decimal integer: " + std::string(text));
    const unsigned digit = static_cast<unsigned>(c - '0');
    if (value > (max - digit) / 10)
      throw Error(ErrorKind::InvalidArgument, "integer literal too large: " + std::string(text));
    value = value * 10 + digit;
  }
  return value;
}

namespace {

constexpr u128 kM31 = (u128{1} << 31) - 1;
constexpr u128 kP63 = (u128{1} << 63) - 25;
constexpr u128 kM127 = (u128{1} << 127) - 1;

// Modular helpers valid for any n < 2^128, used by the primality test only.
u128 addmod_any(u128 a, u128 b, u128 n) {
  u128 s = a + b;
  if (s < a || s >= n) s -= n;
  return s;
}

u128 mulmod_any(u128 a, u128 b, u128 n) {
  if (n <= (u128{1} << 64)) return (a * b) % n;
  u128 result = 0;
  for (int bit = 127; bit >= 0; --bit) {
    result = addmod_any(result, result, n);
    if ((b >> bit) & 1) result = addmod_any(result, a, n);
  }
  return result;
}

u128 powmod_any(u128 base, u128 exp, u128 n) {
  u128 result = 1 % n;
  base %= n;
  while (exp != 0) {
    if (exp & 1) result = mulmod_any(result, base, n);
    base = mulmod_any(base, base, n);
    exp >>= 1;
  }
  return result;
}

bool miller_rabin_round(u128 n, u128 d, int r, u128 a) {
  a %= n;
  if (a == 0) return true;
  u128 x = powmod_any(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = mulmod_any(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_probable_prime(u128 n) {
  static constexpr std::array<unsigned, 13> kSmall{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  if (n < 2) return false;
  for (unsigned q : kSmall) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  u128 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (unsigned a : kSmall)
    if (!miller_rabin_round(n, d, r, a)) return false;
  // 3.317e24 bound for the 13-base set.
  const u128 deterministic_limit = parse_u128("3317044064679887385961981");
  if (n < deterministic_limit) return true;
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;
  for (int i = 0; i < 32; ++i) {
    state = mix_seed(state, static_cast<std::uint64_t>(i));
    const u128 a = (static_cast<u128>(state) << 64 | mix_seed(state, 1)) % (n - 3) + 2;
    if (!miller_rabin_round(n, d, r, a)) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(u128 p, PrimePreset preset) : p_(p), preset_(preset) {
  if (p == kM127)
    reduction_ = Reduction::Mersenne127;
  else if (p < (u128{1} << 32))
    reduction_ = Reduction::Word32;
  else if (p < (u128{1} << 64))
    reduction_ = Reduction::Word64;
  else
    reduction_ = Reduction::Wide;
}

PrimeModulus PrimeModulus::m31() { return {kM31, PrimePreset::M31}; }
PrimeModulus PrimeModulus::p63() { return {kP63, PrimePreset::P63}; }
PrimeModulus PrimeModulus::m127() { return {kM127, PrimePreset::M127}; }

PrimeModulus PrimeModulus::custom(u128 p) {
  if (p == kM31) return m31();
  if (p == kP63) return p63();
  if (p == kM127) return m127();
  if (p < 5) throw Error(ErrorKind::InvalidArgument, "prime modulus must be at least 5");
  if (p >= (u128{1} << 127))
    throw Error(ErrorKind::InvalidArgument, "prime modulus must be below 2^127");
  if (!is_probable_prime(p)) throw Error(ErrorKind::NotPrime, to_decimal(p) + " is not prime");
  return {p, PrimePreset::Custom};
}

PrimeModulus PrimeModulus::parse(std::string_view text) {
  if (text == "m31") return m31();
  if (text == "p63") return p63();
  if (text == "m127") return m127();
  return custom(parse_u128(text));
}

std::string PrimeModulus::name() const {
  switch (preset_) {
    case PrimePreset::M31: return "m31";
    case PrimePreset::P63: return "p63";
    case PrimePreset::M127: return "m127";
    case PrimePreset::Custom: break;
  }
  return to_decimal(p_);
}

u128 PrimeModulus::mul(u128 a, u128 b) const noexcept {
  switch (reduction_) {
    case Reduction::Word32: {
      const std::uint64_t prod = static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(b);
      return prod % static_cast<std::uint64_t>(p_);
    }
    case Reduction::Word64:
      return (a * b) % p_;
    case Reduction::Mersenne127: {
      // 256-bit schoolbook product, then fold: 2^127 == 1 (mod p).
      const u128 mask64 = (u128{1} << 64) - 1;
      const u128 a0 = a & mask64, a1 = a >> 64;
      const u128 b0 = b & mask64, b1 = b >> 64;
      const u128 p00 = a0 * b0;
      const u128 mid = a0 * b1 + a1 * b0;  // each term < 2^127
      const u128 p11 = a1 * b1;
      const u128 lo = p00 + (mid << 64);
      const u128 carry = lo < p00 ? 1 : 0;
      const u128 hi = p11 + (mid >> 64) + carry;
      const u128 low127 = lo & kM127;
      const u128 high = (hi << 1) | (lo >> 127);
      u128 s = low127 + high;
      s = (s & kM127) + (s >> 127);
      return s >= kM127 ? s - kM127 : s;
    }
    case Reduction::Wide: {
      u128 result = 0;
      for (int bit = 126; bit >= 0; --bit) {
        result = add(result, result);
        if ((b >> bit) & 1) result = add(result, a);
      }
      return result;
    }
  }
  return 0;
}

u128 PrimeModulus::inv(u128 a) const {
  if (a == 0) throw Error(ErrorKind::ZeroInverse, "inverse of zero");
  // p < 2^127 keeps every Bezout coefficient inside signed 128-bit range.
  using i128 = __int128;
  i128 t = 0, new_t = 1;
  u128 r = p_, new_r = a;
  // Stops one step early: the final coefficient would be +-p, which does not
  // fit for p near 2^127, and it is never needed.
  for (;;) {
    const u128 q = r / new_r;
    const u128 next_r = r - q * new_r;
    if (next_r == 0) {
      t = new_t;
      break;
    }
    const i128 next_t = t - static_cast<i128>(q) * new_t;
    t = new_t;
    new_t = next_t;
    r = new_r;
    new_r = next_r;
  }
  if (t < 0) t += static_cast<i128>(p_);
  return static_cast<u128>(t);
}

u128 PrimeModulus::pow(u128 base, u128 exponent) const noexcept {
  u128 result = 1;
  while (exponent != 0) {
    if (exponent & 1) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1;
  }
  return result;
}

u128 PrimeModulus::reduce(std::int64_t value) const noexcept {
  if (value >= 0) return static_cast<u128>(value) % p_;
  // Negate via unsigned arithmetic so INT64_MIN is handled.
  const u128 magnitude = static_cast<u128>(-(static_cast<__int128>(value))) % p_;
  return neg(magnitude);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream_index)
    : seed_(seed), index_(stream_index), engine_(mix_seed(seed, stream_index)) {}

u128 RandomStream::uniform_below(u128 bound) {
  if (bound == 0) throw Error(ErrorKind::InvalidArgument, "uniform_below(0)");
  if (bound == 1) return 0;
  const u128 top = bound - 1;
  const std::uint64_t top_hi = static_cast<std::uint64_t>(top >> 64);
  const int bits = top_hi != 0 ? 64 + std::bit_width(top_hi)
                               : std::bit_width(static_cast<std::uint64_t>(top));
  for (;;) {
    u128 candidate;
    if (bits <= 64) {
      candidate = engine_() >> (64 - bits);
    } else {
      const std::uint64_t lo = engine_();
      const std::uint64_t hi = engine_() >> (128 - bits);
      candidate = (static_cast<u128>(hi) << 64) | lo;
    }
    if (candidate < bound) return candidate;
  }
}

FieldElement::FieldElement(u128 residue, const PrimeModulus& modulus)
    : residue_(residue), modulus_(modulus) {
  if (residue >= modulus.value())
    throw Error(ErrorKind::InvalidArgument, "field element residue not reduced");
}

FieldElement FieldElement::from_int(std::int64_t value, const PrimeModulus& m) {
  return {m.reduce(value), m};
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!(modulus_ == o.modulus_))
    throw Error(ErrorKind::ModulusMismatch, "field elements over different primes");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {modulus_.add(residue_, o.residue_), modulus_};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {modulus_.sub(residue_, o.residue_), modulus_};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {modulus_.mul(residue_, o.residue_), modulus_};
}

FieldElement FieldElement::operator-() const { return {modulus_.neg(residue_), modulus_}; }

FieldElement FieldElement::inverse() const { return {modulus_.inv(residue_), modulus_}; }

FieldElement ff_add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement ff_sub(const FieldElement& a, const FieldElement& b) { return a - b; }
FieldElement ff_mul(const FieldElement& a, const FieldElement& b) { return a * b; }
FieldElement ff_neg(const FieldElement& a) { return -a; }
FieldElement ff_inv(const FieldElement& a) { return a.inverse(); }

FieldElement ff_from_rational(std::int64_t num, std::int64_t den, const PrimeModulus& m) {
  const u128 d = m.reduce(den);
  if (d == 0)
    throw Error(ErrorKind::DenominatorVanishes, "denominator divisible by the prime");
  return {m.mul(m.reduce(num), m.inv(d)), m};
}

FieldElement ff_sample_uniform(const PrimeModulus& m, RandomStream& rng) {
  return {rng.uniform_below(m.value()), m};
}

}  // namespace algeq
