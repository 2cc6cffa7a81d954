#pragma once

#include <compare>
#include <cstdint>
#include <ranges>

namespace qrlab {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Largest integer accepted by the primality test.
inline constexpr u64 kMaxPrimeInput = u64(1) << 32;

enum class Sign : int
{
	Minus = -1,
	Plus = 1,
};

constexpr Sign operator*(Sign a, Sign b) noexcept
{
	return a == b ? Sign::Plus : Sign::Minus;
}

constexpr Sign operator-(Sign s) noexcept
{
	return s == Sign::Plus ? Sign::Minus : Sign::Plus;
}

/// (-1)^exponent
constexpr Sign parity_sign(u64 exponent) noexcept
{
	return exponent % 2 == 0 ? Sign::Plus : Sign::Minus;
}

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }

enum class LegendreValue : int
{
	NonResidue = -1,
	Zero = 0,
	Residue = 1,
};

constexpr LegendreValue to_legendre(Sign s) noexcept
{
	return s == Sign::Plus ? LegendreValue::Residue : LegendreValue::NonResidue;
}

constexpr int to_int(LegendreValue v) noexcept { return static_cast<int>(v); }

/// Deterministic trial division. Throws InputError for n == 0 or n > 2^32.
bool is_odd_prime(u64 n);

/// An odd prime, validated at construction.
class OddPrime
{
  public:
	/// Throws InputError unless value is an odd prime <= 2^32.
	explicit OddPrime(u64 value);

	constexpr u64 value() const noexcept { return value_; }
	/// (p - 1) / 2
	constexpr u64 half() const noexcept { return (value_ - 1) / 2; }

	friend auto operator<=>(const OddPrime &, const OddPrime &) = default;

  private:
	u64 value_;
};

/// Two distinct odd primes (p, q). Orientation matters.
class PrimePair
{
  public:
	PrimePair(OddPrime p, OddPrime q);
	/// Validates both values; throws InputError on non-primes or p == q.
	static PrimePair of(u64 p, u64 q);

	OddPrime p() const noexcept { return p_; }
	OddPrime q() const noexcept { return q_; }
	PrimePair swapped() const { return PrimePair(q_, p_); }

	friend auto operator<=>(const PrimePair &, const PrimePair &) = default;

  private:
	OddPrime p_;
	OddPrime q_;
};

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);

/// Reduces a signed value into [0, m).
u64 reduce(i64 a, u64 m);

/// Euler's criterion: a^((p-1)/2) mod p mapped to {+1, -1}, or 0 when p | a.
LegendreValue legendre_euler(i64 a, OddPrime p);

/// One division q*x = p*quotient + remainder with the sign of the remainder
/// relative to p/2.
struct EuclideanStep
{
	u64 x;
	u64 quotient;
	u64 remainder;
	Sign sign;

	friend bool operator==(const EuclideanStep &, const EuclideanStep &) = default;
};

/// Requires 1 <= x <= p-1 (InputError) and p not dividing q (CoprimalityError).
EuclideanStep euclid_step(u64 q, OddPrime p, u64 x);

/// The half-system 1 .. (p-1)/2 modulo p.
class HalfSystem
{
  public:
	explicit HalfSystem(OddPrime modulus) : modulus_(modulus) {}

	OddPrime modulus() const noexcept { return modulus_; }
	u64 size() const noexcept { return modulus_.half(); }
	auto elements() const { return std::views::iota(u64(1), modulus_.half() + 1); }

  private:
	OddPrime modulus_;
};

inline HalfSystem half_system(OddPrime p) { return HalfSystem(p); }

} // namespace qrlab
