#include "qrlab/arith.hpp"

#include "qrlab/errors.hpp"

#include <fmt/format.h>

namespace qrlab {

bool is_odd_prime(u64 n)
{
	if (n == 0 || n > kMaxPrimeInput)
		throw InputError(fmt::format("primality input {} outside [1, 2^32]", n));
	if (n < 3 || n % 2 == 0)
		return false;
	for (u64 d = 3; d * d <= n; d += 2)
		if (n % d == 0)
			return false;
	return true;
}

OddPrime::OddPrime(u64 value) : value_(value)
{
	if (value == 0 || value > kMaxPrimeInput || !is_odd_prime(value))
		throw InputError(fmt::format("{} is not an odd prime", value));
}

PrimePair::PrimePair(OddPrime p, OddPrime q) : p_(p), q_(q)
{
	if (p == q)
		throw InputError(fmt::format("primes must be distinct, got p = q = {}", p.value()));
}

PrimePair PrimePair::of(u64 p, u64 q) { return PrimePair(OddPrime(p), OddPrime(q)); }

u64 mulmod(u64 a, u64 b, u64 m)
{
	return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m)
{
	u64 result = 1 % m;
	base %= m;
	while (exp)
	{
		if (exp & 1)
			result = mulmod(result, base, m);
		base = mulmod(base, base, m);
		exp >>= 1;
	}
	return result;
}

u64 reduce(i64 a, u64 m)
{
	if (a >= 0)
		return static_cast<u64>(a) % m;
	// -(a + 1) avoids overflow at INT64_MIN
	u64 r = static_cast<u64>(-(a + 1)) % m;
	return m - 1 - r;
}

LegendreValue legendre_euler(i64 a, OddPrime p)
{
	u64 r = reduce(a, p.value());
	if (r == 0)
		return LegendreValue::Zero;
	u64 e = powmod(r, p.half(), p.value());
	if (e == 1)
		return LegendreValue::Residue;
	if (e == p.value() - 1)
		return LegendreValue::NonResidue;
	// unreachable for prime p
	throw std::logic_error(fmt::format("Euler criterion gave {} mod {}", e, p.value()));
}

EuclideanStep euclid_step(u64 q, OddPrime p, u64 x)
{
	const u64 m = p.value();
	if (x < 1 || x > m - 1)
		throw InputError(fmt::format("multiplier {} outside [1, {}]", x, m - 1));
	if (q % m == 0)
		throw CoprimalityError(fmt::format("{} divides {}", m, q));
	auto prod = static_cast<unsigned __int128>(q) * x;
	auto quotient = prod / m;
	if (quotient > UINT64_MAX)
		throw InputError(fmt::format("quotient of {}*{} by {} overflows 64 bits", q, x, m));
	u64 r = static_cast<u64>(prod % m);
	// r == p/2 cannot happen for odd p
	Sign s = 2 * r < m ? Sign::Plus : Sign::Minus;
	return {x, static_cast<u64>(quotient), r, s};
}

} // namespace qrlab
