#include "qrlab/lattice.hpp"

#include "qrlab/errors.hpp"

#include <fmt/format.h>
#include <utility>

namespace qrlab {

namespace {

using u128 = unsigned __int128;

// sum_{i=0}^{n-1} floor((a*i + b) / m) by repeated Euclid-style reduction.
u128 floor_sum_wide(u128 n, u128 m, u128 a, u128 b)
{
	u128 total = 0;
	while (true)
	{
		if (a >= m)
		{
			total += (n * (n - 1) / 2) * (a / m);
			a %= m;
		}
		if (b >= m)
		{
			total += n * (b / m);
			b %= m;
		}
		u128 y_max = a * n + b;
		if (y_max < m)
			break;
		n = y_max / m;
		b = y_max % m;
		std::swap(m, a);
	}
	return total;
}

u128 half_floor_sum(u64 a, OddPrime m, u64 upper)
{
	if (a % m.value() == 0)
		throw CoprimalityError(fmt::format("{} divides {}", m.value(), a));
	if (upper > m.value() - 1)
		throw InputError(fmt::format("floor sum upper bound {} exceeds {}", upper, m.value() - 1));
	return floor_sum_wide(u128(upper) + 1, m.value(), a, 0);
}

} // namespace

LatticePoint LatticeRect::point(i64 x, i64 y) const
{
	if (!contains(x, y))
		throw InputError(fmt::format("({}, {}) lies outside the {}x{} rectangle", x, y, width(), height()));
	return {x, y, static_cast<i64>(q()) * x - static_cast<i64>(p()) * y};
}

void LatticeRect::require_enumerable(u64 cap) const
{
	if (point_count() > cap)
		throw ResourceError(fmt::format("rectangle for (p, q) = ({}, {}) has {} points, above the "
		                                "enumeration cap {}; use the floor-sum counts instead",
		                                p(), q(), point_count(), cap));
}

PointRange enumerate_points(const LatticeRect &rect, u64 cap)
{
	rect.require_enumerable(cap);
	return PointRange(rect);
}

PartitionCounts partition_counts(const LatticeRect &rect)
{
	const auto p = rect.pair().p();
	const auto q = rect.pair().q();
	return {
	    .n_plus = floor_sum(p.value(), q, q.half()),
	    .n_minus = floor_sum(q.value(), p, p.half()),
	    .total = rect.point_count(),
	};
}

PartitionCounts classify_points(const LatticeRect &rect, u64 cap)
{
	PartitionCounts counts{0, 0, rect.point_count()};
	for (const auto &pt : enumerate_points(rect, cap))
	{
		if (pt.side_value == 0)
			throw std::logic_error(fmt::format("lattice point ({}, {}) on the line", pt.x, pt.y));
		++(pt.side() == Side::Plus ? counts.n_plus : counts.n_minus);
	}
	return counts;
}

u64 floor_sum(u64 a, OddPrime m, u64 upper)
{
	u128 s = half_floor_sum(a, m, upper);
	if (s > UINT64_MAX)
		throw InputError(fmt::format("floor sum for a = {}, m = {} overflows 64 bits", a, m.value()));
	return static_cast<u64>(s);
}

LegendreValue legendre_eisenstein(u64 q, OddPrime p)
{
	if (q % 2 == 0)
		throw InputError(fmt::format("the floor-sum symbol needs odd q, got {}", q));
	return to_legendre(half_floor_sum(q, p, p.half()) % 2 == 0 ? Sign::Plus : Sign::Minus);
}

} // namespace qrlab
