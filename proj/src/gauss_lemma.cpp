#include "qrlab/gauss_lemma.hpp"

#include "qrlab/errors.hpp"

#include <algorithm>
#include <fmt/format.h>

namespace qrlab {

namespace {

u64 unit_residue(u64 a, OddPrime p)
{
	u64 r = a % p.value();
	if (r == 0)
		throw CoprimalityError(fmt::format("{} divides {}; Gauss's lemma needs a unit", p.value(), a));
	return r;
}

Sign epsilon_product(u64 q, OddPrime p, u64 upper)
{
	const u64 r = unit_residue(q, p);
	Sign product = Sign::Plus;
	for (u64 x = 1; x <= upper; ++x)
		product = product * euclid_step(r, p, x).sign;
	return product;
}

} // namespace

GaussCount count_large_residues(u64 a, OddPrime p)
{
	const u64 r = unit_residue(a, p);
	const u64 m = p.value();
	u64 large = 0;
	u64 residue = 0;
	for (u64 x = 1; x <= p.half(); ++x)
	{
		residue += r;
		if (residue >= m)
			residue -= m;
		if (2 * residue > m)
			++large;
	}
	return {p, a, large};
}

LegendreValue legendre_gauss(u64 a, OddPrime p)
{
	return to_legendre(parity_sign(count_large_residues(a, p).n_large));
}

ResidueTable::ResidueTable(OddPrime p, u64 q, std::vector<EuclideanStep> steps)
    : p_(p), q_(q), steps_(std::move(steps))
{
	if (steps_.size() != p.value() - 1)
		throw InputError(fmt::format("residue table for p = {} needs {} steps, got {}", p.value(),
		                             p.value() - 1, steps_.size()));
}

const EuclideanStep &ResidueTable::step(u64 x) const
{
	if (x < 1 || x > steps_.size())
		throw InputError(fmt::format("multiplier {} outside [1, {}]", x, steps_.size()));
	return steps_[x - 1];
}

std::vector<u64> ResidueTable::reflection_violations() const
{
	const u64 m = p_.value();
	std::vector<u64> bad;
	for (u64 x = 1; x <= m - 1; ++x)
		if (step(m - x).remainder != m - step(x).remainder)
			bad.push_back(x);
	return bad;
}

bool ResidueTable::is_permutation() const
{
	std::vector<bool> seen(p_.value(), false);
	for (const auto &s : steps_)
	{
		if (s.remainder == 0 || s.remainder >= p_.value() || seen[s.remainder])
			return false;
		seen[s.remainder] = true;
	}
	return true;
}

std::pair<u64, u64> ResidueTable::large_small_balance() const
{
	auto large = std::ranges::count(steps_, Sign::Minus, &EuclideanStep::sign);
	return {static_cast<u64>(large), steps_.size() - static_cast<u64>(large)};
}

ResidueTable residue_table(u64 q, OddPrime p)
{
	unit_residue(q, p);
	if (p.value() > kMaxTableModulus)
		throw ResourceError(fmt::format("residue table for p = {} exceeds the 2^20 modulus limit", p.value()));
	std::vector<EuclideanStep> steps;
	steps.reserve(p.value() - 1);
	for (u64 x = 1; x < p.value(); ++x)
		steps.push_back(euclid_step(q, p, x));
	return ResidueTable(p, q, std::move(steps));
}

Sign epsilon_product_full(u64 q, OddPrime p) { return epsilon_product(q, p, p.value() - 1); }

Sign epsilon_product_half(u64 q, OddPrime p) { return epsilon_product(q, p, p.half()); }

} // namespace qrlab
