#pragma once

#include "qrlab/lattice.hpp"

#include <array>
#include <string_view>
#include <vector>

namespace qrlab {

/// Elements of the Klein four group generated by the two axis reflections
/// of the rectangle:
///   H(x, y) = (x, (q+1)/2 - y)
///   V(x, y) = ((p+1)/2 - x, y)
///   C = H o V, the central symmetry.
enum class SymmetryMap
{
	Identity,
	H,
	V,
	C,
};

inline constexpr std::array<SymmetryMap, 4> kAllSymmetries = {SymmetryMap::Identity, SymmetryMap::H,
                                                               SymmetryMap::V, SymmetryMap::C};

std::string_view name(SymmetryMap m) noexcept;

/// Group product: compose(a, b) = a o b.
constexpr SymmetryMap compose(SymmetryMap a, SymmetryMap b) noexcept
{
	// (Z/2)^2 with H = (1,0), V = (0,1), C = (1,1)
	auto bits = [](SymmetryMap m) {
		switch (m)
		{
		case SymmetryMap::Identity: return 0;
		case SymmetryMap::H: return 1;
		case SymmetryMap::V: return 2;
		case SymmetryMap::C: return 3;
		}
		return 0;
	};
	constexpr std::array<SymmetryMap, 4> from_bits = {SymmetryMap::Identity, SymmetryMap::H, SymmetryMap::V,
	                                                   SymmetryMap::C};
	return from_bits[bits(a) ^ bits(b)];
}

/// Image of pt under m. Throws InputError if pt is not in rect.
LatticePoint apply(SymmetryMap m, const LatticePoint &pt, const LatticeRect &rect);

struct FixedPointReport
{
	SymmetryMap map;
	std::vector<LatticePoint> fixed;
};

FixedPointReport fixed_points(SymmetryMap m, const LatticeRect &rect, u64 cap = kDefaultEnumerationCap);

/// A <H, V>-orbit, points sorted lexicographically.
struct Orbit
{
	std::vector<LatticePoint> points;

	std::size_t size() const noexcept { return points.size(); }
	const LatticePoint &least() const { return points.front(); }
};

/// Partition of the rect into orbits, ordered by least point.
std::vector<Orbit> orbits(const LatticeRect &rect, u64 cap = kDefaultEnumerationCap);

/// Unordered pair stored with first < second.
struct PointPair
{
	LatticePoint first;
	LatticePoint second;

	friend bool operator==(const PointPair &, const PointPair &) = default;
};

/// Every pair {pt, C(pt)} with pt != C(pt) whose side values share a sign,
/// listed once each and ordered by first point.
std::vector<PointPair> side_flip_violations(const LatticeRect &rect, u64 cap = kDefaultEnumerationCap);

} // namespace qrlab
