#include "qrlab/symmetry.hpp"

#include "qrlab/errors.hpp"

#include <algorithm>
#include <fmt/format.h>

namespace qrlab {

std::string_view name(SymmetryMap m) noexcept
{
	switch (m)
	{
	case SymmetryMap::Identity: return "Identity";
	case SymmetryMap::H: return "H";
	case SymmetryMap::V: return "V";
	case SymmetryMap::C: return "C";
	}
	return "?";
}

LatticePoint apply(SymmetryMap m, const LatticePoint &pt, const LatticeRect &rect)
{
	if (!rect.contains(pt.x, pt.y))
		throw InputError(fmt::format("({}, {}) lies outside the {}x{} rectangle", pt.x, pt.y, rect.width(),
		                             rect.height()));
	// (p+1)/2 - x = width + 1 - x
	const i64 mx = rect.width() + 1 - pt.x;
	const i64 my = rect.height() + 1 - pt.y;
	switch (m)
	{
	case SymmetryMap::Identity: return rect.point(pt.x, pt.y);
	case SymmetryMap::H: return rect.point(pt.x, my);
	case SymmetryMap::V: return rect.point(mx, pt.y);
	case SymmetryMap::C: return rect.point(mx, my);
	}
	throw std::logic_error("unknown symmetry");
}

FixedPointReport fixed_points(SymmetryMap m, const LatticeRect &rect, u64 cap)
{
	FixedPointReport report{m, {}};
	for (const auto &pt : enumerate_points(rect, cap))
		if (apply(m, pt, rect) == pt)
			report.fixed.push_back(pt);
	return report;
}

std::vector<Orbit> orbits(const LatticeRect &rect, u64 cap)
{
	const auto h = rect.height();
	auto index = [h](const LatticePoint &pt) { return static_cast<std::size_t>((pt.x - 1) * h + (pt.y - 1)); };

	std::vector<bool> seen(rect.point_count(), false);
	std::vector<Orbit> result;
	// row-major traversal meets each orbit first at its least point
	for (const auto &pt : enumerate_points(rect, cap))
	{
		if (seen[index(pt)])
			continue;
		Orbit orbit;
		for (auto m : kAllSymmetries)
		{
			auto img = apply(m, pt, rect);
			if (!seen[index(img)])
			{
				seen[index(img)] = true;
				orbit.points.push_back(img);
			}
		}
		std::ranges::sort(orbit.points);
		result.push_back(std::move(orbit));
	}
	return result;
}

std::vector<PointPair> side_flip_violations(const LatticeRect &rect, u64 cap)
{
	std::vector<PointPair> pairs;
	for (const auto &pt : enumerate_points(rect, cap))
	{
		auto image = apply(SymmetryMap::C, pt, rect);
		// each unordered pair once, from its smaller member
		if (!(pt < image))
			continue;
		if (pt.side() == image.side())
			pairs.push_back({pt, image});
	}
	return pairs;
}

} // namespace qrlab
