#pragma once

#include "qrlab/arith.hpp"

#include <compare>
#include <cstddef>
#include <iterator>

namespace qrlab {

/// Default limit on the number of points any enumeration may visit.
inline constexpr u64 kDefaultEnumerationCap = 1'000'000;

/// Which side of the line qx = py a point lies on.
enum class Side
{
	Plus,  ///< qx < py
	Minus, ///< qx > py
};

struct LatticePoint
{
	i64 x;
	i64 y;
	/// q*x - p*y
	i64 side_value;

	Side side() const noexcept { return side_value > 0 ? Side::Minus : Side::Plus; }

	friend bool operator==(const LatticePoint &a, const LatticePoint &b) noexcept
	{
		return a.x == b.x && a.y == b.y;
	}
	friend std::strong_ordering operator<=>(const LatticePoint &a, const LatticePoint &b) noexcept
	{
		if (auto c = a.x <=> b.x; c != 0)
			return c;
		return a.y <=> b.y;
	}
};

/// The rectangle 1 <= x <= (p-1)/2, 1 <= y <= (q-1)/2.
class LatticeRect
{
  public:
	explicit LatticeRect(PrimePair pair) : pair_(pair) {}

	PrimePair pair() const noexcept { return pair_; }
	u64 p() const noexcept { return pair_.p().value(); }
	u64 q() const noexcept { return pair_.q().value(); }
	i64 width() const noexcept { return static_cast<i64>(pair_.p().half()); }
	i64 height() const noexcept { return static_cast<i64>(pair_.q().half()); }
	/// (p-1)(q-1)/4
	u64 point_count() const noexcept { return pair_.p().half() * pair_.q().half(); }

	bool contains(i64 x, i64 y) const noexcept
	{
		return 1 <= x && x <= width() && 1 <= y && y <= height();
	}
	/// Builds the point with its side value; throws InputError if outside.
	LatticePoint point(i64 x, i64 y) const;
	/// Throws ResourceError when point_count() exceeds cap.
	void require_enumerable(u64 cap) const;

  private:
	PrimePair pair_;
};

/// Lazily yields every point of a rect in row-major order (x ascending,
/// then y ascending).
class PointRange
{
  public:
	class iterator
	{
	  public:
		using iterator_concept = std::forward_iterator_tag;
		using value_type = LatticePoint;
		using difference_type = std::ptrdiff_t;

		iterator() = default;
		iterator(const LatticeRect *rect, i64 x, i64 y) : rect_(rect), x_(x), y_(y) {}

		LatticePoint operator*() const
		{
			return {x_, y_, static_cast<i64>(rect_->q()) * x_ - static_cast<i64>(rect_->p()) * y_};
		}
		iterator &operator++()
		{
			if (++y_ > rect_->height())
			{
				y_ = 1;
				++x_;
			}
			return *this;
		}
		iterator operator++(int)
		{
			auto tmp = *this;
			++*this;
			return tmp;
		}
		friend bool operator==(const iterator &a, const iterator &b) noexcept
		{
			return a.x_ == b.x_ && a.y_ == b.y_;
		}

	  private:
		const LatticeRect *rect_ = nullptr;
		i64 x_ = 0;
		i64 y_ = 0;
	};

	explicit PointRange(LatticeRect rect) : rect_(rect) {}

	iterator begin() const { return {&rect_, 1, 1}; }
	iterator end() const { return {&rect_, rect_.width() + 1, 1}; }
	u64 size() const noexcept { return rect_.point_count(); }

  private:
	LatticeRect rect_;
};

/// Throws ResourceError when the rect has more than cap points; use the
/// counting operations for large rects.
PointRange enumerate_points(const LatticeRect &rect, u64 cap = kDefaultEnumerationCap);

/// n_plus counts qx < py, n_minus counts qx > py.
struct PartitionCounts
{
	u64 n_plus;
	u64 n_minus;
	u64 total;

	friend bool operator==(const PartitionCounts &, const PartitionCounts &) = default;
};

/// Floor-sum counts; no enumeration, no cap.
PartitionCounts partition_counts(const LatticeRect &rect);

/// Counts by visiting every point. Subject to the enumeration cap.
PartitionCounts classify_points(const LatticeRect &rect, u64 cap = kDefaultEnumerationCap);

/// Sum of floor(a*x/m) for x = 1 .. upper. Requires m not dividing a and
/// upper <= m-1. Runs in O(log) steps.
u64 floor_sum(u64 a, OddPrime m, u64 upper);

/// (-1)^(sum of floor(q*x/p), x <= (p-1)/2). q must be odd and coprime to p.
LegendreValue legendre_eisenstein(u64 q, OddPrime p);

} // namespace qrlab
