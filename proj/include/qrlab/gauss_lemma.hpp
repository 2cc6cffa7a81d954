#pragma once

#include "qrlab/arith.hpp"

#include <span>
#include <vector>

namespace qrlab {

/// Largest modulus for which a full residue table is materialized.
inline constexpr u64 kMaxTableModulus = u64(1) << 20;

/// N_p(a): how many of a, 2a, ..., ((p-1)/2)a reduce into (p/2, p).
struct GaussCount
{
	OddPrime p;
	u64 a;
	u64 n_large;
};

/// Streams over the half-system; no table is built.
/// Throws CoprimalityError when p | a.
GaussCount count_large_residues(u64 a, OddPrime p);

/// (-1)^N_p(a).
LegendreValue legendre_gauss(u64 a, OddPrime p);

/// Euclidean steps of q*x by p for every x in 1 .. p-1.
///
/// The remainders form a permutation of 1 .. p-1 and satisfy
/// r_{p-x} = p - r_x; both are checked by verify_* helpers rather than
/// assumed, so the table can be used as evidence.
class ResidueTable
{
  public:
	ResidueTable(OddPrime p, u64 q, std::vector<EuclideanStep> steps);

	OddPrime p() const noexcept { return p_; }
	u64 q() const noexcept { return q_; }
	std::span<const EuclideanStep> steps() const noexcept { return steps_; }
	/// 1-based.
	const EuclideanStep &step(u64 x) const;

	/// Multipliers x in 1 .. p-1 with r_{p-x} != p - r_x.
	std::vector<u64> reflection_violations() const;
	bool is_permutation() const;
	/// Counts of x with r_x > p/2 and r_x < p/2 over the whole table.
	std::pair<u64, u64> large_small_balance() const;

  private:
	OddPrime p_;
	u64 q_;
	std::vector<EuclideanStep> steps_;
};

/// Throws CoprimalityError when p | q, ResourceError when p > kMaxTableModulus.
ResidueTable residue_table(u64 q, OddPrime p);

/// Product of eps_x over x = 1 .. p-1.
Sign epsilon_product_full(u64 q, OddPrime p);

/// Product of eps_x over the half-system x = 1 .. (p-1)/2.
Sign epsilon_product_half(u64 q, OddPrime p);

} // namespace qrlab
