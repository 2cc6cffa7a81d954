#pragma once

#include "qrlab/arith.hpp"
#include "qrlab/lattice.hpp"

#include "json.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qrlab {

/// Every checkable assertion of the reciprocity argument.
enum class ClaimId
{
	C1 = 1, ///< Gauss's lemma agrees with Euler's criterion
	C2,     ///< no lattice point on qx = py
	C3,     ///< |S+| + |S-| = |S|
	C4,     ///< the central symmetry has no fixed point
	C5,     ///< pt and C(pt) lie on opposite sides
	C6,     ///< N_p(q) = |S+|, N_q(p) = |S-|
	C7,     ///< N_p(q) + N_q(p) = (p-1)(q-1)/4
	C8,     ///< quadratic reciprocity
	C9,     ///< r_{p-x} = p - r_x
	C10,    ///< full epsilon product = (-1)^((p-1)/2)
	C11,    ///< half epsilon product = (-1)^N_p(q)
	C12,    ///< floor sums count S- and S+
	C13,    ///< orbit sizes
};

inline constexpr int kClaimCount = 13;

/// The statement as printed, or the weaker companion statement tracked
/// alongside it when the printed one is known to fail.
enum class ClaimForm
{
	Printed,
	Companion,
};

struct ClaimInfo
{
	ClaimId id;
	std::string_view source;
	std::string_view statement;
	/// Label suffix of the printed form; empty for single-form claims.
	std::string_view printed_form;
	/// Label suffix of the companion form; empty when there is none.
	std::string_view companion_form;
	std::string_view expected;
	bool needs_enumeration;

	bool has_companion() const noexcept { return !companion_form.empty(); }
};

std::span<const ClaimInfo> claim_registry();
const ClaimInfo &claim_info(ClaimId id);
/// "C1" .. "C13"
std::string claim_name(ClaimId id);
/// Accepts "C7" or "c7"; throws InputError otherwise.
ClaimId parse_claim_id(std::string_view text);

/// One verdict-bearing form of a claim, e.g. C6-equality.
struct ClaimCheck
{
	ClaimId id;
	ClaimForm form = ClaimForm::Printed;

	std::string label() const;
	friend auto operator<=>(const ClaimCheck &, const ClaimCheck &) = default;
};

/// Every check of every claim in registry order.
std::vector<ClaimCheck> all_checks();
std::vector<ClaimCheck> checks_for(ClaimId id);
/// Parses a comma-separated selection such as "C8,C6-equality" or "all".
/// A bare claim id selects all its forms. Result is sorted and deduplicated.
std::vector<ClaimCheck> parse_checks(std::string_view selection);

struct Verdicts
{
	bool printed;
	std::optional<bool> companion;

	bool holds(ClaimForm f) const;
	friend bool operator==(const Verdicts &, const Verdicts &) = default;
};

struct ClaimOutcome
{
	ClaimId claim;
	PrimePair pair;
	bool holds;
	std::optional<bool> companion_holds;
	/// Enough data for verdicts_from_witness to reproduce the verdicts.
	nlohmann::json witness;

	Verdicts verdicts() const { return {holds, companion_holds}; }
	bool holds_for(ClaimForm f) const { return verdicts().holds(f); }
};

/// Evaluates one claim on one ordered pair. Enumeration-based claims throw
/// ResourceError (naming the claim) when the rect exceeds cap.
ClaimOutcome verify_claim(ClaimId id, PrimePair pair, u64 cap = kDefaultEnumerationCap);

/// Recomputes the verdicts using only the witness payload.
Verdicts verdicts_from_witness(ClaimId id, const nlohmann::json &witness);

/// Compact one-line rendering of a witness ("k=v;k=v"), long arrays truncated.
std::string summarize_witness(const nlohmann::json &witness);

std::vector<u64> odd_primes_below(u64 bound);
/// Ordered pairs of distinct odd primes below bound, lexicographic.
std::vector<PrimePair> ordered_pairs_below(u64 bound);

struct Counterexample
{
	PrimePair pair;
	nlohmann::json witness;

	friend bool operator==(const Counterexample &, const Counterexample &) = default;
};

struct CheckSummary
{
	ClaimCheck check;
	u64 pairs_tested = 0;
	u64 pairs_failed = 0;
	u64 pairs_skipped = 0;
	std::vector<Counterexample> counterexamples;

	friend bool operator==(const CheckSummary &, const CheckSummary &) = default;
};

struct VerdictRecord
{
	ClaimCheck check;
	PrimePair pair;
	/// Empty when the evaluation was skipped for exceeding the cap.
	std::optional<bool> holds;
	std::string witness_summary;

	friend bool operator==(const VerdictRecord &, const VerdictRecord &) = default;
};

struct SweepReport
{
	u64 bound;
	u64 counterexample_limit;
	u64 enumeration_cap;
	std::vector<CheckSummary> checks;
	/// Populated only when SweepOptions::record_verdicts is set.
	std::vector<VerdictRecord> verdicts;

	const CheckSummary *find(const ClaimCheck &check) const;
	bool all_hold() const;

	friend bool operator==(const SweepReport &, const SweepReport &) = default;
};

struct SweepOptions
{
	u64 bound = 200;
	std::vector<ClaimCheck> checks = all_checks();
	u64 counterexample_limit = 10;
	u64 enumeration_cap = kDefaultEnumerationCap;
	/// 0 picks the hardware concurrency.
	unsigned threads = 0;
	bool record_verdicts = false;
};

/// Evaluates every selected check on every ordered pair below the bound.
/// Work may run in parallel; results merge in lexicographic pair order so
/// the report is deterministic. Throws InputError for bound < 5.
SweepReport sweep(const SweepOptions &options);

/// Lexicographically smallest pair below bound falsifying the check.
std::optional<Counterexample> find_counterexample(ClaimCheck check, u64 bound, u64 cap = kDefaultEnumerationCap);

} // namespace qrlab
