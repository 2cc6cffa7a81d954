#include "oracles.hpp"

#include "qrlab/claims.hpp"
#include "qrlab/errors.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace qrlab;
using nlohmann::json;

namespace {

PrimePair pp(u64 p, u64 q) { return PrimePair::of(p, q); }

std::vector<PrimePair> failing_pairs(const CheckSummary &s)
{
	std::vector<PrimePair> out;
	for (const auto &c : s.counterexamples)
		out.push_back(c.pair);
	return out;
}

SweepOptions options(u64 bound, std::string_view selection)
{
	SweepOptions o;
	o.bound = bound;
	o.checks = parse_checks(selection);
	o.counterexample_limit = 1000;
	return o;
}

} // namespace

TEST(Registry, ThirteenClaimsWithLabels)
{
	ASSERT_EQ(claim_registry().size(), 13u);
	for (int i = 1; i <= kClaimCount; ++i)
		EXPECT_EQ(claim_info(static_cast<ClaimId>(i)).id, static_cast<ClaimId>(i));
	EXPECT_EQ((ClaimCheck{ClaimId::C6, ClaimForm::Printed}.label()), "C6-equality");
	EXPECT_EQ((ClaimCheck{ClaimId::C7, ClaimForm::Companion}.label()), "C7-congruence");
	EXPECT_EQ((ClaimCheck{ClaimId::C12, ClaimForm::Printed}.label()), "C12-exact");
	EXPECT_EQ((ClaimCheck{ClaimId::C13, ClaimForm::Printed}.label()), "C13-strict");
	EXPECT_EQ((ClaimCheck{ClaimId::C8}.label()), "C8");
	EXPECT_EQ(all_checks().size(), 17u);
}

TEST(Registry, ParseSelections)
{
	EXPECT_EQ(parse_checks("C8"), (std::vector<ClaimCheck>{{ClaimId::C8}}));
	EXPECT_EQ(parse_checks("c6"),
	          (std::vector<ClaimCheck>{{ClaimId::C6, ClaimForm::Printed}, {ClaimId::C6, ClaimForm::Companion}}));
	EXPECT_EQ(parse_checks("C8, C6-congruence,C8"),
	          (std::vector<ClaimCheck>{{ClaimId::C6, ClaimForm::Companion}, {ClaimId::C8}}));
	EXPECT_EQ(parse_checks("all"), all_checks());
	EXPECT_THROW(parse_checks("C14"), InputError);
	EXPECT_THROW(parse_checks("C8-equality"), InputError);
	EXPECT_THROW(parse_checks("X1"), InputError);
	EXPECT_THROW(parse_checks(""), InputError);
}

TEST(VerifyClaim, Examples)
{
	auto c8 = verify_claim(ClaimId::C8, pp(3, 5));
	EXPECT_TRUE(c8.holds);
	EXPECT_EQ(c8.witness["legendre_p_q"], -1);
	EXPECT_EQ(c8.witness["legendre_q_p"], -1);
	EXPECT_EQ(c8.witness["exponent"], 2);

	auto c4 = verify_claim(ClaimId::C4, pp(3, 7));
	EXPECT_FALSE(c4.holds);
	EXPECT_EQ(c4.witness["fixed_points"], json::parse("[[1,2]]"));

	auto c5 = verify_claim(ClaimId::C5, pp(5, 13));
	EXPECT_FALSE(c5.holds);
	EXPECT_EQ(c5.witness["same_side_pairs"],
	          json::parse(R"([{"points":[[1,2],[2,5]],"side_values":[3,1]}])"));

	auto c6 = verify_claim(ClaimId::C6, pp(7, 5));
	EXPECT_FALSE(c6.holds);
	EXPECT_EQ(c6.companion_holds, true);
	EXPECT_EQ(c6.witness["n_p_q"], 1);
	EXPECT_EQ(c6.witness["s_plus"], 3);

	auto c7 = verify_claim(ClaimId::C7, pp(7, 5));
	EXPECT_FALSE(c7.holds);
	EXPECT_EQ(c7.companion_holds, true);
	EXPECT_EQ(c7.witness["n_p_q"].get<u64>() + c7.witness["n_q_p"].get<u64>(), 2u);
	EXPECT_EQ(c7.witness["half_area"], 6);

	auto c9 = verify_claim(ClaimId::C9, pp(5, 13));
	EXPECT_TRUE(c9.holds);
	EXPECT_EQ(c9.witness["checked"], 4);

	auto c13 = verify_claim(ClaimId::C13, pp(3, 7));
	EXPECT_FALSE(c13.holds);
	EXPECT_EQ(c13.companion_holds, true);
	EXPECT_EQ(c13.witness["orbit_sizes"], json::parse(R"({"1":1,"2":1})"));
}

TEST(VerifyClaim, ResourceErrorNamesClaim)
{
	try
	{
		verify_claim(ClaimId::C5, pp(5, 13), 4);
		FAIL() << "expected ResourceError";
	}
	catch (const ResourceError &e)
	{
		EXPECT_NE(std::string(e.what()).find("C5"), std::string::npos);
	}
	// counting-only claims ignore the cap
	EXPECT_NO_THROW(verify_claim(ClaimId::C3, pp(5, 13), 1));
}

TEST(VerifyClaim, WitnessReproducesVerdict)
{
	for (auto pair : ordered_pairs_below(50))
		for (const auto &info : claim_registry())
		{
			auto o = verify_claim(info.id, pair);
			ASSERT_EQ(verdicts_from_witness(info.id, o.witness), o.verdicts());
			ASSERT_EQ(o.companion_holds.has_value(), info.has_companion());
		}
}

TEST(VerifyClaim, TamperedWitnessFlipsVerdict)
{
	auto c4 = verify_claim(ClaimId::C4, pp(5, 13));
	ASSERT_TRUE(c4.holds);
	c4.witness["fixed_points"].push_back({1, 1});
	EXPECT_FALSE(verdicts_from_witness(ClaimId::C4, c4.witness).printed);

	auto c8 = verify_claim(ClaimId::C8, pp(3, 5));
	c8.witness["exponent"] = 3;
	EXPECT_FALSE(verdicts_from_witness(ClaimId::C8, c8.witness).printed);
}

TEST(Pairs, OrderedLexicographic)
{
	auto pairs = ordered_pairs_below(12);
	// 3, 5, 7, 11
	ASSERT_EQ(pairs.size(), 12u);
	EXPECT_EQ(pairs.front(), pp(3, 5));
	EXPECT_EQ(pairs.back(), pp(11, 7));
	EXPECT_TRUE(std::ranges::is_sorted(pairs));
}

TEST(Sweep, ReciprocityHoldsBelow20)
{
	auto r = sweep(options(20, "C8"));
	ASSERT_EQ(r.checks.size(), 1u);
	EXPECT_EQ(r.checks[0].pairs_tested, 42u); // 7 odd primes below 20
	EXPECT_EQ(r.checks[0].pairs_failed, 0u);
}

TEST(Sweep, FixedPointFailuresBelow20)
{
	auto r = sweep(options(20, "C4"));
	std::vector<PrimePair> want;
	for (auto pair : ordered_pairs_below(20))
		if (pair.p().value() % 4 == 3 && pair.q().value() % 4 == 3)
			want.push_back(pair);
	EXPECT_EQ(failing_pairs(r.checks[0]), want);
	EXPECT_EQ(want.front(), pp(3, 7));
	EXPECT_NE(std::ranges::find(want, pp(7, 11)), want.end());
}

TEST(Sweep, StructuralClaimsHoldBelow20)
{
	auto r = sweep(options(20, "C2,C3,C9,C10,C11,C12-exact"));
	EXPECT_EQ(r.checks.size(), 6u);
	EXPECT_TRUE(r.all_hold());
}

TEST(Sweep, TruthSetBelow200)
{
	auto r = sweep(options(200, "C1,C2,C3,C4,C6,C7,C8,C9,C10,C11,C12,C13-relaxed"));
	for (const char *label : {"C1", "C2", "C3", "C8", "C9", "C10", "C11", "C12-exact", "C12-parity",
	                          "C7-congruence", "C6-congruence", "C13-relaxed"})
	{
		auto *s = r.find(parse_checks(label).front());
		ASSERT_NE(s, nullptr) << label;
		EXPECT_EQ(s->pairs_failed, 0u) << label;
		EXPECT_EQ(s->pairs_skipped, 0u) << label;
	}
	auto *c4 = r.find({ClaimId::C4});
	u64 both3 = 0;
	for (auto pair : ordered_pairs_below(200))
		both3 += pair.p().value() % 4 == 3 && pair.q().value() % 4 == 3;
	EXPECT_EQ(c4->pairs_failed, both3);
	for (const auto &ce : c4->counterexamples)
	{
		u64 p = ce.pair.p().value(), q = ce.pair.q().value();
		EXPECT_EQ(ce.witness["fixed_points"],
		          json::array({json::array({(p + 1) / 4, (q + 1) / 4})}));
	}
}

TEST(Sweep, PrintedFormsHaveCounterexamplesBelow20)
{
	for (const char *label : {"C5", "C6-equality", "C7-equality", "C13-strict"})
		EXPECT_TRUE(find_counterexample(parse_checks(label).front(), 20).has_value()) << label;
}

TEST(Sweep, CountsAndLimits)
{
	auto o = options(30, "C7");
	o.counterexample_limit = 2;
	auto r = sweep(o);
	const u64 pairs = ordered_pairs_below(30).size();
	for (const auto &c : r.checks)
	{
		EXPECT_EQ(c.pairs_tested, pairs);
		EXPECT_LE(c.counterexamples.size(), 2u);
	}
	EXPECT_GT(r.find({ClaimId::C7, ClaimForm::Printed})->pairs_failed, 2u);
	EXPECT_THROW(sweep(options(4, "C8")), InputError);
}

TEST(Sweep, SkipsOverCapWithoutFailing)
{
	auto o = options(30, "C5,C8");
	o.enumeration_cap = 20;
	auto r = sweep(o);
	auto *c5 = r.find({ClaimId::C5});
	EXPECT_GT(c5->pairs_skipped, 0u);
	EXPECT_EQ(c5->pairs_tested, ordered_pairs_below(30).size());
	EXPECT_EQ(r.find({ClaimId::C8})->pairs_skipped, 0u);
}

TEST(Sweep, DeterministicAcrossThreadCounts)
{
	auto o = options(60, "all");
	o.record_verdicts = true;
	o.threads = 1;
	auto serial = sweep(o);
	o.threads = 8;
	auto parallel = sweep(o);
	EXPECT_EQ(serial, parallel);
	EXPECT_EQ(serial.verdicts.size(), ordered_pairs_below(60).size() * all_checks().size());
}

TEST(FindCounterexample, Examples)
{
	// lexicographic scan: (3,13) precedes (5,11) and (5,13)
	auto c5 = find_counterexample({ClaimId::C5}, 20);
	ASSERT_TRUE(c5);
	EXPECT_EQ(c5->pair, pp(3, 13));
	EXPECT_EQ(c5->witness["same_side_pairs"],
	          json::parse(R"([{"points":[[1,3],[1,4]],"side_values":[4,1]}])"));
	for (auto pair : ordered_pairs_below(20))
	{
		bool expect_fail = !oracle::same_side_pairs(pair.p().value(), pair.q().value()).empty();
		EXPECT_EQ(!verify_claim(ClaimId::C5, pair).holds, expect_fail);
		if (pair < c5->pair)
			EXPECT_FALSE(expect_fail);
	}

	EXPECT_FALSE(find_counterexample({ClaimId::C8}, 200).has_value());

	auto c4 = find_counterexample({ClaimId::C4}, 20);
	ASSERT_TRUE(c4);
	EXPECT_EQ(c4->pair, pp(3, 7));
	EXPECT_EQ(c4->witness["fixed_points"], json::parse("[[1,2]]"));

	auto c6 = find_counterexample({ClaimId::C6, ClaimForm::Printed}, 10);
	ASSERT_TRUE(c6);
	EXPECT_EQ(c6->pair, pp(3, 7));
	EXPECT_EQ(c6->witness["n_p_q"], 0);
	EXPECT_EQ(c6->witness["s_plus"], 1);
}

TEST(Witness, Summary)
{
	json w = {{"a", 1}, {"list", {1, 2, 3, 4, 5}}, {"short", {1, 2}}};
	EXPECT_EQ(summarize_witness(w), "a=1;list=[1,2,3]+2more;short=[1,2]");
}
