#include "qrlab/claims.hpp"

#include "qrlab/errors.hpp"
#include "qrlab/gauss_lemma.hpp"
#include "qrlab/symmetry.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fmt/format.h>
#include <map>
#include <thread>

namespace qrlab {

using nlohmann::json;

namespace {

// clang-format off
constexpr std::array<ClaimInfo, kClaimCount> kRegistry = {{
    {ClaimId::C1, "Gauss's lemma",
     "(q/p) = (-1)^N_p(q), compared against Euler's criterion",
     "", "", "holds for all pairs", false},
    {ClaimId::C2, "lattice-count proof",
     "no point of S lies on the line qx = py",
     "", "", "holds for all pairs", true},
    {ClaimId::C3, "lattice-count proof",
     "|S+| + |S-| = |S| = (p-1)(q-1)/4",
     "", "", "holds for all pairs", false},
    {ClaimId::C4, "lattice-count proof",
     "the central symmetry C is a fixed-point-free involution of S",
     "", "", "fails exactly when p = q = 3 (mod 4); the fixed point is ((p+1)/4, (q+1)/4)", true},
    {ClaimId::C5, "Klein-four symmetry proposition",
     "the segment from (x, y) to C(x, y) crosses qx = py, so the two points lie on opposite sides",
     "", "", "fails on some pairs, first below 20", true},
    {ClaimId::C6, "lattice-count proof",
     "N_p(q) = |S+| and N_q(p) = |S-|; companion: N_p(q) = |S-| and N_q(p) = |S+| (mod 2)",
     "equality", "congruence", "equality fails on some pairs; congruence holds", false},
    {ClaimId::C7, "lattice-count proof",
     "N_p(q) + N_q(p) = (p-1)(q-1)/4; companion: the same modulo 2",
     "equality", "congruence", "equality fails on some pairs; congruence holds", false},
    {ClaimId::C8, "quadratic reciprocity theorem",
     "(p/q)(q/p) = (-1)^((p-1)(q-1)/4)",
     "", "", "holds for all pairs", false},
    {ClaimId::C9, "residue involution x -> p - x",
     "r_{p-x} = p - r_x for every x in 1 .. p-1",
     "", "", "holds for all pairs", false},
    {ClaimId::C10, "residue involution x -> p - x",
     "product of eps_x over x = 1 .. p-1 equals (-1)^((p-1)/2)",
     "", "", "holds for all pairs", false},
    {ClaimId::C11, "residue involution x -> p - x",
     "(-1)^N_p(q) equals the product of eps_x over x = 1 .. (p-1)/2",
     "", "", "holds for all pairs", false},
    {ClaimId::C12, "residue involution x -> p - x",
     "sum floor(qx/p) = |S-| and sum floor(py/q) = |S+|; companion: floor sums = N (mod 2)",
     "exact", "parity", "holds for all pairs", true},
    {ClaimId::C13, "Klein-four orbit remark",
     "<H, V>-orbits have size 4, collapsing to 2 near the boundary; companion: sizes in {1, 2, 4}",
     "strict", "relaxed", "strict form fails when a C-fixed point exists; relaxed holds", true},
}};
// clang-format on

json point_json(const LatticePoint &pt) { return json::array({pt.x, pt.y}); }

bool same_parity(u64 a, u64 b) { return a % 2 == b % 2; }

int sign_of(const json &v) { return v.get<int>(); }

int parity_int(u64 e) { return to_int(parity_sign(e)); }

ClaimOutcome evaluate(ClaimId id, PrimePair pair, u64 cap)
{
	const OddPrime p = pair.p();
	const OddPrime q = pair.q();
	const LatticeRect rect(pair);
	json w = {{"p", p.value()}, {"q", q.value()}};

	switch (id)
	{
	case ClaimId::C1: {
		auto count = count_large_residues(q.value(), p);
		w["n_large"] = count.n_large;
		w["gauss"] = to_int(to_legendre(parity_sign(count.n_large)));
		w["euler"] = to_int(legendre_euler(static_cast<i64>(q.value()), p));
		break;
	}
	case ClaimId::C2: {
		json on_line = json::array();
		u64 checked = 0;
		for (const auto &pt : enumerate_points(rect, cap))
		{
			++checked;
			if (pt.side_value == 0)
				on_line.push_back(point_json(pt));
		}
		w["points_checked"] = checked;
		w["points_on_line"] = std::move(on_line);
		break;
	}
	case ClaimId::C3: {
		auto counts = partition_counts(rect);
		w["n_plus"] = counts.n_plus;
		w["n_minus"] = counts.n_minus;
		w["total"] = counts.total;
		w["width"] = rect.width();
		w["height"] = rect.height();
		break;
	}
	case ClaimId::C4: {
		json fixed = json::array();
		for (const auto &pt : fixed_points(SymmetryMap::C, rect, cap).fixed)
			fixed.push_back(point_json(pt));
		w["fixed_points"] = std::move(fixed);
		break;
	}
	case ClaimId::C5: {
		json pairs = json::array();
		for (const auto &[a, b] : side_flip_violations(rect, cap))
			pairs.push_back({{"points", {point_json(a), point_json(b)}}, {"side_values", {a.side_value, b.side_value}}});
		w["same_side_pairs"] = std::move(pairs);
		break;
	}
	case ClaimId::C6: {
		auto counts = partition_counts(rect);
		w["n_p_q"] = count_large_residues(q.value(), p).n_large;
		w["n_q_p"] = count_large_residues(p.value(), q).n_large;
		w["s_plus"] = counts.n_plus;
		w["s_minus"] = counts.n_minus;
		break;
	}
	case ClaimId::C7: {
		w["n_p_q"] = count_large_residues(q.value(), p).n_large;
		w["n_q_p"] = count_large_residues(p.value(), q).n_large;
		w["half_area"] = rect.point_count();
		break;
	}
	case ClaimId::C8: {
		w["legendre_p_q"] = to_int(legendre_euler(static_cast<i64>(p.value()), q));
		w["legendre_q_p"] = to_int(legendre_euler(static_cast<i64>(q.value()), p));
		w["exponent"] = rect.point_count();
		break;
	}
	case ClaimId::C9: {
		auto table = residue_table(q.value(), p);
		json bad = json::array();
		for (u64 x : table.reflection_violations())
			bad.push_back({{"x", x},
			               {"r_x", table.step(x).remainder},
			               {"r_p_minus_x", table.step(p.value() - x).remainder}});
		w["checked"] = table.steps().size();
		w["violations"] = std::move(bad);
		break;
	}
	case ClaimId::C10: {
		w["product"] = to_int(epsilon_product_full(q.value(), p));
		w["half_modulus"] = p.half();
		break;
	}
	case ClaimId::C11: {
		w["n_large"] = count_large_residues(q.value(), p).n_large;
		w["half_product"] = to_int(epsilon_product_half(q.value(), p));
		break;
	}
	case ClaimId::C12: {
		auto enumerated = classify_points(rect, cap);
		w["floor_sum_x"] = floor_sum(q.value(), p, p.half());
		w["floor_sum_y"] = floor_sum(p.value(), q, q.half());
		w["s_minus_enumerated"] = enumerated.n_minus;
		w["s_plus_enumerated"] = enumerated.n_plus;
		w["n_p_q"] = count_large_residues(q.value(), p).n_large;
		w["n_q_p"] = count_large_residues(p.value(), q).n_large;
		break;
	}
	case ClaimId::C13: {
		std::map<std::size_t, u64> histogram;
		json singletons = json::array();
		for (const auto &orbit : orbits(rect, cap))
		{
			++histogram[orbit.size()];
			if (orbit.size() == 1)
				singletons.push_back(point_json(orbit.least()));
		}
		json sizes = json::object();
		for (auto [size, count] : histogram)
			sizes[std::to_string(size)] = count;
		w["orbit_sizes"] = std::move(sizes);
		w["singleton_orbits"] = std::move(singletons);
		break;
	}
	}

	auto v = verdicts_from_witness(id, w);
	return {id, pair, v.printed, v.companion, std::move(w)};
}

} // namespace

std::span<const ClaimInfo> claim_registry() { return kRegistry; }

const ClaimInfo &claim_info(ClaimId id) { return kRegistry.at(static_cast<std::size_t>(id) - 1); }

std::string claim_name(ClaimId id) { return fmt::format("C{}", static_cast<int>(id)); }

ClaimId parse_claim_id(std::string_view text)
{
	if (text.size() >= 2 && (text[0] == 'C' || text[0] == 'c'))
	{
		int n = 0;
		bool digits = true;
		for (char ch : text.substr(1))
		{
			if (!std::isdigit(static_cast<unsigned char>(ch)))
			{
				digits = false;
				break;
			}
			n = n * 10 + (ch - '0');
			if (n > kClaimCount)
				break;
		}
		if (digits && n >= 1 && n <= kClaimCount)
			return static_cast<ClaimId>(n);
	}
	throw InputError(fmt::format("unknown claim '{}'", text));
}

std::string ClaimCheck::label() const
{
	const auto &info = claim_info(id);
	auto suffix = form == ClaimForm::Printed ? info.printed_form : info.companion_form;
	if (suffix.empty())
		return claim_name(id);
	return fmt::format("{}-{}", claim_name(id), suffix);
}

std::vector<ClaimCheck> checks_for(ClaimId id)
{
	std::vector<ClaimCheck> out{{id, ClaimForm::Printed}};
	if (claim_info(id).has_companion())
		out.push_back({id, ClaimForm::Companion});
	return out;
}

std::vector<ClaimCheck> all_checks()
{
	std::vector<ClaimCheck> out;
	for (const auto &info : kRegistry)
		std::ranges::copy(checks_for(info.id), std::back_inserter(out));
	return out;
}

std::vector<ClaimCheck> parse_checks(std::string_view selection)
{
	std::vector<ClaimCheck> out;
	std::size_t start = 0;
	while (start <= selection.size())
	{
		auto end = selection.find(',', start);
		if (end == std::string_view::npos)
			end = selection.size();
		auto token = selection.substr(start, end - start);
		while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front())))
			token.remove_prefix(1);
		while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back())))
			token.remove_suffix(1);
		start = end + 1;
		if (token.empty())
			continue;
		if (token == "all")
		{
			std::ranges::copy(all_checks(), std::back_inserter(out));
			continue;
		}
		auto dash = token.find('-');
		ClaimId id = parse_claim_id(token.substr(0, dash));
		if (dash == std::string_view::npos)
		{
			std::ranges::copy(checks_for(id), std::back_inserter(out));
			continue;
		}
		auto suffix = token.substr(dash + 1);
		const auto &info = claim_info(id);
		if (!info.printed_form.empty() && suffix == info.printed_form)
			out.push_back({id, ClaimForm::Printed});
		else if (info.has_companion() && suffix == info.companion_form)
			out.push_back({id, ClaimForm::Companion});
		else
			throw InputError(fmt::format("claim {} has no form '{}'", claim_name(id), suffix));
	}
	if (out.empty())
		throw InputError("empty claim selection");
	std::ranges::sort(out);
	auto dup = std::ranges::unique(out);
	out.erase(dup.begin(), dup.end());
	return out;
}

bool Verdicts::holds(ClaimForm f) const
{
	if (f == ClaimForm::Printed)
		return printed;
	if (!companion)
		throw InputError("claim has no companion form");
	return *companion;
}

Verdicts verdicts_from_witness(ClaimId id, const json &w)
{
	auto u = [&w](const char *key) { return w.at(key).get<u64>(); };
	switch (id)
	{
	case ClaimId::C1:
		return {sign_of(w.at("gauss")) == sign_of(w.at("euler")) &&
		            sign_of(w.at("gauss")) == parity_int(u("n_large")),
		        std::nullopt};
	case ClaimId::C2: return {w.at("points_on_line").empty(), std::nullopt};
	case ClaimId::C3:
		return {u("n_plus") + u("n_minus") == u("total") && u("total") == u("width") * u("height"), std::nullopt};
	case ClaimId::C4: return {w.at("fixed_points").empty(), std::nullopt};
	case ClaimId::C5: return {w.at("same_side_pairs").empty(), std::nullopt};
	case ClaimId::C6:
		return {u("n_p_q") == u("s_plus") && u("n_q_p") == u("s_minus"),
		        same_parity(u("n_p_q"), u("s_minus")) && same_parity(u("n_q_p"), u("s_plus"))};
	case ClaimId::C7:
		return {u("n_p_q") + u("n_q_p") == u("half_area"), same_parity(u("n_p_q") + u("n_q_p"), u("half_area"))};
	case ClaimId::C8:
		return {sign_of(w.at("legendre_p_q")) * sign_of(w.at("legendre_q_p")) == parity_int(u("exponent")),
		        std::nullopt};
	case ClaimId::C9: return {w.at("violations").empty(), std::nullopt};
	case ClaimId::C10: return {sign_of(w.at("product")) == parity_int(u("half_modulus")), std::nullopt};
	case ClaimId::C11: return {sign_of(w.at("half_product")) == parity_int(u("n_large")), std::nullopt};
	case ClaimId::C12:
		return {u("floor_sum_x") == u("s_minus_enumerated") && u("floor_sum_y") == u("s_plus_enumerated"),
		        same_parity(u("floor_sum_x"), u("n_p_q")) && same_parity(u("floor_sum_y"), u("n_q_p"))};
	case ClaimId::C13: {
		bool strict = true;
		bool relaxed = true;
		for (const auto &[size, count] : w.at("orbit_sizes").items())
		{
			if (count.get<u64>() == 0)
				continue;
			strict = strict && (size == "2" || size == "4");
			relaxed = relaxed && (size == "1" || size == "2" || size == "4");
		}
		return {strict, relaxed};
	}
	}
	throw InputError("unknown claim id");
}

ClaimOutcome verify_claim(ClaimId id, PrimePair pair, u64 cap)
{
	try
	{
		return evaluate(id, pair, cap);
	}
	catch (const ResourceError &e)
	{
		throw ResourceError(fmt::format("{} on (p, q) = ({}, {}): {}", claim_name(id), pair.p().value(),
		                                pair.q().value(), e.what()));
	}
}

std::string summarize_witness(const json &witness)
{
	constexpr std::size_t kMaxItems = 3;
	std::string out;
	for (const auto &[key, value] : witness.items())
	{
		if (!out.empty())
			out += ';';
		std::string rendered;
		if (value.is_array() && value.size() > kMaxItems)
		{
			json head = json::array();
			for (std::size_t i = 0; i < kMaxItems; ++i)
				head.push_back(value[i]);
			rendered = fmt::format("{}+{}more", head.dump(), value.size() - kMaxItems);
		}
		else
			rendered = value.dump();
		out += fmt::format("{}={}", key, rendered);
	}
	return out;
}

std::vector<u64> odd_primes_below(u64 bound)
{
	std::vector<u64> primes;
	for (u64 n = 3; n < bound; n += 2)
		if (is_odd_prime(n))
			primes.push_back(n);
	return primes;
}

std::vector<PrimePair> ordered_pairs_below(u64 bound)
{
	auto primes = odd_primes_below(bound);
	std::vector<PrimePair> pairs;
	for (u64 p : primes)
		for (u64 q : primes)
			if (p != q)
				pairs.push_back(PrimePair::of(p, q));
	return pairs;
}

const CheckSummary *SweepReport::find(const ClaimCheck &check) const
{
	auto it = std::ranges::find(checks, check, &CheckSummary::check);
	return it == checks.end() ? nullptr : &*it;
}

bool SweepReport::all_hold() const
{
	return std::ranges::all_of(checks, [](const CheckSummary &c) { return c.pairs_failed == 0; });
}

namespace {

// Outcome of every distinct claim for one pair; empty optional means skipped.
using PairResults = std::vector<std::optional<ClaimOutcome>>;

std::vector<ClaimId> distinct_claims(const std::vector<ClaimCheck> &checks)
{
	std::vector<ClaimId> ids;
	for (const auto &c : checks)
		if (std::ranges::find(ids, c.id) == ids.end())
			ids.push_back(c.id);
	return ids;
}

void evaluate_chunk(std::span<const PrimePair> pairs, const std::vector<ClaimId> &ids, u64 cap, unsigned threads,
                    std::vector<PairResults> &out)
{
	out.assign(pairs.size(), PairResults(ids.size()));
	std::atomic<std::size_t> next{0};
	auto worker = [&] {
		for (std::size_t i = next++; i < pairs.size(); i = next++)
			for (std::size_t k = 0; k < ids.size(); ++k)
			{
				try
				{
					out[i][k] = verify_claim(ids[k], pairs[i], cap);
				}
				catch (const ResourceError &)
				{
					out[i][k].reset();
				}
			}
	};
	std::vector<std::jthread> pool;
	for (unsigned t = 1; t < threads; ++t)
		pool.emplace_back(worker);
	worker();
}

} // namespace

SweepReport sweep(const SweepOptions &options)
{
	if (options.bound < 5)
		throw InputError(fmt::format("sweep bound must be at least 5, got {}", options.bound));
	if (options.checks.empty())
		throw InputError("sweep needs at least one claim");

	const auto pairs = ordered_pairs_below(options.bound);
	const auto ids = distinct_claims(options.checks);
	unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());

	SweepReport report{options.bound, options.counterexample_limit, options.enumeration_cap, {}, {}};
	for (const auto &check : options.checks)
		report.checks.push_back({check, pairs.size(), 0, 0, {}});

	constexpr std::size_t kChunk = 512;
	std::vector<PairResults> results;
	for (std::size_t begin = 0; begin < pairs.size(); begin += kChunk)
	{
		auto chunk = std::span(pairs).subspan(begin, std::min(kChunk, pairs.size() - begin));
		evaluate_chunk(chunk, ids, options.enumeration_cap, threads, results);

		for (std::size_t i = 0; i < chunk.size(); ++i)
			for (auto &summary : report.checks)
			{
				auto k = static_cast<std::size_t>(std::ranges::find(ids, summary.check.id) - ids.begin());
				const auto &outcome = results[i][k];
				std::optional<bool> holds;
				if (!outcome)
					++summary.pairs_skipped;
				else
				{
					holds = outcome->holds_for(summary.check.form);
					if (!*holds)
					{
						++summary.pairs_failed;
						if (summary.counterexamples.size() < options.counterexample_limit)
							summary.counterexamples.push_back({chunk[i], outcome->witness});
					}
				}
				if (options.record_verdicts)
					report.verdicts.push_back(
					    {summary.check, chunk[i], holds, outcome ? summarize_witness(outcome->witness) : ""});
			}
	}
	return report;
}

std::optional<Counterexample> find_counterexample(ClaimCheck check, u64 bound, u64 cap)
{
	if (bound < 5)
		throw InputError(fmt::format("search bound must be at least 5, got {}", bound));
	for (const auto &pair : ordered_pairs_below(bound))
	{
		try
		{
			auto outcome = verify_claim(check.id, pair, cap);
			if (!outcome.holds_for(check.form))
				return Counterexample{pair, std::move(outcome.witness)};
		}
		catch (const ResourceError &)
		{
		}
	}
	return std::nullopt;
}

} // namespace qrlab
