#include "qrlab/report.hpp"

#include "qrlab/errors.hpp"
#include "qrlab/gauss_lemma.hpp"

#include <fmt/format.h>

namespace qrlab {

using nlohmann::json;

namespace {

json point_json(const LatticePoint &pt) { return json::array({pt.x, pt.y}); }

json points_json(const std::vector<LatticePoint> &pts)
{
	json out = json::array();
	for (const auto &pt : pts)
		out.push_back(point_json(pt));
	return out;
}

ClaimCheck check_from_label(const std::string &label)
{
	auto checks = parse_checks(label);
	if (checks.size() != 1)
		throw InputError(fmt::format("'{}' does not name a single claim form", label));
	return checks.front();
}

json symbols_json(u64 a, OddPrime modulus)
{
	return {
	    {"euler", to_int(legendre_euler(static_cast<i64>(a), modulus))},
	    {"gauss", to_int(legendre_gauss(a, modulus))},
	    {"eisenstein", to_int(legendre_eisenstein(a, modulus))},
	};
}

} // namespace

json to_json(const ReportDocument &doc)
{
	return {
	    {"schema_version", doc.schema_version},
	    {"command", doc.command},
	    {"parameters", doc.parameters},
	    {"payload", doc.payload},
	};
}

ReportDocument document_from_json(const json &j)
{
	ReportDocument doc;
	doc.schema_version = j.at("schema_version").get<std::string>();
	doc.command = j.at("command").get<std::string>();
	doc.parameters = j.at("parameters");
	doc.payload = j.at("payload");
	return doc;
}

std::string serialize(const ReportDocument &doc) { return to_json(doc).dump(2) + "\n"; }

ReportDocument parse_document(std::string_view text)
{
	try
	{
		return document_from_json(json::parse(text));
	}
	catch (const json::exception &e)
	{
		throw InputError(fmt::format("malformed report document: {}", e.what()));
	}
}

std::string_view form_name(ClaimForm f) noexcept { return f == ClaimForm::Printed ? "printed" : "companion"; }

json to_json(const SweepReport &report)
{
	json checks = json::array();
	for (const auto &c : report.checks)
	{
		json examples = json::array();
		for (const auto &ce : c.counterexamples)
			examples.push_back({{"p", ce.pair.p().value()}, {"q", ce.pair.q().value()}, {"witness", ce.witness}});
		checks.push_back({
		    {"check", c.check.label()},
		    {"claim", claim_name(c.check.id)},
		    {"form", form_name(c.check.form)},
		    {"pairs_tested", c.pairs_tested},
		    {"pairs_failed", c.pairs_failed},
		    {"pairs_skipped", c.pairs_skipped},
		    {"counterexamples", std::move(examples)},
		});
	}
	json out = {
	    {"bound", report.bound},
	    {"counterexample_limit", report.counterexample_limit},
	    {"enumeration_cap", report.enumeration_cap},
	    {"checks", std::move(checks)},
	};
	if (!report.verdicts.empty())
	{
		json rows = json::array();
		for (const auto &v : report.verdicts)
			rows.push_back({
			    {"check", v.check.label()},
			    {"p", v.pair.p().value()},
			    {"q", v.pair.q().value()},
			    {"holds", v.holds ? json(*v.holds) : json(nullptr)},
			    {"witness_summary", v.witness_summary},
			});
		out["verdicts"] = std::move(rows);
	}
	return out;
}

SweepReport sweep_from_json(const json &j)
{
	SweepReport report{j.at("bound").get<u64>(), j.at("counterexample_limit").get<u64>(),
	                   j.at("enumeration_cap").get<u64>(), {}, {}};
	for (const auto &c : j.at("checks"))
	{
		CheckSummary summary{check_from_label(c.at("check").get<std::string>()), c.at("pairs_tested").get<u64>(),
		                     c.at("pairs_failed").get<u64>(), c.at("pairs_skipped").get<u64>(), {}};
		for (const auto &ce : c.at("counterexamples"))
			summary.counterexamples.push_back(
			    {PrimePair::of(ce.at("p").get<u64>(), ce.at("q").get<u64>()), ce.at("witness")});
		report.checks.push_back(std::move(summary));
	}
	if (j.contains("verdicts"))
		for (const auto &v : j.at("verdicts"))
		{
			std::optional<bool> holds;
			if (!v.at("holds").is_null())
				holds = v.at("holds").get<bool>();
			report.verdicts.push_back({check_from_label(v.at("check").get<std::string>()),
			                           PrimePair::of(v.at("p").get<u64>(), v.at("q").get<u64>()), holds,
			                           v.at("witness_summary").get<std::string>()});
		}
	return report;
}

json to_json(const ClaimOutcome &outcome)
{
	json out = {
	    {"claim", claim_name(outcome.claim)},
	    {"p", outcome.pair.p().value()},
	    {"q", outcome.pair.q().value()},
	    {"holds", outcome.holds},
	    {"witness", outcome.witness},
	};
	if (outcome.companion_holds)
		out["companion_holds"] = *outcome.companion_holds;
	return out;
}

json orbit_listing(const LatticeRect &rect, u64 cap)
{
	json list = json::array();
	for (const auto &orbit : orbits(rect, cap))
		list.push_back({{"size", orbit.size()}, {"points", points_json(orbit.points)}});
	json fixed = json::object();
	for (auto m : {SymmetryMap::H, SymmetryMap::V, SymmetryMap::C})
		fixed[std::string(name(m))] = points_json(fixed_points(m, rect, cap).fixed);
	return {
	    {"p", rect.p()},
	    {"q", rect.q()},
	    {"width", rect.width()},
	    {"height", rect.height()},
	    {"points", rect.point_count()},
	    {"orbits", std::move(list)},
	    {"fixed_points", std::move(fixed)},
	};
}

json claims_listing()
{
	json out = json::array();
	for (const auto &info : claim_registry())
	{
		json forms = json::array();
		for (const auto &check : checks_for(info.id))
			forms.push_back({{"label", check.label()}, {"form", form_name(check.form)}});
		out.push_back({
		    {"claim", claim_name(info.id)},
		    {"source", info.source},
		    {"statement", info.statement},
		    {"forms", std::move(forms)},
		    {"expected", info.expected},
		    {"needs_enumeration", info.needs_enumeration},
		});
	}
	return out;
}

json pair_report(PrimePair pair, const std::vector<ClaimCheck> &checks, u64 cap)
{
	const OddPrime p = pair.p();
	const OddPrime q = pair.q();
	const LatticeRect rect(pair);
	const auto counts = partition_counts(rect);
	const int lpq = to_int(legendre_euler(static_cast<i64>(p.value()), q));
	const int lqp = to_int(legendre_euler(static_cast<i64>(q.value()), p));
	const int expected = to_int(parity_sign(rect.point_count()));

	json claims = json::array();
	for (const auto &check : checks)
	{
		json row = {{"check", check.label()}};
		try
		{
			auto outcome = verify_claim(check.id, pair, cap);
			row["holds"] = outcome.holds_for(check.form);
			row["witness"] = outcome.witness;
		}
		catch (const ResourceError &e)
		{
			row["holds"] = nullptr;
			row["skipped"] = e.what();
		}
		claims.push_back(std::move(row));
	}

	return {
	    {"p", p.value()},
	    {"q", q.value()},
	    {"symbols",
	     {
	         {"q_over_p", symbols_json(q.value(), p)},
	         {"p_over_q", symbols_json(p.value(), q)},
	     }},
	    {"n_p_q", count_large_residues(q.value(), p).n_large},
	    {"n_q_p", count_large_residues(p.value(), q).n_large},
	    {"partition", {{"n_plus", counts.n_plus}, {"n_minus", counts.n_minus}, {"total", counts.total}}},
	    {"reciprocity",
	     {
	         {"product", lpq * lqp},
	         {"expected", expected},
	         {"holds", lpq * lqp == expected},
	     }},
	    {"claims", std::move(claims)},
	};
}

std::string csv_field(std::string_view value)
{
	if (value.find_first_of(",\"\r\n") == std::string_view::npos)
		return std::string(value);
	std::string out = "\"";
	for (char ch : value)
	{
		if (ch == '"')
			out += '"';
		out += ch;
	}
	out += '"';
	return out;
}

std::string sweep_to_csv(const SweepReport &report)
{
	std::string out = "claim_id,p,q,form,holds,witness_summary\r\n";
	for (const auto &v : report.verdicts)
	{
		std::string_view holds = !v.holds ? "skipped" : (*v.holds ? "true" : "false");
		out += fmt::format("{},{},{},{},{},{}\r\n", claim_name(v.check.id), v.pair.p().value(), v.pair.q().value(),
		                   form_name(v.check.form), holds, csv_field(v.witness_summary));
	}
	return out;
}

} // namespace qrlab
