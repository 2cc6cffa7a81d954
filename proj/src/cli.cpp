#include "qrlab/cli.hpp"

#include "qrlab/errors.hpp"
#include "qrlab/gauss_lemma.hpp"
#include "qrlab/report.hpp"
#include "qrlab/svg.hpp"

#include "CLI11.hpp"

#include <charconv>
#include <cstdlib>
#include <fmt/format.h>
#include <fstream>
#include <map>
#include <ostream>

namespace qrlab {

using nlohmann::json;

namespace {

std::string_view command_name(Command c)
{
	switch (c)
	{
	case Command::Symbol: return "symbol";
	case Command::Pair: return "pair";
	case Command::Sweep: return "sweep";
	case Command::Orbits: return "orbits";
	case Command::ClaimsList: return "claims-list";
	case Command::Render: return "render";
	}
	return "?";
}

std::string_view method_name(Method m)
{
	switch (m)
	{
	case Method::Euler: return "euler";
	case Method::Gauss: return "gauss";
	case Method::Eisenstein: return "eisenstein";
	}
	return "?";
}

template <class T>
T require(const std::optional<T> &v, std::string_view flag)
{
	if (!v)
		throw InputError(fmt::format("missing required {}", flag));
	return *v;
}

Format resolve_format(const RunConfig &cfg, Format fallback, std::initializer_list<Format> allowed)
{
	Format f = cfg.format == Format::Default ? fallback : cfg.format;
	if (std::ranges::find(allowed, f) == allowed.end())
		throw InputError(fmt::format("format not supported by '{}'", command_name(cfg.command)));
	return f;
}

json check_labels(const std::vector<ClaimCheck> &checks)
{
	json out = json::array();
	for (const auto &c : checks)
		out.push_back(c.label());
	return out;
}

LegendreValue symbol_by(Method method, i64 a, OddPrime p)
{
	switch (method)
	{
	case Method::Euler: return legendre_euler(a, p);
	case Method::Gauss: return legendre_gauss(reduce(a, p.value()), p);
	case Method::Eisenstein:
		if (a <= 0)
			throw InputError(fmt::format("the floor-sum symbol needs a positive odd value, got {}", a));
		return legendre_eisenstein(static_cast<u64>(a), p);
	}
	throw InputError("unknown method");
}

std::string sweep_text(const SweepReport &report)
{
	std::string out = fmt::format("sweep below {} ({} ordered pairs)\n", report.bound,
	                              report.checks.empty() ? 0 : report.checks.front().pairs_tested);
	for (const auto &c : report.checks)
	{
		out += fmt::format("{:<16} failed {:>6}  skipped {:>4}", c.check.label(), c.pairs_failed, c.pairs_skipped);
		if (!c.counterexamples.empty())
			out += fmt::format("  first ({}, {})", c.counterexamples.front().pair.p().value(),
			                   c.counterexamples.front().pair.q().value());
		out += '\n';
	}
	return out;
}

std::string claims_text()
{
	std::string out;
	for (const auto &info : claim_registry())
	{
		std::string labels;
		for (const auto &c : checks_for(info.id))
			labels += (labels.empty() ? "" : ", ") + c.label();
		out += fmt::format("{:<4} [{}] {}\n     {}\n     expected: {}\n", claim_name(info.id), info.source,
		                   info.statement, labels, info.expected);
	}
	return out;
}

std::string orbits_text(const json &listing)
{
	std::string out = fmt::format("p={} q={} points={} orbits={}\n", listing["p"].get<u64>(),
	                              listing["q"].get<u64>(), listing["points"].get<u64>(), listing["orbits"].size());
	for (const auto &o : listing["orbits"])
	{
		out += fmt::format("  size {}:", o["size"].get<u64>());
		for (const auto &pt : o["points"])
			out += fmt::format(" ({},{})", pt[0].get<i64>(), pt[1].get<i64>());
		out += '\n';
	}
	for (const auto &[map, pts] : listing["fixed_points"].items())
		out += fmt::format("  fixed by {}: {}\n", map, pts.size());
	return out;
}

std::string pair_text(const json &r)
{
	std::string out = fmt::format("p={} q={}\n", r["p"].get<u64>(), r["q"].get<u64>());
	for (const char *key : {"q_over_p", "p_over_q"})
	{
		const auto &s = r["symbols"][key];
		out += fmt::format("  {}: euler {} gauss {} eisenstein {}\n", key, s["euler"].get<int>(),
		                   s["gauss"].get<int>(), s["eisenstein"].get<int>());
	}
	out += fmt::format("  N_p(q)={} N_q(p)={}\n", r["n_p_q"].get<u64>(), r["n_q_p"].get<u64>());
	const auto &pc = r["partition"];
	out += fmt::format("  n_plus={} n_minus={} total={}\n", pc["n_plus"].get<u64>(), pc["n_minus"].get<u64>(),
	                   pc["total"].get<u64>());
	out += fmt::format("  reciprocity {}\n", r["reciprocity"]["holds"].get<bool>() ? "holds" : "FAILS");
	for (const auto &c : r["claims"])
	{
		std::string verdict = c["holds"].is_null() ? "skipped" : (c["holds"].get<bool>() ? "holds" : "fails");
		out += fmt::format("  {:<16} {}\n", c["check"].get<std::string>(), verdict);
	}
	return out;
}

std::string render_document(const std::string &command, json parameters, json payload)
{
	return serialize(ReportDocument{std::string(kSchemaVersion), command, std::move(parameters), std::move(payload)});
}

void emit(const RunConfig &cfg, const std::string &text, std::ostream &out)
{
	if (cfg.out_path.empty())
	{
		out << text;
		return;
	}
	std::ofstream file(cfg.out_path, std::ios::binary);
	if (!file)
		throw InputError(fmt::format("cannot open '{}' for writing", cfg.out_path));
	file << text;
}

int dispatch(const RunConfig &cfg, std::ostream &out)
{
	const u64 cap = cfg.cap ? *cfg.cap : default_enumeration_cap();
	const auto checks = cfg.claims.empty() ? all_checks() : cfg.claims;
	const std::string command(command_name(cfg.command));

	switch (cfg.command)
	{
	case Command::Symbol: {
		const i64 a = require(cfg.a, "--a");
		const OddPrime p(require(cfg.p, "--p"));
		const int value = to_int(symbol_by(cfg.method, a, p));
		if (resolve_format(cfg, Format::Text, {Format::Text, Format::Json}) == Format::Text)
			emit(cfg, fmt::format("{}\n", value), out);
		else
			emit(cfg,
			     render_document(command, {{"a", a}, {"p", p.value()}, {"method", method_name(cfg.method)}},
			                     {{"value", value}}),
			     out);
		return kExitOk;
	}
	case Command::Pair: {
		const auto pair = PrimePair::of(require(cfg.p, "--p"), require(cfg.q, "--q"));
		auto report = pair_report(pair, checks, cap);
		bool failed = !report["reciprocity"]["holds"].get<bool>();
		for (const auto &c : report["claims"])
			failed = failed || (c["holds"].is_boolean() && !c["holds"].get<bool>());
		if (resolve_format(cfg, Format::Json, {Format::Json, Format::Text}) == Format::Text)
			emit(cfg, pair_text(report), out);
		else
			emit(cfg,
			     render_document(command,
			                     {{"p", pair.p().value()}, {"q", pair.q().value()}, {"claims", check_labels(checks)},
			                      {"cap", cap}},
			                     std::move(report)),
			     out);
		return cfg.expect_hold && failed ? kExitClaimFailed : kExitOk;
	}
	case Command::Sweep: {
		const Format f = resolve_format(cfg, Format::Json, {Format::Json, Format::Csv, Format::Text});
		SweepOptions options{cfg.bound, checks, cfg.counterexample_limit, cap, cfg.threads,
		                     cfg.record_verdicts || f == Format::Csv};
		auto report = sweep(options);
		if (f == Format::Csv)
			emit(cfg, sweep_to_csv(report), out);
		else if (f == Format::Text)
			emit(cfg, sweep_text(report), out);
		else
			emit(cfg,
			     render_document(command,
			                     {{"bound", cfg.bound}, {"claims", check_labels(checks)}, {"cap", cap},
			                      {"counterexample_limit", cfg.counterexample_limit}},
			                     to_json(report)),
			     out);
		return cfg.expect_hold && !report.all_hold() ? kExitClaimFailed : kExitOk;
	}
	case Command::Orbits: {
		const LatticeRect rect(PrimePair::of(require(cfg.p, "--p"), require(cfg.q, "--q")));
		auto listing = orbit_listing(rect, cap);
		if (resolve_format(cfg, Format::Json, {Format::Json, Format::Text}) == Format::Text)
			emit(cfg, orbits_text(listing), out);
		else
			emit(cfg, render_document(command, {{"p", rect.p()}, {"q", rect.q()}, {"cap", cap}}, std::move(listing)),
			     out);
		return kExitOk;
	}
	case Command::ClaimsList: {
		if (resolve_format(cfg, Format::Text, {Format::Text, Format::Json}) == Format::Text)
			emit(cfg, claims_text(), out);
		else
			emit(cfg, render_document(command, json::object(), {{"claims", claims_listing()}}), out);
		return kExitOk;
	}
	case Command::Render: {
		resolve_format(cfg, Format::Svg, {Format::Svg});
		const LatticeRect rect(PrimePair::of(require(cfg.p, "--p"), require(cfg.q, "--q")));
		emit(cfg, render_svg(rect, cap), out);
		return kExitOk;
	}
	}
	return kExitInvalidInput;
}

} // namespace

u64 default_enumeration_cap()
{
	const char *env = std::getenv(kCapEnvVar);
	if (!env || !*env)
		return kDefaultEnumerationCap;
	std::string_view text(env);
	u64 value = 0;
	auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
	if (ec != std::errc() || ptr != text.data() + text.size() || value == 0)
		throw InputError(fmt::format("{}='{}' is not a positive integer", kCapEnvVar, text));
	return value;
}

int run(const RunConfig &config, std::ostream &out, std::ostream &err)
{
	try
	{
		return dispatch(config, out);
	}
	catch (const InputError &e)
	{
		err << "error: " << e.what() << '\n';
		return kExitInvalidInput;
	}
	catch (const ResourceError &e)
	{
		err << "error: " << e.what() << '\n';
		return kExitResource;
	}
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Quadratic reciprocity verification lab"};
	app.require_subcommand(1);
	RunConfig cfg;
	std::string claims;
	std::string format;

	const std::map<std::string, Method> methods{
	    {"euler", Method::Euler}, {"gauss", Method::Gauss}, {"eisenstein", Method::Eisenstein}};
	const std::map<std::string, Format> formats{
	    {"json", Format::Json}, {"csv", Format::Csv}, {"text", Format::Text}, {"svg", Format::Svg}};

	auto common = [&](CLI::App *sub) {
		sub->add_option("--out", cfg.out_path, "Write output to this file instead of stdout");
		sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text", "svg"}));
		sub->add_option("--cap", cfg.cap, "Enumeration cap (overrides $QRLAB_ENUM_CAP)")
		    ->check(CLI::PositiveNumber);
	};
	auto with_pair = [&](CLI::App *sub) {
		sub->add_option("--p", cfg.p, "Odd prime p")->required();
		sub->add_option("--q", cfg.q, "Odd prime q")->required();
	};
	auto with_claims = [&](CLI::App *sub) {
		sub->add_option("--claims", claims, "Comma-separated claims, e.g. C8,C6-equality (default: all)");
		sub->add_flag("--expect-hold", cfg.expect_hold, "Exit 1 if a selected claim fails");
	};

	auto *symbol = app.add_subcommand("symbol", "Legendre symbol (a/p) by one method");
	symbol->add_option("--a", cfg.a, "Numerator")->required();
	symbol->add_option("--p", cfg.p, "Odd prime modulus")->required();
	symbol->add_option("--method", cfg.method, "euler | gauss | eisenstein")
	    ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
	common(symbol);

	auto *pair = app.add_subcommand("pair", "Full report for one ordered pair (p, q)");
	with_pair(pair);
	with_claims(pair);
	common(pair);

	auto *sweep_cmd = app.add_subcommand("sweep", "Evaluate claims on every ordered pair below a bound");
	sweep_cmd->add_option("--max,--bound", cfg.bound, "Exclusive upper bound on p and q")->capture_default_str();
	sweep_cmd->add_option("--limit", cfg.counterexample_limit, "Counterexamples kept per claim")
	    ->capture_default_str();
	sweep_cmd->add_flag("--verdicts", cfg.record_verdicts, "Include every verdict in JSON output");
	sweep_cmd->add_option("--threads", cfg.threads, "Worker threads (0 = hardware)");
	with_claims(sweep_cmd);
	common(sweep_cmd);

	auto *orbits_cmd = app.add_subcommand("orbits", "Orbit listing of the rectangle under <H, V>");
	with_pair(orbits_cmd);
	common(orbits_cmd);

	auto *list = app.add_subcommand("claims-list", "Registered claims and their expected status");
	common(list);

	auto *render = app.add_subcommand("render", "SVG diagram of the rectangle");
	with_pair(render);
	common(render);

	std::vector<const char *> argv;
	for (const auto &a : args)
		argv.push_back(a.c_str());
	try
	{
		app.parse(static_cast<int>(argv.size()), argv.data());
	}
	catch (const CLI::CallForHelp &e)
	{
		return app.exit(e, out, err);
	}
	catch (const CLI::CallForAllHelp &e)
	{
		return app.exit(e, out, err);
	}
	catch (const CLI::ParseError &e)
	{
		app.exit(e, out, err);
		return kExitInvalidInput;
	}

	const std::vector<std::pair<CLI::App *, Command>> commands{
	    {symbol, Command::Symbol},     {pair, Command::Pair},      {sweep_cmd, Command::Sweep},
	    {orbits_cmd, Command::Orbits}, {list, Command::ClaimsList}, {render, Command::Render}};
	for (const auto &[sub, command] : commands)
		if (sub->parsed())
			cfg.command = command;
	if (!format.empty())
		cfg.format = formats.at(format);
	try
	{
		if (!claims.empty())
			cfg.claims = parse_checks(claims);
	}
	catch (const InputError &e)
	{
		err << "error: " << e.what() << '\n';
		return kExitInvalidInput;
	}
	return run(cfg, out, err);
}

} // namespace qrlab
