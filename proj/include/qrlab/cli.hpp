#pragma once

#include "qrlab/claims.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qrlab {

enum class Command
{
	Symbol,
	Pair,
	Sweep,
	Orbits,
	ClaimsList,
	Render,
};

enum class Method
{
	Euler,
	Gauss,
	Eisenstein,
};

enum class Format
{
	Default,
	Json,
	Csv,
	Text,
	Svg,
};

/// Exit statuses of the command-line tool.
enum ExitCode : int
{
	kExitOk = 0,
	kExitClaimFailed = 1,
	kExitInvalidInput = 2,
	kExitResource = 3,
};

/// Environment variable holding the default enumeration cap.
inline constexpr const char *kCapEnvVar = "QRLAB_ENUM_CAP";

struct RunConfig
{
	Command command = Command::ClaimsList;
	std::optional<i64> a;
	std::optional<u64> p;
	std::optional<u64> q;
	u64 bound = 200;
	Method method = Method::Euler;
	/// Empty selects every check.
	std::vector<ClaimCheck> claims;
	bool expect_hold = false;
	/// Empty writes to the output stream.
	std::string out_path;
	Format format = Format::Default;
	/// Overrides the environment default when set.
	std::optional<u64> cap;
	u64 counterexample_limit = 10;
	bool record_verdicts = false;
	unsigned threads = 0;
};

/// Cap from QRLAB_ENUM_CAP, else kDefaultEnumerationCap. Throws InputError
/// when the variable is set but not a positive integer.
u64 default_enumeration_cap();

/// Dispatches one command. Diagnostics go to err.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

/// Parses argv (including the program name) and runs it.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace qrlab
