#include "qrlab/cli.hpp"
#include "qrlab/report.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qrlab;
using nlohmann::json;

namespace {

struct Result
{
	int code;
	std::string out;
	std::string err;
};

Result cli(std::vector<std::string> args)
{
	args.insert(args.begin(), "qrlab");
	std::ostringstream out, err;
	int code = run_cli(args, out, err);
	return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path &path)
{
	std::ifstream in(path, std::ios::binary);
	std::stringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

class ScopedEnv
{
  public:
	ScopedEnv(const char *name, const char *value) : name_(name) { setenv(name, value, 1); }
	~ScopedEnv() { unsetenv(name_); }

  private:
	const char *name_;
};

} // namespace

TEST(Cli, SymbolByEachMethod)
{
	auto r = cli({"symbol", "--a", "3", "--p", "5", "--method", "gauss"});
	EXPECT_EQ(r.code, kExitOk);
	EXPECT_EQ(r.out, "-1\n");
	EXPECT_EQ(cli({"symbol", "--a", "4", "--p", "7"}).out, "1\n");
	EXPECT_EQ(cli({"symbol", "--a", "13", "--p", "5", "--method", "eisenstein"}).out, "-1\n");
	EXPECT_EQ(cli({"symbol", "--a", "10", "--p", "5", "--method", "euler"}).out, "0\n");
	auto j = json::parse(cli({"symbol", "--a", "2", "--p", "7", "--format", "json"}).out);
	EXPECT_EQ(j["payload"]["value"], 1);
	EXPECT_EQ(j["parameters"]["method"], "euler");
}

TEST(Cli, InvalidInputExitsTwo)
{
	EXPECT_EQ(cli({"symbol", "--a", "3", "--p", "9"}).code, kExitInvalidInput);
	EXPECT_EQ(cli({"symbol", "--a", "4", "--p", "7", "--method", "eisenstein"}).code, kExitInvalidInput);
	EXPECT_EQ(cli({"symbol", "--a", "10", "--p", "5", "--method", "gauss"}).code, kExitInvalidInput);
	EXPECT_EQ(cli({"pair", "--p", "5", "--q", "5"}).code, kExitInvalidInput);
	EXPECT_EQ(cli({"pair", "--p", "4", "--q", "5"}).code, kExitInvalidInput);
	EXPECT_EQ(cli({"sweep", "--max", "50", "--claims", "C99"}).code, kExitInvalidInput);
	EXPECT_EQ(cli({"sweep", "--max", "3"}).code, kExitInvalidInput);
	EXPECT_EQ(cli({"render", "--p", "3", "--q", "5", "--format", "csv"}).code, kExitInvalidInput);
	EXPECT_EQ(cli({"bogus"}).code, kExitInvalidInput);
	EXPECT_EQ(cli({}).code, kExitInvalidInput);
	auto r = cli({"symbol", "--a", "3", "--p", "9"});
	EXPECT_NE(r.err.find("not an odd prime"), std::string::npos);
}

TEST(Cli, PairReport)
{
	auto r = cli({"pair", "--p", "3", "--q", "5"});
	ASSERT_EQ(r.code, kExitOk);
	auto doc = parse_document(r.out);
	EXPECT_EQ(doc.command, "pair");
	EXPECT_EQ(doc.payload["partition"], json::parse(R"({"n_plus":1,"n_minus":1,"total":2})"));
	EXPECT_TRUE(doc.payload["reciprocity"]["holds"].get<bool>());

	auto text = cli({"pair", "--p", "3", "--q", "5", "--format", "text"});
	EXPECT_NE(text.out.find("n_plus=1 n_minus=1 total=2"), std::string::npos);

	EXPECT_EQ(cli({"pair", "--p", "3", "--q", "7", "--claims", "C4", "--expect-hold"}).code, kExitClaimFailed);
	EXPECT_EQ(cli({"pair", "--p", "3", "--q", "7", "--claims", "C8", "--expect-hold"}).code, kExitOk);
}

TEST(Cli, SweepExpectHold)
{
	EXPECT_EQ(cli({"sweep", "--max", "50", "--claims", "C8", "--expect-hold"}).code, kExitOk);
	auto r = cli({"sweep", "--max", "20", "--claims", "C5", "--expect-hold"});
	EXPECT_EQ(r.code, kExitClaimFailed);
	auto doc = parse_document(r.out);
	auto examples = doc.payload["checks"][0]["counterexamples"];
	bool has_5_13 = false;
	for (const auto &ce : examples)
		has_5_13 = has_5_13 || (ce["p"] == 5 && ce["q"] == 13);
	EXPECT_TRUE(has_5_13);
	// without --expect-hold a failing claim is just reported
	EXPECT_EQ(cli({"sweep", "--max", "20", "--claims", "C5"}).code, kExitOk);
}

TEST(Cli, SweepFormats)
{
	auto csv = cli({"sweep", "--max", "12", "--claims", "C8", "--format", "csv"});
	ASSERT_EQ(csv.code, kExitOk);
	EXPECT_EQ(csv.out.substr(0, 43), "claim_id,p,q,form,holds,witness_summary\r\nC8");
	auto text = cli({"sweep", "--max", "20", "--claims", "C4", "--format", "text"});
	EXPECT_NE(text.out.find("first (3, 7)"), std::string::npos);
	auto j = parse_document(cli({"sweep", "--max", "12", "--claims", "C8", "--verdicts"}).out);
	EXPECT_EQ(j.payload["verdicts"].size(), 12u);
}

TEST(Cli, CapFromFlagAndEnvironment)
{
	EXPECT_EQ(cli({"orbits", "--p", "5", "--q", "13", "--cap", "11"}).code, kExitResource);
	{
		ScopedEnv env(kCapEnvVar, "11");
		EXPECT_EQ(default_enumeration_cap(), 11u);
		EXPECT_EQ(cli({"orbits", "--p", "5", "--q", "13"}).code, kExitResource);
		EXPECT_EQ(cli({"orbits", "--p", "5", "--q", "13", "--cap", "12"}).code, kExitOk);
	}
	{
		ScopedEnv env(kCapEnvVar, "lots");
		EXPECT_EQ(cli({"orbits", "--p", "5", "--q", "13"}).code, kExitInvalidInput);
	}
	EXPECT_EQ(default_enumeration_cap(), kDefaultEnumerationCap);
}

TEST(Cli, OrbitsAndClaimsList)
{
	auto doc = parse_document(cli({"orbits", "--p", "5", "--q", "13"}).out);
	EXPECT_EQ(doc.payload["orbits"].size(), 3u);
	auto text = cli({"orbits", "--p", "3", "--q", "7", "--format", "text"});
	EXPECT_NE(text.out.find("size 1: (1,2)"), std::string::npos);

	auto list = cli({"claims-list"});
	EXPECT_EQ(list.code, kExitOk);
	EXPECT_NE(list.out.find("C13-relaxed"), std::string::npos);
	auto j = parse_document(cli({"claims-list", "--format", "json"}).out);
	EXPECT_EQ(j.payload["claims"].size(), 13u);
}

TEST(Cli, RenderToFile)
{
	auto path = std::filesystem::temp_directory_path() / "qrlab_render_test.svg";
	auto r = cli({"render", "--p", "3", "--q", "7", "--out", path.string()});
	ASSERT_EQ(r.code, kExitOk);
	EXPECT_TRUE(r.out.empty());
	EXPECT_EQ(slurp(path), slurp(std::string(QRLAB_GOLDEN_DIR) + "/rect_3_7.svg"));
	std::filesystem::remove(path);
}

TEST(Cli, BinarySweepIsByteIdentical)
{
	auto dir = std::filesystem::temp_directory_path();
	auto a = dir / "qrlab_sweep_a.json";
	auto b = dir / "qrlab_sweep_b.json";
	for (const auto &path : {a, b})
	{
		std::string cmd = std::string(QRLAB_CLI_PATH) + " sweep --max 60 --out " + path.string();
		ASSERT_EQ(std::system(cmd.c_str()), 0);
	}
	auto first = slurp(a);
	EXPECT_FALSE(first.empty());
	EXPECT_EQ(first, slurp(b));
	std::filesystem::remove(a);
	std::filesystem::remove(b);
}
