#include "demchar/cli.hpp"
#include "demchar/errors.hpp"
#include "demchar/kernel.hpp"
#include "demchar/theorem.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace demchar;
namespace fs = std::filesystem;

namespace {

struct Result
{
	int code;
	std::string out;
	std::string err;
};

Result run_cli(const std::vector<std::string> &args)
{
	std::ostringstream out, err;
	const int code = cli::run(args, out, err);
	return {code, out.str(), err.str()};
}

bool contains(const std::string &haystack, const std::string &needle)
{
	return haystack.find(needle) != std::string::npos;
}

fs::path scratch_dir(const std::string &name)
{
	const fs::path p = fs::temp_directory_path() / ("demchar-test-" + name);
	fs::remove_all(p);
	fs::create_directories(p);
	return p;
}

} // namespace

TEST_CASE("info")
{
	const auto a2 = run_cli({"info", "--type", "A2"});
	CHECK(a2.code == 0);
	CHECK(contains(a2.out, "|W|: 6\n"));
	CHECK(contains(a2.out, "|R+|: 3\n"));
	CHECK(contains(a2.out, "w0: 1,2,1 (length 3)"));

	const auto a1 = run_cli({"info", "--type", "A", "--rank", "1"});
	CHECK(a1.code == 0);
	CHECK(contains(a1.out, "|W|: 2\n"));

	const auto g2 = run_cli({"info", "--type", "G2", "--format", "json"});
	CHECK(g2.code == 0);
	const Json j = Json::parse(g2.out);
	CHECK(j.at("weyl_order") == 12);
	CHECK(j.at("w0_length") == 6);
}

TEST_CASE("usage errors exit with 2")
{
	CHECK(run_cli({}).code == 2);
	CHECK(run_cli({"frobnicate"}).code == 2);
	CHECK(run_cli({"info", "--type", "Q2"}).code == 2);
	CHECK(run_cli({"info", "--type", "B1"}).code == 2);
	CHECK(run_cli({"info", "--type", "A"}).code == 2);
	CHECK(run_cli({"demchar", "--type", "A2", "--mu", "-1,1"}).code == 2);
	CHECK(run_cli({"demchar", "--type", "A2", "--mu", "1,1,1"}).code == 2);
	CHECK(run_cli({"verify-theorem", "--type", "A2", "--lambda", "1,x"}).code == 2);
	CHECK(run_cli({"verify-theorem", "--type", "A2", "--lambda", "0,1"}).code == 2);
	CHECK(run_cli({"verify-theorem", "--type", "A2", "--tau", "3"}).code == 2);
	CHECK(run_cli({"info", "--type", "E8"}).code == 2);
	CHECK(run_cli({"info", "--type", "A3", "--max-group-order", "10"}).code == 2);
	CHECK(run_cli({"info", "--type", "A2", "--format", "xml"}).code == 2);
	const auto r = run_cli({"demchar", "--type", "A2", "--mu", "-1,1"});
	CHECK(contains(r.err, "dominant"));
}

TEST_CASE("help exits cleanly")
{
	const auto r = run_cli({"--help"});
	CHECK(r.code == 0);
	CHECK(contains(r.out, "verify-theorem"));
}

TEST_CASE("character commands")
{
	const auto d = run_cli({"demchar", "--type", "A2", "--tau", "w0", "--mu", "1,1"});
	CHECK(d.code == 0);
	CHECK(contains(d.out, "dimension: 8\n"));

	const auto a1 = run_cli({"demchar", "--type", "A1", "--tau", "1", "--mu", "2"});
	CHECK(contains(a1.out, "e^(-2) + e^(0) + e^(2)\n"));

	// negative coordinates in both option spellings
	const auto eu = run_cli({"euler", "--type", "A1", "--w", "1", "--mu=-2"});
	CHECK(eu.code == 0);
	CHECK(contains(eu.out, "-e^(0)\n"));
	const auto eu2 = run_cli({"euler", "--type", "A2", "--w", "e", "--mu", "-3,1"});
	CHECK(eu2.code == 0);
	CHECK(contains(eu2.out, "e^(-3,1)\n"));

	const auto top = run_cli({"topchar", "--type", "A1", "--w", "1", "--lambda", "2", "--format", "json"});
	CHECK(top.code == 0);
	const Json j = Json::parse(top.out);
	CHECK(j.at("character").at("terms").size() == 1);
	CHECK(j.at("dimension") == "1");
}

TEST_CASE("verify-theorem sweeps")
{
	const auto a2 = run_cli({"verify-theorem", "--type", "A2", "--grid", "2"});
	CHECK(a2.code == 0);
	CHECK(contains(a2.out, "verify-theorem A2: 6 tau x 4 lambda\n"));
	CHECK(contains(a2.out, "checks: 24, passed: 24, failed: 0\n"));

	const auto a1 = run_cli({"verify-theorem", "--type", "A1", "--grid", "3", "--format", "json"});
	CHECK(a1.code == 0);
	const Json j = Json::parse(a1.out);
	CHECK(j.at("checks") == 6);
	CHECK(j.at("failed") == 0);
	CHECK_FALSE(j.contains("first_failure"));

	const auto both = run_cli({"verify-theorem", "--type", "B2", "--lambda", "2,2", "--with-lemma31"});
	CHECK(both.code == 0);
	CHECK(contains(both.out, "checks: 16, passed: 16, failed: 0\n"));

	const auto lemma = run_cli({"verify-lemma31", "--type", "G2", "--grid", "2"});
	CHECK(lemma.code == 0);
	CHECK(contains(lemma.out, "checks: 48, passed: 48"));

	const auto single = run_cli({"verify-theorem", "--type", "A3", "--tau", "w0", "--lambda", "1,2,1"});
	CHECK(single.code == 0);
	CHECK(contains(single.out, "checks: 1, passed: 1"));
}

TEST_CASE("serial and parallel output are byte-identical")
{
	for (const std::string fmt : {"plain", "json"})
	{
		const auto serial = run_cli({"verify-theorem", "--type", "A3", "--grid", "2", "--format", fmt});
		const auto parallel =
		    run_cli({"verify-theorem", "--type", "A3", "--grid", "2", "--format", fmt, "--parallel"});
		CHECK(serial.code == 0);
		CHECK(serial.out == parallel.out);
	}
}

TEST_CASE("verify-kernel")
{
	const auto r = run_cli({"verify-kernel", "--type", "A2", "--grid", "2", "--samples", "10"});
	CHECK(r.code == 0);
	CHECK(contains(r.out, "failed: 0\n"));
	const auto j = run_cli({"verify-kernel", "--type", "B2", "--grid", "2", "--format", "json", "--seed", "5"});
	CHECK(j.code == 0);
	CHECK(Json::parse(j.out).at("failed") == 0);
}

TEST_CASE("decompose")
{
	const auto by_lambda = run_cli({"decompose", "--type", "A2", "--lambda", "2,1"});
	CHECK(by_lambda.code == 0);
	CHECK(contains(by_lambda.out, "mu=(0,1) lambda=(2,1) coeff=1\n"));

	const fs::path dir = scratch_dir("decompose");
	const fs::path file = dir / "v.json";
	{
		std::ofstream f(file);
		f << R"({"rank":1,"terms":[{"weight":[-2],"coeff":"3"},{"weight":[0],"coeff":3},{"weight":[-1],"coeff":"-1"}]})";
	}
	const auto by_file = run_cli({"decompose", "--type", "A1", "--input", file.string(), "--format", "json"});
	CHECK(by_file.code == 0);
	const Json j = Json::parse(by_file.out);
	REQUIRE(j.at("coefficients").size() == 2);
	CHECK(j.at("coefficients")[0].at("mu") == Json::array({0}));
	CHECK(j.at("coefficients")[0].at("coeff") == "-1");
	CHECK(j.at("coefficients")[1].at("mu") == Json::array({1}));
	CHECK(j.at("coefficients")[1].at("coeff") == "3");

	{
		std::ofstream f(file);
		f << R"({"rank":1,"terms":[{"weight":[0],"coeff":"1"}]})";
	}
	CHECK(run_cli({"decompose", "--type", "A1", "--input", file.string()}).code == 2);
	{
		std::ofstream f(file);
		f << "{not json";
	}
	CHECK(run_cli({"decompose", "--type", "A1", "--input", file.string()}).code == 2);
	CHECK(run_cli({"decompose", "--type", "A1", "--input", (dir / "missing.json").string()}).code == 2);
	CHECK(run_cli({"decompose", "--type", "A1"}).code == 2);
	fs::remove_all(dir);
}

TEST_CASE("bruhat")
{
	const auto leq = run_cli({"bruhat", "--type", "A2", "--w", "1", "--tau", "1,2"});
	CHECK(leq.code == 0);
	CHECK(leq.out == "1 <= 1,2\n");
	const auto interval = run_cli({"bruhat", "--type", "A2", "--tau", "1,2"});
	CHECK(contains(interval.out, "(4 elements)"));
	const auto dot = run_cli({"bruhat", "--type", "A2", "--dot"});
	CHECK(dot.out.rfind("digraph bruhat {", 0) == 0);
	// Hasse diagram of A2 has 8 covering edges
	std::size_t edges = 0;
	for (std::size_t p = dot.out.find("->"); p != std::string::npos; p = dot.out.find("->", p + 1))
		++edges;
	CHECK(edges == 8);
}

TEST_CASE("Weyl group cache")
{
	const fs::path dir = scratch_dir("cache");
	const auto first = run_cli({"weyl", "--type", "B3", "--cache-dir", dir.string()});
	CHECK(first.code == 0);
	CHECK(fs::exists(dir / "weyl-B3-v1.json"));
	const auto second = run_cli({"weyl", "--type", "B3", "--cache-dir", dir.string()});
	CHECK(second.out == first.out);

	{
		std::ofstream f(dir / "weyl-B3-v1.json");
		f << "garbage";
	}
	const auto third = run_cli({"weyl", "--type", "B3", "--cache-dir", dir.string()});
	CHECK(third.code == 0);
	CHECK(third.out == first.out);
	CHECK(Json::parse(std::ifstream(dir / "weyl-B3-v1.json")).at("order") == 48);
	fs::remove_all(dir);
}

TEST_CASE("RunConfig JSON round trip")
{
	int code = -1;
	std::ostringstream out, err;
	const auto cfg = cli::parse_arguments(
	    {"verify-theorem", "--type", "B3", "--tau", "1,2", "--lambda", "1,2,3", "--parallel", "--seed", "9"}, out,
	    err, code);
	REQUIRE(cfg.has_value());
	CHECK(cfg->family == 'B');
	CHECK(cfg->rank == 3);
	CHECK(cfg->lambda == std::vector<Coord>{1, 2, 3});
	CHECK_FALSE(cfg->mu.has_value());
	CHECK(cli::config_from_json(Json::parse(cli::config_to_json(*cfg).dump())) == *cfg);
	CHECK_THROWS_AS(cli::config_from_json(Json::parse(R"({"command":"info"})")), InputError);
}

TEST_CASE("parse_coords")
{
	CHECK(cli::parse_coords("2,-1,0") == std::vector<Coord>{2, -1, 0});
	CHECK(cli::parse_coords(" 3 ") == std::vector<Coord>{3});
	CHECK_THROWS_AS(cli::parse_coords(""), InputError);
	CHECK_THROWS_AS(cli::parse_coords("1,,2"), InputError);
	CHECK_THROWS_AS(cli::parse_coords("1.5"), InputError);
}
