#pragma once

#include "demchar/json_io.hpp"
#include "demchar/rootsys.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace demchar::cli {

enum ExitCode : int { kVerified = 0, kMismatch = 1, kUsage = 2 };

/// Everything a command needs, independent of how it was parsed.
struct RunConfig
{
	std::string command;
	char family = 'A';
	std::size_t rank = 1;
	std::optional<std::string> tau; // element selector: "e", "w0" or "1,2,1"
	std::optional<std::string> w;
	std::optional<std::vector<Coord>> lambda;
	std::optional<std::vector<Coord>> mu;
	Coord grid = 2;
	std::string format = "plain";
	std::string cache_dir;
	bool parallel = false;
	std::size_t max_group_order = 10000;
	std::uint64_t seed = 20260101;
	std::size_t samples = 50;
	std::string input;
	bool dot = false;
	bool with_lemma31 = false;

	friend bool operator==(const RunConfig &, const RunConfig &) = default;
};

Json config_to_json(const RunConfig &cfg);
RunConfig config_from_json(const Json &j);

/// Name of the environment variable holding the default cache directory.
inline constexpr const char *kCacheDirEnv = "DEMCHAR_CACHE_DIR";

/// Parses argv-style arguments (without the program name). Returns nullopt
/// after printing help or a usage error; `exit_code` says which.
std::optional<RunConfig> parse_arguments(const std::vector<std::string> &args, std::ostream &out,
                                         std::ostream &err, int &exit_code);

int execute(const RunConfig &cfg, std::ostream &out, std::ostream &err);

/// parse_arguments followed by execute.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// "2,-1,0" -> {2, -1, 0}
std::vector<Coord> parse_coords(const std::string &text);

} // namespace demchar::cli
