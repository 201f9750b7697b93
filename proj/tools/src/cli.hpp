#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gridmatch::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvariant = 3;

struct RunConfig {
  std::string command;
  std::string input;            // bitstring or graph path, "-" for stdin
  std::string output = "-";
  std::string cert_path;
  std::string a_path;
  std::string b_path;
  std::string out_a;
  std::string out_b;
  std::string term_out;
  std::string engine = "monoid";
  bool exit_code = false;
  bool allow_even = false;
  int width = 6;
  int length = 100'000;
  std::size_t budget = 100'000;
  int max_n = 12;
  std::uint64_t seed = 1;
};

/// Parses arguments (without the program name). Returns nullopt and writes to
/// out/err when parsing ends the run (help, usage error); `status` holds the exit code.
std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                                    int& status);

/// Applies the GRIDMATCH_SEED environment override. Throws on a malformed value.
void apply_environment(RunConfig& config);

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gridmatch::cli
