#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cubicrig::cli {

enum class Emit { Text, Json, Csv };

struct Limits {
  unsigned max_n = 4;               ///< iterate count for exact work
  std::uint64_t max_size = 200;     ///< Sylvester size for oracle / fraction-free paths
  std::uint64_t enum_budget = 100000;
};

struct RunConfig {
  std::string subcommand;  ///< verify | resultant | artin-schreier | profile | solve | sweep
  unsigned n = 1;
  unsigned m = 1;
  unsigned tail_i = 0;
  unsigned tail_j = 0;
  std::uint64_t p = 3;
  bool oracle = false;
  std::string method = "ei";  ///< ff | ei | both
  std::string n_range = "1:2";
  std::string m_range = "1:2";
  std::vector<std::string> tails{"00"};
  double tol = 1e-6;
  bool numeric = true;
  bool print_poly = false;
  Emit emit = Emit::Text;
  std::string out;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  Limits limits;
};

enum ExitCode : int { kPass = 0, kCertificateFailure = 1, kUsage = 2 };

/// Executes a parsed configuration, writing the report to `out`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv (environment overrides first, flags win) and runs.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cubicrig::cli
