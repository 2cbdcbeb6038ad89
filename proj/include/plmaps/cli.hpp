#pragma once

#include <iosfwd>
#include <string>

#include "plmaps/errors.hpp"

namespace plm::cli {

// Exit codes: verdict true / success, verdict false or failed check, usage or
// validation error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::string subcommand;
  std::string kind;  // make: tent | xi | conjugate | attracting
  std::string g_path;
  std::string psi_path;
  std::string h_path;
  std::string map_path;
  unsigned depth = 8;
  unsigned n = 4;
  unsigned t = 1;
  unsigned k = 1;
  unsigned pmax = 50;
  unsigned samples = 2;
  double tolerance = 1e-9;
  std::string output;
  std::string format = "json";  // json | csv | svg-points
  bool floats = false;
  unsigned threads = 1;
};

// Throws UsageError naming the offending flag.
void validate(const RunConfig& cfg);

// Dispatches one subcommand. Machine-readable output goes to out, the human
// summary and diagnostics to err.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Parses argv and runs.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace plm::cli
