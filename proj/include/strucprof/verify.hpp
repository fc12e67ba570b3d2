#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "strucprof/profile.hpp"

namespace strucprof {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Shared state for a verification run: profile tables are cached so suites
// that need the same family/usage range compute it once.
class VerifyContext {
  public:
    explicit VerifyContext(int threads = 0) : threads_(threads) {}
    const ProfileTable& table(const std::string& family, int n_max);
    int threads() const { return threads_; }

  private:
    int threads_;
    std::map<std::pair<std::string, int>, ProfileTable> tables_;
};

// Golden suites, one per acceptance area:
//   ten-graphs, w-sequences, dualities, thresholds, decompositions,
//   exponential, growth, scope
std::vector<std::string> suite_names();
std::vector<CheckResult> run_suite(const std::string& name, VerifyContext& ctx);

// Runs the named suites (or all of them for "all"), printing one line per
// assertion; returns true iff everything passed.
bool run_suites(const std::vector<std::string>& names, std::ostream& out, int threads = 0);

}  // namespace strucprof
