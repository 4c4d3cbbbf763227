#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "stockdp/config.hpp"
#include "stockdp/suites.hpp"

namespace stockdp {

// Each command writes its CSV/Markdown artifacts under cfg.out, logs a short
// human-readable summary and returns the written paths. Configuration
// problems raise ConfigError; other failures raise Error.
using Written = std::vector<std::filesystem::path>;

Written cmd_solve(const RunConfig& cfg, std::ostream& log);
Written cmd_eval(const RunConfig& cfg, std::ostream& log);
Written cmd_risk(const RunConfig& cfg, std::ostream& log);
Written cmd_rollout(const RunConfig& cfg, std::ostream& log);
Written cmd_check(const RunConfig& cfg, std::ostream& log);
// Markdown capability matrix over the built-in utility catalog.
Written cmd_check_matrix(const std::filesystem::path& out, std::ostream& log);

struct SuiteOutcome {
  bool passed = false;
  Written files;
};

// name may be "all". Unknown names raise ConfigError. An empty out skips the
// Markdown files.
SuiteOutcome cmd_suite(const std::string& name, const SuiteOptions& opts, const std::filesystem::path& out,
                       std::ostream& log);

}  // namespace stockdp
