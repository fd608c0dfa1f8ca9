#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fsind/multiplicities.hpp"
#include "fsind/weyl_group.hpp"

namespace fsind::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kSuccess = 0,
    kValidation = 1,
    kResource = 2,
    kOracleMismatch = 3,
};

enum class OutputFormat { Text, Json };

struct JobSpec {
    std::string command;
    std::string type;
    std::string lambda;
    std::string mu;
    std::string mu_basis = "labels";
    std::optional<std::int64_t> m;
    std::optional<std::int64_t> m_max;
    MultiplicityEngine engine = MultiplicityEngine::Freudenthal;
    OutputFormat format = OutputFormat::Text;
    std::string grid;
    std::size_t cap_weyl = kDefaultWeylCap;
    std::size_t cap_support = kDefaultSupportCap;
    std::size_t cap_oracle_rank = 3;
};

inline constexpr double kOracleTolerance = 1e-6;
inline constexpr const char* kJsonSchema = "fsind/1";

/// Parses `args` (args[0] is the program name), runs the job and writes the
/// report to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs an already-parsed job.
int execute(const JobSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace fsind::cli
