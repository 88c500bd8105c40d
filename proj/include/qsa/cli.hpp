#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qsa/serialize.hpp"
#include "qsa/verify.hpp"

namespace qsa {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CliConfig {
    Ctx ctx;
    GCtx grp; // null when no group block is configured
    Bounds bounds;
};

CliConfig load_config_json(const Json& j);
CliConfig load_config_file(const std::string& path);

/// Full command-line driver; args excludes the program name.
/// Exit codes: 0 success, 1 verification or equality failure,
/// 2 configuration / syntax / usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qsa
