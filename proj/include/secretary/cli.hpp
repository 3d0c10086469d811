#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace secretary::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;  // bad flags or out-of-domain parameters
inline constexpr int kExitInternalError = 2;

// Version tag written as "schema" into every JSON record.
inline constexpr int kSchemaVersion = 1;

// Environment variable holding the default seed (decimal, 64-bit).
inline constexpr const char* kSeedEnvVar = "SECRETARY_SEED";

// Entry point of the `secretary` tool. Data goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Same, with argv[0] supplied; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace secretary::cli
