#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace addcollatz::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitUnexpectedCounterexample = 2;
inline constexpr int kExitInternal = 3;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Aligned text rendering of an envelope, used by --format table.
void render_table(const nlohmann::json& envelope, std::ostream& out);

}  // namespace addcollatz::cli
