#pragma once

#include <string>
#include <vector>

namespace CLI {
class App;
}

namespace randcx::cli {

/// Expands `--config FILE` into flags. FILE holds a JSON object whose keys
/// are long flag names of the selected subcommand (without dashes); arrays
/// become repeated values and `true` becomes a bare flag. Flags given on the
/// command line win over the file.
std::vector<std::string> expand_config(CLI::App& app, std::vector<std::string> args);

}  // namespace randcx::cli
