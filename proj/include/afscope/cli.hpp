#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace afscope::cli {

/// Stable exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kUsageError = 2;

struct Hooks {
  /// Called by `serve` once the port is bound, before serving.
  std::function<void(int port)> on_listening;
};

/// Runs one invocation. `args` excludes the program name; "-" as input
/// reads `in`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err, const Hooks& hooks = {});

/// Asks a running `serve` to shut down; safe from a signal handler.
void request_stop() noexcept;

}  // namespace afscope::cli
