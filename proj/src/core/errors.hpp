// Error taxonomy shared by the core library, the C API and the CLI.
// The numeric values double as process exit codes.
#pragma once

#include <stdexcept>
#include <string>

namespace qdm {

enum class errc : int {
  ok = 0,
  config = 2,    // malformed or inconsistent configuration / input data
  dim_cap = 3,   // requested state space exceeds the dense cap
  internal = 4,  // violated internal invariant (non-integer trace, ...)
  fusion = 5,    // fusion closure failure (NotClosed / NonIntegerCoefficients)
  path = 6,      // requested string path does not exist on the complex
};

class error : public std::runtime_error {
public:
  error(errc c, std::string msg) : std::runtime_error(std::move(msg)), code_(c) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

inline void require(bool cond, errc c, const std::string& msg) {
  if (!cond) fail(c, msg);
}

}  // namespace qdm
