#pragma once

#include <complex>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "trisqueeze/moments.hpp"

namespace trisqueeze::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

/// Malformed command line; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "v" or "start:stop:count" (count >= 2, both endpoints included).
std::vector<double> parse_sweep(const std::string& text);

/// "n=n1,n2,n3" or "alpha=a1,a2,a3" with complex entries such as 0.5, -1i or 0.3-0.2i.
InputState parse_state(const std::string& text);
std::complex<double> parse_complex(const std::string& text);

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trisqueeze::cli
