
// Command-line front end. Exit codes: 0 ok, 1 input error, 2 numerical
// error, 3 validation failure.

#ifndef VECFDP_CLI_HPP_
#define VECFDP_CLI_HPP_

#include <iosfwd>

namespace vecfdp {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitNumerical = 2;
inline constexpr int kExitValidation = 3;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vecfdp

#endif  // VECFDP_CLI_HPP_
