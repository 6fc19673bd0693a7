#ifndef YMH_CLI_HPP
#define YMH_CLI_HPP

#include <iosfwd>

namespace ymh {

/// Entry point behind the `ymh` binary. Exit codes: 0 success, 1 parse or
/// validation error, 2 numerical failure. Errors are printed to `err` with
/// the machine-greppable prefix "YMH-ERROR:".
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ymh

#endif
