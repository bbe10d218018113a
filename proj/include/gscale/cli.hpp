#ifndef GSCALE_CLI_HPP_
#define GSCALE_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace gscale::cli {

  // Exit codes.
  inline constexpr int exit_exists       = 0;
  inline constexpr int exit_absent       = 1;
  inline constexpr int exit_inconclusive = 2;
  inline constexpr int exit_error        = 3;
  inline constexpr int exit_internal     = 4;

  inline constexpr char const* cap_env_var = "GSCALE_DEFAULT_CAP";

  // args excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace gscale::cli

#endif  // GSCALE_CLI_HPP_
