#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hmfcert::cli {

/* exit codes */
inline constexpr int kOk = 0;
inline constexpr int kValidation = 1;
inline constexpr int kPartial = 2;

/* args excludes the program name */
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace hmfcert::cli
