#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace envcheck {

/// Exit codes: 0 all checked releases validated, 1 issues found, 2 usage or I/O error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace envcheck
