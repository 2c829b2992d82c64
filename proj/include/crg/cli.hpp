#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace crg {

// Command dispatch behind the `crg` binary; takes argv-style arguments
// without the program name. Exit codes: 0 success / campaign PASS,
// 1 campaign FAIL, 2 usage or parse errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crg
