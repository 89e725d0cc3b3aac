#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace snp {

// Exit codes are a stable contract: 0 success, 1 semantic failure (with
// witness), 2 parse/usage, 3 out-of-scope feature, 4 resource cap.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace snp
