#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace snortlab::cli {

// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource cap exceeded.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace snortlab::cli
