#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liebra::cli {

// Entry point used by the liebra binary and by the in-process CLI tests.
// args excludes argv[0]. Exit codes: 0 success, 1 mathematical failure
// (Jacobi defect, failed audit, violated precondition of a verb),
// 2 usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace liebra::cli
