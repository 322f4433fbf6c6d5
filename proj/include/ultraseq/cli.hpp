#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ultraseq::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 when verification finds violations (or, with --strict, uncheckable
/// positions) and 2 on usage or input errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ultraseq::cli
