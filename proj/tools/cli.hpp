#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sparsecurves::cli {

/// Process exit codes.
enum ExitCode : int {
    kSparse = 0,
    kNotSparse = 2,
    kCertificateFailure = 3,
    kDomainError = 4,
    kIoError = 5,
};

/// Runs the command line with args[0] being the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sparsecurves::cli
