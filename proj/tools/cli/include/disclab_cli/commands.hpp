#pragma once

#include <iosfwd>

namespace disclab::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kUsage = 2,
    kParse = 3,
    kDuplicate = 4,
    kOverflow = 5,
    kSearchExhausted = 6,
    kPrecondition = 7,
    kVerifyFailed = 8,
    kIo = 9,
};

/// Entry point of the disclab tool; returns the process exit code.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace disclab::cli
