#pragma once

#include <iosfwd>
#include <string>

namespace fstruct {

/// Exit codes: 0 success (including "no adapted connection" answers),
/// 1 internal error, 2 invalid input structure, 3 verification failures.
struct CliOptions {
    std::string example;  // one of example_names() or product:<base>:<s>
    std::string file;     // structure file path (used when example empty)
    bool all = false;     // verify every catalog example
    std::string format = "text";  // text | json
    std::string out;      // write to file instead of the stream
};

int cmd_classify(const CliOptions& opt, std::ostream& os);
int cmd_report(const CliOptions& opt, std::ostream& os);
int cmd_verify(const CliOptions& opt, std::ostream& os);

}  // namespace fstruct
