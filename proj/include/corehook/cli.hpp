#pragma once

#include "corehook/partitions.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace corehook::cli {

/// Process exit codes; part of the tool's stable interface.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kInfiniteFamily = 2,
    kMismatch = 3,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Outcome of comparing the closed form with the brute-force scan.
struct VerifyOutcome {
    Int s = 0;
    Int t = 0;
    Int d = 0;
    std::optional<Int> formula_H;
    std::optional<Int> oracle_H;

    bool ok() const { return formula_H.has_value() && formula_H == oracle_H; }
};

std::string format_verify(const VerifyOutcome& outcome, bool json);

} // namespace corehook::cli
