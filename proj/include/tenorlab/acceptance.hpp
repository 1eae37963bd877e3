#pragma once

#include <iosfwd>

namespace tenorlab::acceptance {

struct Options {
    int threads = 1;  // the stated runtime budgets are single-threaded
};

/// Runs the full acceptance suite, printing one PASS/FAIL line per criterion.
/// Returns the number of failed criteria.
int run_all(std::ostream& out, const Options& opts = {});

}  // namespace tenorlab::acceptance
