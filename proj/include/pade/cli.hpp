#pragma once

// Command-line front end. `run` holds all the logic so that tests can drive
// it with in-memory streams; tools/pade_main.cpp only forwards argv.
//
// Exit codes: 0 success, 1 other failure, 2 input error, 3 degeneracy,
// 4 --check mismatch.

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "pade/riccati.hpp"

namespace pade::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_failure = 1,
    exit_input = 2,
    exit_degenerate = 3,
    exit_check_failed = 4,
};

/// `args` excludes the program name. `env_mode` is the value of PADE_MODE
/// (nullptr when unset); an explicit --mode wins over it.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const char* env_mode);

enum class TableFormat { table, csv, json };

/// Key/value pairs printed above the table (table), as top-level fields
/// (json), or not at all (csv, whose first line is the header).
using TableMeta = std::vector<std::pair<std::string, std::string>>;

/// Renders error-table rows; missing errors and timed-out times print as "?".
std::string format_error_table(const std::vector<ErrorTableRow>& rows, TableFormat format,
                               const TableMeta& meta = {});

}  // namespace pade::cli
