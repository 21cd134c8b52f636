// The release gate: one runnable check per advertised property of the
// toolkit, each printing a single pass/fail line.
#ifndef SUPERBC_ACCEPTANCE_HPP
#define SUPERBC_ACCEPTANCE_HPP

#include <array>
#include <ostream>
#include <string>
#include <vector>

namespace superbc::accept {

struct CheckResult {
    std::string id;
    bool passed = false;
    std::string expected;
    std::string actual;
    double seconds = 0.0;
};

// the superbracket table of the natural gl(2|2) basis: rows eta11, eta12,
// eta21, eta22, X1, X2, Y1, Y2 against columns xi11, xi12, xi21, xi22, X1,
// X2, Y1, Y2; entries in the formatter's canonical notation
const std::array<std::array<const char*, 8>, 8>& expected_bracket_table();
const std::array<const char*, 8>& bracket_row_names();
const std::array<const char*, 8>& bracket_col_names();

// canonical rendering of a degree <= 1 element for table comparison
std::string bracket_entry_string(int row_gen, int col_gen);

// runs all criteria, printing one line each; returns per-check records
std::vector<CheckResult> run_all(std::ostream& os);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace superbc::accept

#endif
