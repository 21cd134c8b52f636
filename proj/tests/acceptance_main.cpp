// Release-gate runner: one line per criterion, exit 0 iff everything passed.
#include <iostream>

#include "acceptance.hpp"

int main() {
    auto results = superbc::accept::run_all(std::cout);
    return superbc::accept::all_passed(results) ? 0 : 1;
}
