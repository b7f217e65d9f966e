// Runs every acceptance criterion and prints one status line per criterion.
#include <cstdio>

#include "skeinkit/verify.hpp"

int main() {
    skeinkit::SuiteResult result = skeinkit::run_acceptance_suite();
    std::fputs(skeinkit::format_suite(result).c_str(), stdout);
    return result.ok ? 0 : 1;
}
