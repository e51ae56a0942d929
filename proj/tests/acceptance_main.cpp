// Acceptance suite: runs every verification criterion at its pinned
// tolerance and prints one pass/fail line per criterion.

#include <cstdio>

#include "unigraph/acceptance.hpp"

int main(int argc, char** argv) {
    const std::string only = argc > 1 ? argv[1] : "";
    const auto results = unigraph::run_acceptance(only);
    if (results.empty()) {
        std::fprintf(stderr, "no criterion matches filter '%s'\n", only.c_str());
        return 2;
    }
    bool all = true;
    for (const auto& r : results) {
        std::printf("[%s] %2d %-20s %6.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                    r.detail.c_str());
        all = all && r.pass;
    }
    std::printf("%s: %zu/%zu criteria passed\n", all ? "OK" : "FAILED",
                static_cast<std::size_t>(std::count_if(results.begin(), results.end(),
                                                       [](const auto& r) { return r.pass; })),
                results.size());
    return all ? 0 : 1;
}
