#include <cstdlib>
#include <iostream>

#include "cuelab/selftest.hpp"

int main() {
    long workers = 4;
    if (const char* env = std::getenv("CUE_LAB_WORKERS")) {
        long w = std::atol(env);
        if (w > 0) workers = w;
    }
    auto results = cuelab::run_selftest(workers);
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : (r.assertive ? "FAIL" : "INFO")) << "  [" << r.id << "] " << r.name << "  ("
                  << cuelab::selftest_detail::fmt(r.runtime_s) << " s)\n";
        if (!r.detail.empty()) std::cout << "      " << r.detail << "\n";
    }
    bool failed = cuelab::selftest_failed(results);
    std::cout << (failed ? "ACCEPTANCE: FAIL\n" : "ACCEPTANCE: PASS\n");
    return failed ? 1 : 0;
}
