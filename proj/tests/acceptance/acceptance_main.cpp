#include "acceptance.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv)
{
    std::uint64_t seed = mfdr::acceptance::kDefaultSeed;
    if (argc > 1)
        seed = std::strtoull(argv[1], nullptr, 10);
    int failed = 0;
    for (int id = 1; id <= mfdr::acceptance::kCriteria; ++id) {
        auto r = mfdr::acceptance::run_one(id, seed);
        std::printf("%s  (%.2f s)\n", mfdr::acceptance::format_line(r).c_str(), r.seconds);
        std::fflush(stdout);
        if (!r.passed)
            ++failed;
    }
    std::printf("%d/%d criteria passed\n", mfdr::acceptance::kCriteria - failed, mfdr::acceptance::kCriteria);
    return failed == 0 ? 0 : 1;
}
