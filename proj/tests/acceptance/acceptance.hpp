#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mfdr::acceptance {

struct Result {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

constexpr std::uint64_t kDefaultSeed = 20240611;
constexpr int kCriteria = 13;

Result run_one(int id, std::uint64_t seed = kDefaultSeed);
std::vector<Result> run_all(std::uint64_t seed = kDefaultSeed);
// "PASS  [01] exact expansions of u, v, 1/Delta  (0.01 s)"
std::string format_line(const Result& r);

} // namespace mfdr::acceptance
