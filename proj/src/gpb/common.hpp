#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gpb {

// Argument violates a documented precondition.
class invalid_argument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A certification or cross-check ran to completion and did not hold.
class check_failure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Internal invariant broke; a bug, not bad input.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Finite sequence of nonnegative integers.
using Word = std::vector<int>;

struct VectorIntHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int x : v)
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
};

std::string join_ints(const std::vector<int>& v, const std::string& sep = ",");

}  // namespace gpb
