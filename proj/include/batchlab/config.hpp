#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

namespace batchlab {

// Enumeration budgets for the exact searches. Every search checks its budget
// up front and refuses to start unbounded work.
struct Caps {
    std::uint64_t dual_enumeration = 1ull << 20;  // dual codewords visited per code
    std::uint64_t multiset = 1ull << 22;          // request multisets per verification
    std::uint64_t tensor = 1ull << 20;            // expanded components per tensor product
};

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parse failure with 1-based line/column, thrown by the file readers.
struct ParseError : std::runtime_error {
    ParseError(std::size_t line_, std::size_t column_, const std::string& message)
        : std::runtime_error(std::to_string(line_) + ":" + std::to_string(column_) + ": " + message),
          line(line_),
          column(column_) {}
    std::size_t line;
    std::size_t column;
};

// Worker budget for fanned-out verification. BATCHLAB_THREADS caps it; 1
// forces sequential execution. Unset: hardware concurrency, at most 8.
inline unsigned worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    unsigned count = std::clamp(hw, 1u, 8u);
    if (const char* env = std::getenv("BATCHLAB_THREADS")) {
        char* end = nullptr;
        long parsed = std::strtol(env, &end, 10);
        if (end != env && parsed >= 1) count = static_cast<unsigned>(std::min(parsed, 64l));
    }
    return count;
}

}  // namespace batchlab
