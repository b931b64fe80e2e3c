// Uniform periodic grid on [0,1)^d with N samples per axis.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace cit {

struct TorusGrid {
    int d = 0;       // spatial dimension
    int N = 0;       // samples per axis, even
    std::size_t point_count = 0;  // N^d

    double spacing() const { return 1.0 / N; }
};

inline std::size_t grid_memory_cap() {
    if (const char* env = std::getenv("CIT_MAX_BYTES")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v > 0) return static_cast<std::size_t>(v);
    }
    return std::size_t(1) << 34;  // 16 GiB
}

// Grid construction. N must be even (unambiguous Nyquist, real transforms
// round-trip) and the vector-field footprint N^d * d * 8 bytes must fit the
// configured cap (CIT_MAX_BYTES).
inline TorusGrid make_grid(int d, int N) {
    if (d < 2) throw std::invalid_argument("make_grid: d must be >= 2");
    if (N < 8) throw std::invalid_argument("make_grid: N must be >= 8");
    if (N % 2 != 0) throw std::invalid_argument("make_grid: N must be even");

    const std::size_t cap = grid_memory_cap();
    std::size_t pts = 1;
    for (int a = 0; a < d; ++a) {
        if (pts > cap / static_cast<std::size_t>(N)) {
            throw std::length_error("make_grid: N^d overflows memory cap");
        }
        pts *= static_cast<std::size_t>(N);
    }
    const std::size_t bytes = pts * static_cast<std::size_t>(d) * 8u;
    if (pts != 0 && bytes / (static_cast<std::size_t>(d) * 8u) != pts) {
        throw std::length_error("make_grid: byte count overflow");
    }
    if (bytes > cap) {
        throw std::length_error(
            "make_grid: grid of " + std::to_string(bytes) +
            " bytes exceeds cap " + std::to_string(cap) +
            " (set CIT_MAX_BYTES to raise)");
    }
    return TorusGrid{d, N, pts};
}

inline bool operator==(const TorusGrid& a, const TorusGrid& b) {
    return a.d == b.d && a.N == b.N;
}
inline bool operator!=(const TorusGrid& a, const TorusGrid& b) { return !(a == b); }

}  // namespace cit
