// Deterministic random fields.
//
// Generator: splitmix64 (Steele-Lea-Flood mix), keyed per (seed, tag, mode)
// rather than streamed, so generated fields do not depend on traversal order
// and are reproducible across platforms. Uniform doubles take the top 53 bits.
#pragma once

#include <cstdint>

#include "cit/spectral.hpp"

namespace cit {

inline constexpr const char* kGeneratorName = "splitmix64-keyed";

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline double uniform01(std::uint64_t key) {
    return static_cast<double>(splitmix64(key) >> 11) * 0x1.0p-53;
}

// in [-1, 1]
inline double uniform_sym(std::uint64_t key) { return 2.0 * uniform01(key) - 1.0; }

namespace detail {

// canonical representative of {m, -m}: first nonzero entry positive
inline bool mode_is_canonical(const int* m, int d) {
    for (int a = 0; a < d; ++a) {
        if (m[a] > 0) return true;
        if (m[a] < 0) return false;
    }
    return true;  // zero mode
}

inline std::uint64_t mode_key(std::uint64_t seed, std::uint64_t tag, const int* m, int d,
                              int kmax) {
    std::uint64_t lin = 0;
    for (int a = 0; a < d; ++a)
        lin = lin * static_cast<std::uint64_t>(2 * kmax + 1) +
              static_cast<std::uint64_t>(m[a] + kmax);
    return splitmix64(seed ^ splitmix64(tag ^ splitmix64(lin)));
}

}  // namespace detail

// Zero-mean random band-limited scalar field: independent coefficients on
// integer modes 0 < |m|_inf <= kmax, Hermitian by construction, each
// coefficient uniform in the complex unit box scaled by `amp`.
inline ScalarField random_band_limited(const TorusGrid& g, int kmax, std::uint64_t seed,
                                       std::uint64_t tag, double amp = 1.0) {
    if (kmax < 1 || kmax > g.N / 2 - 1)
        throw std::invalid_argument("random_band_limited: need 1 <= kmax <= N/2-1");
    SpectralField F(g);
    for_each_mode(g, [&](std::size_t i, const int* m) {
        bool inband = false;
        for (int a = 0; a < g.d; ++a) {
            if (m[a] > kmax || m[a] < -kmax) return;
            if (m[a] != 0) inband = true;
        }
        if (!inband) return;  // zero mode left empty
        int mm[16];
        const bool canon = detail::mode_is_canonical(m, g.d);
        for (int a = 0; a < g.d; ++a) mm[a] = canon ? m[a] : -m[a];
        const std::uint64_t k1 = detail::mode_key(seed, tag * 2 + 0, mm, g.d, kmax);
        const std::uint64_t k2 = detail::mode_key(seed, tag * 2 + 1, mm, g.d, kmax);
        double re = amp * uniform_sym(k1);
        double im = amp * uniform_sym(k2);
        if (!canon) im = -im;  // Hermitian partner
        F.c[i] = {re, im};
    });
    return to_physical(std::move(F));
}

// Divergence-free zero-mean random vector field (Leray-projected draw).
inline VectorField random_divfree(const TorusGrid& g, int kmax, std::uint64_t seed,
                                  double amp = 1.0) {
    VectorField u(g);
    for (int a = 0; a < g.d; ++a)
        u[a] = random_band_limited(g, kmax, seed, 100 + static_cast<std::uint64_t>(a), amp);
    return leray_project(u);
}

}  // namespace cit
