// FFTW-backed spectral representation of real fields on the torus.
//
// Conventions:
//   f(x) = sum_m fhat(m) e^{2 pi i m.x},  m in Z^d, |m_a| <= N/2.
// Real fields are stored as the r2c half-spectrum (last axis 0..N/2) of
// Fourier coefficients (forward transform scaled by 1/N^d). The inverse is
// the plain FFTW c2r sum, so round trips are exact to rounding.
#pragma once

#include <fftw3.h>

#include <complex>
#include <map>
#include <mutex>
#include <vector>

#include "cit/field.hpp"

namespace cit {

struct SpectralField {
    TorusGrid grid;
    std::vector<std::complex<double>> c;  // size N^(d-1) * (N/2+1)

    SpectralField() = default;
    explicit SpectralField(const TorusGrid& g) : grid(g), c(half_size(g)) {}

    static std::size_t half_size(const TorusGrid& g) {
        std::size_t n = 1;
        for (int a = 0; a + 1 < g.d; ++a) n *= static_cast<std::size_t>(g.N);
        return n * static_cast<std::size_t>(g.N / 2 + 1);
    }
    void release() { std::vector<std::complex<double>>().swap(c); }
};

namespace detail {

struct PlanPair {
    fftw_plan fwd = nullptr;  // r2c
    fftw_plan bwd = nullptr;  // c2r
};

// One plan pair per (d, N); FFTW_UNALIGNED so plans run on any buffers.
inline PlanPair& plans_for(const TorusGrid& g) {
    static std::map<std::pair<int, int>, PlanPair> cache;
    auto key = std::make_pair(g.d, g.N);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<int> dims(g.d, g.N);
    std::vector<double> rbuf(g.point_count);
    std::vector<std::complex<double>> cbuf(SpectralField::half_size(g));
    PlanPair pp;
    pp.fwd = fftw_plan_dft_r2c(g.d, dims.data(), rbuf.data(),
                               reinterpret_cast<fftw_complex*>(cbuf.data()),
                               FFTW_ESTIMATE | FFTW_UNALIGNED);
    pp.bwd = fftw_plan_dft_c2r(g.d, dims.data(),
                               reinterpret_cast<fftw_complex*>(cbuf.data()),
                               rbuf.data(), FFTW_ESTIMATE | FFTW_UNALIGNED);
    auto res = cache.emplace(key, pp);
    return res.first->second;
}

}  // namespace detail

// Forward transform; input is preserved.
inline SpectralField to_spectral(const ScalarField& f) {
    SpectralField out(f.grid);
    auto& pp = detail::plans_for(f.grid);
    // r2c with FFTW_PRESERVE_INPUT is the default for out-of-place rank>1 r2c
    fftw_execute_dft_r2c(pp.fwd, const_cast<double*>(f.v.data()),
                         reinterpret_cast<fftw_complex*>(out.c.data()));
    const double scale = 1.0 / static_cast<double>(f.grid.point_count);
    for (auto& z : out.c) z *= scale;
    return out;
}

// Inverse transform. Consumes the spectral data (FFTW's multi-dim c2r
// overwrites its input), which suits the one-shot multiplier pipelines here.
inline ScalarField to_physical(SpectralField&& F) {
    ScalarField out(F.grid);
    auto& pp = detail::plans_for(F.grid);
    fftw_execute_dft_c2r(pp.bwd, reinterpret_cast<fftw_complex*>(F.c.data()),
                         out.v.data());
    F.release();
    return out;
}

inline ScalarField to_physical_copy(const SpectralField& F) {
    SpectralField tmp = F;
    return to_physical(std::move(tmp));
}

// Iterate the half-spectrum. cb(index, m) with m[a] the signed mode, except
// the per-axis Nyquist which is reported as +N/2.
template <typename F>
inline void for_each_mode(const TorusGrid& g, F&& cb) {
    const int d = g.d, N = g.N;
    const int last = N / 2 + 1;
    std::vector<int> idx(d, 0);
    std::vector<int> m(d, 0);
    std::size_t lin = 0;
    while (true) {
        for (int a = 0; a < d; ++a)
            m[a] = (a + 1 == d) ? idx[a] : (idx[a] <= N / 2 ? idx[a] : idx[a] - N);
        cb(lin, m.data());
        ++lin;
        int a = d - 1;
        while (a >= 0) {
            ++idx[a];
            const int lim = (a + 1 == d) ? last : N;
            if (idx[a] < lim) break;
            idx[a] = 0;
            --a;
        }
        if (a < 0) break;
    }
}

// Multiplicity of a half-spectrum entry when summing over full Z^d modes
// (conjugate pairs folded onto the stored half).
inline double mode_weight(const TorusGrid& g, const int* m) {
    const int ml = m[g.d - 1];
    return (ml == 0 || ml == g.N / 2) ? 1.0 : 2.0;
}

}  // namespace cit
