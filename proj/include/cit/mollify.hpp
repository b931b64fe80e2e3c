// Mollification with a fixed C^infty radial bump of support radius l,
// quadrature-normalized to unit mass on the grid and applied as a circular
// convolution in spectral space (commutes with derivatives to rounding).
#pragma once

#include <cmath>
#include <stdexcept>

#include "cit/spectral.hpp"

namespace cit {

// Sampled kernel eta_l, normalized so (1/N^d) sum eta_l = 1.
inline ScalarField mollifier_kernel(const TorusGrid& g, double l) {
    if (l < 2.0 / g.N) throw std::invalid_argument("mollify: l below grid resolution (l >= 2/N)");
    if (l > 0.5) throw std::invalid_argument("mollify: kernel radius above half period");
    ScalarField ker(g);
    const int d = g.d, N = g.N;
    std::vector<int> idx(d, 0);
    const double inv_l2 = 1.0 / (l * l);
    double sum = 0.0;
    for (std::size_t lin = 0; lin < g.point_count; ++lin) {
        double r2 = 0.0;
        for (int a = 0; a < d; ++a) {
            const double x = static_cast<double>(idx[a]) / N;
            const double w = std::min(x, 1.0 - x);
            r2 += w * w;
        }
        r2 *= inv_l2;
        if (r2 < 1.0) {
            const double v = std::exp(-1.0 / (1.0 - r2));
            ker.v[lin] = v;
            sum += v;
        }
        int a = d - 1;
        while (a >= 0 && ++idx[a] == N) idx[a--] = 0;
    }
    const double scale = static_cast<double>(g.point_count) / sum;
    for (auto& v : ker.v) v *= scale;
    return ker;
}

// Spectral multiplier of the kernel (real, since the kernel is even).
inline std::vector<double> mollifier_symbol(const TorusGrid& g, double l) {
    SpectralField KH = to_spectral(mollifier_kernel(g, l));
    std::vector<double> sym(KH.c.size());
    for (std::size_t i = 0; i < sym.size(); ++i) sym[i] = KH.c[i].real();
    return sym;
}

inline ScalarField mollify_with_symbol(const ScalarField& f, const std::vector<double>& sym) {
    SpectralField F = to_spectral(f);
    for (std::size_t i = 0; i < F.c.size(); ++i) F.c[i] *= sym[i];
    return to_physical(std::move(F));
}

inline ScalarField mollify(const ScalarField& f, double l) {
    return mollify_with_symbol(f, mollifier_symbol(f.grid, l));
}

inline VectorField mollify(const VectorField& f, double l) {
    const auto sym = mollifier_symbol(f.grid, l);
    VectorField out(f.grid);
    for (int a = 0; a < f.grid.d; ++a) out[a] = mollify_with_symbol(f[a], sym);
    return out;
}

inline SymTensorField mollify(const SymTensorField& f, double l) {
    const auto sym = mollifier_symbol(f.grid, l);
    SymTensorField out(f.grid, f.traceless);
    for (int c = 0; c < f.ncomp(); ++c) out.comp[c] = mollify_with_symbol(f.comp[c], sym);
    return out;
}

}  // namespace cit
