// Exact Fourier-multiplier calculus on TorusGrid fields.
//
// Symbols, for integer modes m (f = sum fhat(m) e^{2 pi i m.x}):
//   partial_j        2 pi i m_j          (per-axis Nyquist zeroed: odd symbol)
//   laplacian        -(2 pi |m|)^2
//   inv_laplacian    -(2 pi |m|)^{-2}    (mean mode dropped)
//   frac_power(s)    (2 pi |m|)^s        (mean mode dropped)
//   riesz_j          i m_j / |m|         (mean mode dropped, Nyquist zeroed)
//   lp_block(q)      smooth dyadic shell ~2^q (q >= -1)
//   wavenumber_leq / wavenumber_geq(l)   cumulative partitions, exact complements
//
// Singular symbols require zero-mean input unless Multiplier::drop_mean is
// set, in which case the mean mode is silently zeroed.
#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cit/fft.hpp"

namespace cit {

enum class MultiplierKind {
    partial,
    laplacian,
    inv_laplacian,
    frac_power,
    riesz,
    lp_block,
    wavenumber_leq,
    wavenumber_geq,
};

struct Multiplier {
    MultiplierKind kind;
    int axis = 0;       // partial / riesz
    double s = 0.0;     // frac_power exponent
    int q = 0;          // lp_block index (>= -1)
    double ell = 1.0;   // wavenumber cutoff
    bool drop_mean = false;

    static Multiplier partial_j(int j) { return {MultiplierKind::partial, j}; }
    static Multiplier laplacian() { return {MultiplierKind::laplacian}; }
    static Multiplier inv_laplacian(bool drop = false) {
        Multiplier m{MultiplierKind::inv_laplacian};
        m.drop_mean = drop;
        return m;
    }
    static Multiplier frac_power(double s, bool drop = false) {
        Multiplier m{MultiplierKind::frac_power};
        m.s = s;
        m.drop_mean = drop;
        return m;
    }
    static Multiplier riesz_j(int j, bool drop = false) {
        Multiplier m{MultiplierKind::riesz, j};
        m.drop_mean = drop;
        return m;
    }
    static Multiplier lp_block(int q) {
        Multiplier m{MultiplierKind::lp_block};
        m.q = q;
        return m;
    }
    static Multiplier wavenumber_leq(double ell) {
        Multiplier m{MultiplierKind::wavenumber_leq};
        m.ell = ell;
        return m;
    }
    static Multiplier wavenumber_geq(double ell) {
        Multiplier m{MultiplierKind::wavenumber_geq};
        m.ell = ell;
        return m;
    }

    bool singular() const {
        return kind == MultiplierKind::inv_laplacian || kind == MultiplierKind::riesz ||
               (kind == MultiplierKind::frac_power && s != 0.0);
    }
};

namespace detail {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

// C^infty cutoff: 1 on [0,1], 0 on [2,inf).
inline double smooth_step_chi(double r) {
    if (r <= 1.0) return 1.0;
    if (r >= 2.0) return 0.0;
    const double a = std::exp(-1.0 / (2.0 - r));
    const double b = std::exp(-1.0 / (r - 1.0));
    return a / (a + b);
}

inline double dyadic_s(double absm, int q) {
    // s_q = chi(|m| / 2^q); q = -1 uses chi(2|m|)
    return smooth_step_chi(absm * std::ldexp(1.0, -q));
}

inline double mode_abs(const int* m, int d) {
    double s = 0.0;
    for (int a = 0; a < d; ++a) s += double(m[a]) * double(m[a]);
    return std::sqrt(s);
}

inline int nyquist_zeroed(int ma, int N) { return (ma == N / 2 || ma == -N / 2) ? 0 : ma; }

}  // namespace detail

// Littlewood-Paley block symbol at integer-mode radius |m| (frozen dyadic
// partition: sum_{q >= -1} lp_symbol(q, |m|) = 1 pointwise).
inline double lp_symbol(int q, double absm) {
    if (q < -1) throw std::invalid_argument("lp_symbol: q >= -1");
    if (q == -1) return detail::dyadic_s(absm, -1);
    return detail::dyadic_s(absm, q) - detail::dyadic_s(absm, q - 1);
}

inline double wavenumber_leq_symbol(double ell, double absm) {
    if (ell < 1.0) throw std::invalid_argument("wavenumber cutoff: ell >= 1");
    const int Q = static_cast<int>(std::floor(std::log2(ell)));
    return detail::dyadic_s(absm, Q);
}

inline std::complex<double> multiplier_symbol(const Multiplier& mult, const int* m,
                                              const TorusGrid& g) {
    using detail::two_pi;
    const double absm = detail::mode_abs(m, g.d);
    switch (mult.kind) {
        case MultiplierKind::partial: {
            const int mj = detail::nyquist_zeroed(m[mult.axis], g.N);
            return {0.0, two_pi * mj};
        }
        case MultiplierKind::laplacian:
            return {-(two_pi * absm) * (two_pi * absm), 0.0};
        case MultiplierKind::inv_laplacian:
            if (absm == 0.0) return {0.0, 0.0};
            return {-1.0 / ((two_pi * absm) * (two_pi * absm)), 0.0};
        case MultiplierKind::frac_power:
            if (absm == 0.0) return {0.0, 0.0};
            return {std::pow(two_pi * absm, mult.s), 0.0};
        case MultiplierKind::riesz: {
            if (absm == 0.0) return {0.0, 0.0};
            const int mj = detail::nyquist_zeroed(m[mult.axis], g.N);
            return {0.0, mj / absm};
        }
        case MultiplierKind::lp_block:
            return {lp_symbol(mult.q, absm), 0.0};
        case MultiplierKind::wavenumber_leq:
            return {wavenumber_leq_symbol(mult.ell, absm), 0.0};
        case MultiplierKind::wavenumber_geq:
            return {1.0 - wavenumber_leq_symbol(mult.ell, absm), 0.0};
    }
    return {0.0, 0.0};
}

namespace detail {

inline void require_zero_mean(const SpectralField& F, const Multiplier& m) {
    if (!m.singular() || m.drop_mean) return;
    double l2sq = 0.0;
    for_each_mode(F.grid, [&](std::size_t i, const int* mm) {
        l2sq += mode_weight(F.grid, mm) * std::norm(F.c[i]);
    });
    const double mean_mag = std::abs(F.c[0]);
    if (mean_mag > 1e-12 * std::sqrt(l2sq)) {
        throw std::domain_error(
            "apply_multiplier: singular symbol on non-zero-mean field "
            "(mean coefficient " + std::to_string(mean_mag) + "); set drop_mean to override");
    }
}

}  // namespace detail

inline void apply_multiplier_inplace(SpectralField& F, const Multiplier& m) {
    detail::require_zero_mean(F, m);
    for_each_mode(F.grid, [&](std::size_t i, const int* mm) {
        F.c[i] *= multiplier_symbol(m, mm, F.grid);
    });
}

inline ScalarField apply_multiplier(const ScalarField& f, const Multiplier& m) {
    SpectralField F = to_spectral(f);
    apply_multiplier_inplace(F, m);
    return to_physical(std::move(F));
}

// ---- composite operators -------------------------------------------------

inline ScalarField partial(const ScalarField& f, int j) {
    return apply_multiplier(f, Multiplier::partial_j(j));
}

inline VectorField gradient(const ScalarField& f) {
    const TorusGrid& g = f.grid;
    VectorField out(g);
    SpectralField F = to_spectral(f);
    for (int j = 0; j < g.d; ++j) {
        SpectralField Fj = F;
        apply_multiplier_inplace(Fj, Multiplier::partial_j(j));
        out[j] = to_physical(std::move(Fj));
    }
    return out;
}

inline ScalarField divergence(const VectorField& w) {
    const TorusGrid& g = w.grid;
    SpectralField acc(g);
    for (int j = 0; j < g.d; ++j) {
        SpectralField Fj = to_spectral(w[j]);
        apply_multiplier_inplace(Fj, Multiplier::partial_j(j));
        for (std::size_t i = 0; i < acc.c.size(); ++i) acc.c[i] += Fj.c[i];
    }
    return to_physical(std::move(acc));
}

// Row divergence (div T)_i = sum_j d_j T_ij of a symmetric tensor field.
inline VectorField divergence(const SymTensorField& T) {
    const TorusGrid& g = T.grid;
    std::vector<SpectralField> acc;
    acc.reserve(g.d);
    for (int i = 0; i < g.d; ++i) acc.emplace_back(g);
    for (int i = 0; i < g.d; ++i)
        for (int j = i; j < g.d; ++j) {
            SpectralField F = to_spectral(T.at(i, j));
            SpectralField Fi = (i == j) ? SpectralField(g) : F;
            apply_multiplier_inplace(F, Multiplier::partial_j(j));
            for (std::size_t t = 0; t < F.c.size(); ++t) acc[i].c[t] += F.c[t];
            if (i != j) {
                apply_multiplier_inplace(Fi, Multiplier::partial_j(i));
                for (std::size_t t = 0; t < Fi.c.size(); ++t) acc[j].c[t] += Fi.c[t];
            }
        }
    VectorField out(g);
    for (int i = 0; i < g.d; ++i) out[i] = to_physical(std::move(acc[i]));
    return out;
}

inline ScalarField laplacian(const ScalarField& f) {
    return apply_multiplier(f, Multiplier::laplacian());
}

inline VectorField laplacian(const VectorField& f) {
    VectorField out(f.grid);
    for (int j = 0; j < f.grid.d; ++j) out[j] = laplacian(f[j]);
    return out;
}

// Leray projection onto divergence-free fields: u - grad(inv_lap(div u)).
inline VectorField leray_project(const VectorField& u) {
    const TorusGrid& g = u.grid;
    SpectralField dv(g);
    std::vector<SpectralField> U;
    U.reserve(g.d);
    for (int j = 0; j < g.d; ++j) {
        U.push_back(to_spectral(u[j]));
        SpectralField Fj = U.back();
        apply_multiplier_inplace(Fj, Multiplier::partial_j(j));
        for (std::size_t t = 0; t < dv.c.size(); ++t) dv.c[t] += Fj.c[t];
    }
    apply_multiplier_inplace(dv, Multiplier::inv_laplacian(true));
    VectorField out(g);
    for (int j = 0; j < g.d; ++j) {
        SpectralField Gj = dv;
        apply_multiplier_inplace(Gj, Multiplier::partial_j(j));
        for (std::size_t t = 0; t < Gj.c.size(); ++t) Gj.c[t] = U[j].c[t] - Gj.c[t];
        out[j] = to_physical(std::move(Gj));
    }
    return out;
}

}  // namespace cit
