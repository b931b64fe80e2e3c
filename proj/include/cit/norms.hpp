// Lebesgue norms by uniform-grid quadrature (exact for band-limited
// integrands at p = 2), Parseval sums, and pointwise magnitude helpers.
#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "cit/spectral.hpp"

namespace cit {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

namespace detail {

template <typename AbsAt>
double lp_from_abs(std::size_t n, double p, AbsAt&& abs_at) {
    if (p < 1.0) throw std::invalid_argument("lp_norm: p >= 1 required");
    if (p == kInfinity) {
        double m = 0.0;
        for (std::size_t i = 0; i < n; ++i) m = std::max(m, abs_at(i));
        return m;
    }
    double s = 0.0;
    if (p == 1.0) {
        for (std::size_t i = 0; i < n; ++i) s += abs_at(i);
    } else if (p == 2.0) {
        for (std::size_t i = 0; i < n; ++i) {
            const double a = abs_at(i);
            s += a * a;
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) s += std::pow(abs_at(i), p);
    }
    s /= static_cast<double>(n);
    return (p == 1.0) ? s : (p == 2.0 ? std::sqrt(s) : std::pow(s, 1.0 / p));
}

}  // namespace detail

inline double lp_norm(const ScalarField& f, double p) {
    return detail::lp_from_abs(f.size(), p, [&](std::size_t i) { return std::fabs(f.v[i]); });
}

// |f(x)| is the Euclidean length of the vector value.
inline double lp_norm(const VectorField& f, double p) {
    const int d = f.grid.d;
    return detail::lp_from_abs(f.grid.point_count, p, [&](std::size_t i) {
        double s = 0.0;
        for (int a = 0; a < d; ++a) s += f[a].v[i] * f[a].v[i];
        return std::sqrt(s);
    });
}

// |T(x)| is the Frobenius norm (off-diagonal components counted twice).
inline double lp_norm(const SymTensorField& T, double p) {
    const int d = T.grid.d;
    return detail::lp_from_abs(T.grid.point_count, p, [&](std::size_t i) {
        double s = 0.0;
        for (int a = 0; a < d; ++a)
            for (int b = a; b < d; ++b) {
                const double v = T.at(a, b).v[i];
                s += (a == b ? 1.0 : 2.0) * v * v;
            }
        return std::sqrt(s);
    });
}

inline double parseval_l2sq(const SpectralField& F) {
    double s = 0.0;
    for_each_mode(F.grid, [&](std::size_t i, const int* m) {
        s += mode_weight(F.grid, m) * std::norm(F.c[i]);
    });
    return s;
}

// L2 norm of the spectral gradient, sum over components for vector fields.
inline double h1_seminorm(const ScalarField& f) {
    SpectralField F = to_spectral(f);
    double s = 0.0;
    for_each_mode(F.grid, [&](std::size_t i, const int* m) {
        double m2 = 0.0;
        for (int a = 0; a < F.grid.d; ++a) {
            const int ma = detail::nyquist_zeroed(m[a], F.grid.N);
            m2 += double(ma) * double(ma);
        }
        s += mode_weight(F.grid, m) * (detail::two_pi * detail::two_pi * m2) * std::norm(F.c[i]);
    });
    return std::sqrt(s);
}

inline double h1_seminorm(const VectorField& f) {
    double s = 0.0;
    for (const auto& c : f.comp) {
        const double t = h1_seminorm(c);
        s += t * t;
    }
    return std::sqrt(s);
}

}  // namespace cit
