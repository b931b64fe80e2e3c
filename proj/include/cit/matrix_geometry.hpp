// Geometric decomposition of symmetric matrices near the identity:
// a lattice direction set K with smooth positive coefficients Gamma_k on the
// Frobenius ball B = { R : |Id - R|_F <= 1/2 } satisfying
//     R = sum_k Gamma_k(R)^2  k (x) k .
//
// Realization: Gamma_k(R)^2 is the entropic (log-barrier) allocation
//     gamma(R) = argmax { sum_k log gamma_k : sum_k gamma_k k(x)k = R },
// characterized by gamma_k = 1 / <Lambda, k(x)k> for a symmetric dual
// multiplier Lambda(R), found by Newton iteration. At R = Id the allocation
// is exactly the base coefficients (1/4 and 1/8 for d = 4). Existence of a
// strictly positive allocation on all of B is certified at build time by an
// exact rational diagonal-dominance bound, so the barrier optimum is interior
// and Gamma_k > 0 everywhere on B. The dual_map field is the exact-rational
// derivative of the allocation at Id (a weighted right inverse of
// gamma -> sum_k gamma_k k(x)k).
#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cit/exact_linalg.hpp"

namespace cit {

// Packed symmetric storage: pairs (a, b), a <= b, lexicographic.
inline int sym_pairs(int d) { return d * (d + 1) / 2; }

struct DirectionSet {
    int d = 0;
    int npairs = 0;                       // d(d+1)/2
    std::vector<std::vector<int>> K;      // lattice directions, |K| = d^2
    int lambda0_sq = 2;                   // max |k|^2 over K
    std::vector<Rational> base_coeffs;    // c_k, sum c_k k(x)k = Id exactly
    std::vector<double> base_coeffs_d;
    RationalMatrix dual_map;              // |K| x npairs, d(gamma)/dR at Id
    Rational dominance_margin;            // 1 - max row load over B, > 0

    // doubles for the Newton path: per direction, packed k(x)k and the
    // quadratic-form weights (2 - delta_ab) k_a k_b
    std::vector<std::vector<double>> kk_packed;
    std::vector<std::vector<double>> kk_weighted;
};

namespace detail {

inline void sym_pair_of(int d, int t, int& a, int& b) {
    for (a = 0; a < d; ++a) {
        const int row = d - a;
        if (t < row) {
            b = a + t;
            return;
        }
        t -= row;
    }
    throw std::logic_error("sym_pair_of: index out of range");
}

// G(X) = sum_k w_k <X, kk>_F kk as a packed rational matrix, w_k = c_k^2.
inline RationalMatrix weighted_gram(const DirectionSet& ds) {
    const int D = ds.npairs;
    RationalMatrix G(D, D);
    for (std::size_t kk = 0; kk < ds.K.size(); ++kk) {
        const auto& k = ds.K[kk];
        const Rational w = ds.base_coeffs[kk] * ds.base_coeffs[kk];
        for (int s = 0; s < D; ++s) {
            int a, b;
            sym_pair_of(ds.d, s, a, b);
            const int kab = k[a] * k[b];
            if (kab == 0) continue;
            for (int t = 0; t < D; ++t) {
                int c, e;
                sym_pair_of(ds.d, t, c, e);
                const int wce = (c == e ? 1 : 2) * k[c] * k[e];
                if (wce == 0) continue;
                G.at(s, t) += w * kab * wce;
            }
        }
    }
    return G;
}

}  // namespace detail

inline DirectionSet build_direction_set(int d) {
    if (d < 2) throw std::invalid_argument("build_direction_set: d >= 2");
    DirectionSet ds;
    ds.d = d;
    ds.npairs = sym_pairs(d);

    for (int i = 0; i < d; ++i) {
        std::vector<int> k(d, 0);
        k[i] = 1;
        ds.K.push_back(k);
    }
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int s : {1, -1}) {
                std::vector<int> k(d, 0);
                k[i] = 1;
                k[j] = s;
                ds.K.push_back(k);
            }

    // base coefficients: c' = 1/8 up to d = 4, then scaled to keep the axis
    // coefficient positive; diagonal identity c_e + 2(d-1) c' = 1
    const Rational cp = (d <= 4) ? Rational(1, 8) : Rational(1, 4 * (d - 1));
    const Rational ce = 1 - Rational(2 * (d - 1)) * cp;
    if (ce <= 0) throw std::logic_error("build_direction_set: axis coefficient not positive");
    for (const auto& k : ds.K) {
        int norm_sq = 0;
        for (int a = 0; a < d; ++a) norm_sq += k[a] * k[a];
        ds.base_coeffs.push_back(norm_sq == 1 ? ce : cp);
    }
    for (const auto& c : ds.base_coeffs) ds.base_coeffs_d.push_back(to_double(c));

    // exact identity check: sum c_k k(x)k = Id
    for (int a = 0; a < d; ++a)
        for (int b = a; b < d; ++b) {
            Rational s = 0;
            for (std::size_t kk = 0; kk < ds.K.size(); ++kk)
                s += ds.base_coeffs[kk] * ds.K[kk][a] * ds.K[kk][b];
            if (s != (a == b ? 1 : 0))
                throw std::logic_error("build_direction_set: base identity failed");
        }

    // exact rank check: {k(x)k} spans the symmetric matrices
    {
        RationalMatrix A(ds.npairs, static_cast<int>(ds.K.size()));
        for (int s = 0; s < ds.npairs; ++s) {
            int a, b;
            detail::sym_pair_of(d, s, a, b);
            for (std::size_t kk = 0; kk < ds.K.size(); ++kk)
                A.at(s, static_cast<int>(kk)) = ds.K[kk][a] * ds.K[kk][b];
        }
        if (rational_rank(A) != ds.npairs)
            throw std::logic_error("build_direction_set: directions do not span");
    }

    // interior-witness certificate: over |M|_F <= 1/2 the worst row load
    // max(|M_aa| + sum_{b != a} |M_ab|) squares to (1 + (d-1)/2)/4, which must
    // stay below 1 for the diagonally-dominant witness allocation to exist.
    // Stored on the squared scale; positive for d <= 6. gamma() refuses to
    // run without a positive margin.
    ds.dominance_margin = 1 - (Rational(1) + Rational(d - 1, 2)) / 4;

    // dual map at Id: solve G(X) = E_s for each packed basis direction,
    // dual(M)_k = c_k^2 <X(M), k(x)k>
    {
        const int D = ds.npairs;
        RationalMatrix G = detail::weighted_gram(ds);
        ds.dual_map = RationalMatrix(static_cast<int>(ds.K.size()), D);
        for (int s = 0; s < D; ++s) {
            std::vector<Rational> rhs(D, Rational(0));
            rhs[s] = 1;
            std::vector<Rational> X = rational_solve(G, rhs);
            for (std::size_t kk = 0; kk < ds.K.size(); ++kk) {
                const auto& k = ds.K[kk];
                Rational acc = 0;
                for (int t = 0; t < D; ++t) {
                    int a, b;
                    detail::sym_pair_of(d, t, a, b);
                    acc += Rational((a == b ? 1 : 2) * k[a] * k[b]) * X[t];
                }
                ds.dual_map.at(static_cast<int>(kk), s) =
                    ds.base_coeffs[kk] * ds.base_coeffs[kk] * acc;
            }
        }
    }

    for (const auto& k : ds.K) {
        std::vector<double> pk(ds.npairs), wk(ds.npairs);
        for (int t = 0; t < ds.npairs; ++t) {
            int a, b;
            detail::sym_pair_of(d, t, a, b);
            pk[t] = double(k[a]) * double(k[b]);
            wk[t] = (a == b ? 1.0 : 2.0) * pk[t];
        }
        ds.kk_packed.push_back(pk);
        ds.kk_weighted.push_back(wk);
    }
    return ds;
}

// Frobenius distance |Id - R|_F from packed R.
inline double ball_distance(const std::vector<double>& R_packed, int d) {
    double s = 0.0;
    int t = 0;
    for (int a = 0; a < d; ++a)
        for (int b = a; b < d; ++b, ++t) {
            const double m = R_packed[t] - (a == b ? 1.0 : 0.0);
            s += (a == b ? 1.0 : 2.0) * m * m;
        }
    return std::sqrt(s);
}

// Newton solver for the dual multiplier; reusable and warm-startable so field
// sweeps pay a couple of iterations per grid point.
class GammaSolver {
  public:
    explicit GammaSolver(const DirectionSet& ds)
        : ds_(ds), D_(ds.npairs), m_(static_cast<int>(ds.K.size())) {
        lambda_.assign(D_, 0.0);
        cold_start();
        H_.assign(std::size_t(D_) * D_, 0.0);
        rhs_.assign(D_, 0.0);
        s_.assign(m_, 0.0);
        gamma_.assign(m_, 0.0);
    }

    // gamma_k = Gamma_k^2 with sum gamma_k k(x)k = R (packed, a <= b).
    // R must lie in the Frobenius ball of radius 1/2 about Id.
    const std::vector<double>& solve(const std::vector<double>& R_packed) {
        if (!(ds_.dominance_margin > 0))
            throw std::domain_error(
                "gamma: positivity certificate unavailable for d = " + std::to_string(ds_.d));
        const double dist = ball_distance(R_packed, ds_.d);
        if (dist > 0.5 + 1e-12)
            throw std::domain_error("gamma: |Id - R|_F = " + std::to_string(dist) +
                                    " outside the admissible ball of radius 1/2");
        if (!newton(R_packed)) {
            cold_start();
            if (!newton(R_packed))
                throw std::runtime_error("gamma: dual Newton failed to converge");
        }
        for (int k = 0; k < m_; ++k) gamma_[k] = 1.0 / s_[k];
        return gamma_;
    }

    // d(Gamma_k)/dR_t for the packed symmetric directions (diagonal entries,
    // and symmetric off-diagonal pairs E_ab + E_ba). Call after solve().
    std::vector<std::vector<double>> gamma_sqrt_gradient() {
        build_hessian();
        std::vector<std::vector<double>> grad(m_, std::vector<double>(D_, 0.0));
        std::vector<double> H = H_;  // factor a copy
        std::vector<int> piv;
        lu_factor(H, piv);
        for (int t = 0; t < D_; ++t) {
            std::vector<double> e(D_, 0.0);
            int a, b;
            detail::sym_pair_of(ds_.d, t, a, b);
            e[t] = 1.0;
            lu_solve(H, piv, e);  // X with H(X) = E_t ; Lambda-dot = -X
            for (int k = 0; k < m_; ++k) {
                double sdot = 0.0;
                for (int u = 0; u < D_; ++u) sdot += ds_.kk_weighted[k][u] * (-e[u]);
                // Gamma = s^{-1/2}: dGamma = -(1/2) s^{-3/2} sdot
                grad[k][t] = -0.5 * std::pow(s_[k], -1.5) * sdot;
            }
        }
        return grad;
    }

    void cold_start() {
        // Lambda = 4 Id is exact at R = Id for d = 4 and a valid interior
        // start in general
        std::fill(lambda_.begin(), lambda_.end(), 0.0);
        int t = 0;
        for (int a = 0; a < ds_.d; ++a)
            for (int b = a; b < ds_.d; ++b, ++t)
                if (a == b) lambda_[t] = 4.0;
        hot_ = false;
    }

  private:
    bool newton(const std::vector<double>& R_packed) {
        double scale = 1.0;
        for (double v : R_packed) scale = std::max(scale, std::fabs(v));
        for (int it = 0; it < 80; ++it) {
            if (!eval_s()) return false;
            // residual F = sum (1/s_k) kk - R
            std::fill(rhs_.begin(), rhs_.end(), 0.0);
            for (int k = 0; k < m_; ++k) {
                const double g = 1.0 / s_[k];
                for (int t = 0; t < D_; ++t) rhs_[t] += g * ds_.kk_packed[k][t];
            }
            double fmax = 0.0;
            for (int t = 0; t < D_; ++t) {
                rhs_[t] -= R_packed[t];
                fmax = std::max(fmax, std::fabs(rhs_[t]));
            }
            if (fmax <= 1e-14 * scale) {
                hot_ = true;
                return true;
            }
            build_hessian();
            std::vector<int> piv;
            lu_factor(H_, piv);
            lu_solve(H_, piv, rhs_);  // dLambda
            double alpha = 1.0;
            for (int ls = 0; ls < 50; ++ls) {
                bool ok = true;
                for (int k = 0; k < m_ && ok; ++k) {
                    double snew = 0.0;
                    for (int t = 0; t < D_; ++t)
                        snew += ds_.kk_weighted[k][t] * (lambda_[t] + alpha * rhs_[t]);
                    ok = snew > 1e-12;
                }
                if (ok) break;
                alpha *= 0.5;
            }
            for (int t = 0; t < D_; ++t) lambda_[t] += alpha * rhs_[t];
        }
        return false;
    }

    bool eval_s() {
        for (int k = 0; k < m_; ++k) {
            double s = 0.0;
            for (int t = 0; t < D_; ++t) s += ds_.kk_weighted[k][t] * lambda_[t];
            if (!(s > 0.0)) return false;
            s_[k] = s;
        }
        return true;
    }

    void build_hessian() {
        std::fill(H_.begin(), H_.end(), 0.0);
        for (int k = 0; k < m_; ++k) {
            const double w = 1.0 / (s_[k] * s_[k]);
            for (int t = 0; t < D_; ++t) {
                const double av = w * ds_.kk_packed[k][t];
                if (av == 0.0) continue;
                for (int u = 0; u < D_; ++u)
                    H_[std::size_t(t) * D_ + u] += av * ds_.kk_weighted[k][u];
            }
        }
    }

    static void lu_factor(std::vector<double>& A, std::vector<int>& piv) {
        const int n = static_cast<int>(std::sqrt(double(A.size())) + 0.5);
        piv.resize(n);
        for (int c = 0; c < n; ++c) {
            int p = c;
            for (int r = c + 1; r < n; ++r)
                if (std::fabs(A[std::size_t(r) * n + c]) > std::fabs(A[std::size_t(p) * n + c]))
                    p = r;
            piv[c] = p;
            if (p != c)
                for (int j = 0; j < n; ++j) std::swap(A[std::size_t(p) * n + j], A[std::size_t(c) * n + j]);
            const double d = A[std::size_t(c) * n + c];
            for (int r = c + 1; r < n; ++r) {
                const double f = A[std::size_t(r) * n + c] / d;
                A[std::size_t(r) * n + c] = f;
                for (int j = c + 1; j < n; ++j) A[std::size_t(r) * n + j] -= f * A[std::size_t(c) * n + j];
            }
        }
    }

    static void lu_solve(const std::vector<double>& A, const std::vector<int>& piv,
                         std::vector<double>& b) {
        const int n = static_cast<int>(b.size());
        for (int c = 0; c < n; ++c) {
            if (piv[c] != c) std::swap(b[piv[c]], b[c]);
            for (int r = c + 1; r < n; ++r) b[r] -= A[std::size_t(r) * n + c] * b[c];
        }
        for (int r = n - 1; r >= 0; --r) {
            for (int j = r + 1; j < n; ++j) b[r] -= A[std::size_t(r) * n + j] * b[j];
            b[r] /= A[std::size_t(r) * n + r];
        }
    }

    const DirectionSet& ds_;
    int D_, m_;
    bool hot_ = false;
    std::vector<double> lambda_, H_, rhs_, s_, gamma_;
};

// One-shot evaluation: map k -> Gamma_k(R) >= 0.
inline std::vector<double> gamma_coefficients(const DirectionSet& ds,
                                              const std::vector<double>& R_packed) {
    GammaSolver solver(ds);
    std::vector<double> out = solver.solve(R_packed);
    for (auto& v : out) v = std::sqrt(v);
    return out;
}

}  // namespace cit
