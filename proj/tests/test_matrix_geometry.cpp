// Direction-set construction and the Gamma_k decomposition on the Frobenius
// ball of radius 1/2 about the identity.
#include <gtest/gtest.h>

#include <cmath>

#include "cit/matrix_geometry.hpp"
#include "cit/rng.hpp"

using namespace cit;

namespace {

// uniform sample from the Frobenius ball |M|_F <= r about 0, packed symmetric
std::vector<double> random_ball_packed(int d, double r, std::uint64_t seed, std::uint64_t tag) {
    const int D = sym_pairs(d);
    std::vector<double> m(D);
    // isotropic direction via Box-Muller on keyed uniforms, in the isometric
    // coordinates (off-diagonals carry weight sqrt(2))
    double norm_sq = 0.0;
    for (int t = 0; t < D; ++t) {
        const double u1 = uniform01(splitmix64(seed ^ (tag * 1315423911u + 2 * t)));
        const double u2 = uniform01(splitmix64(seed ^ (tag * 2654435761u + 2 * t + 1)));
        const double g = std::sqrt(-2.0 * std::log(std::max(u1, 1e-300))) *
                         std::cos(2.0 * 3.14159265358979323846 * u2);
        m[t] = g;
        norm_sq += g * g;
    }
    const double u = uniform01(splitmix64(seed ^ (tag * 97531u + 777u)));
    const double radius = r * std::pow(u, 1.0 / D);
    const double scale = radius / std::sqrt(norm_sq);
    // scale in isometric coords, then convert back to entry values
    int t = 0;
    for (int a = 0; a < d; ++a)
        for (int b = a; b < d; ++b, ++t) m[t] *= scale * (a == b ? 1.0 : 1.0 / std::sqrt(2.0));
    return m;
}

std::vector<double> id_plus(int d, const std::vector<double>& m) {
    std::vector<double> r = m;
    int t = 0;
    for (int a = 0; a < d; ++a)
        for (int b = a; b < d; ++b, ++t)
            if (a == b) r[t] += 1.0;
    return r;
}

double reconstruction_residual(const DirectionSet& ds, const std::vector<double>& gamma_sq,
                               const std::vector<double>& R_packed) {
    double worst = 0.0;
    for (int t = 0; t < ds.npairs; ++t) {
        double s = 0.0;
        for (std::size_t k = 0; k < ds.K.size(); ++k) s += gamma_sq[k] * ds.kk_packed[k][t];
        worst = std::max(worst, std::fabs(s - R_packed[t]));
    }
    return worst;
}

}  // namespace

TEST(DirectionSet, BaseCoefficientsD4) {
    DirectionSet ds = build_direction_set(4);
    EXPECT_EQ(ds.K.size(), 16u);  // d^2
    EXPECT_EQ(ds.lambda0_sq, 2);
    for (std::size_t k = 0; k < ds.K.size(); ++k) {
        int norm_sq = 0;
        for (int a = 0; a < 4; ++a) norm_sq += ds.K[k][a] * ds.K[k][a];
        if (norm_sq == 1)
            EXPECT_EQ(ds.base_coeffs[k], Rational(1, 4));
        else
            EXPECT_EQ(ds.base_coeffs[k], Rational(1, 8));
    }
    // the identity sum is verified exactly inside build_direction_set; the
    // dominance certificate for the radius-1/2 ball must be positive
    EXPECT_GT(ds.dominance_margin, 0);
    EXPECT_EQ(ds.dominance_margin, Rational(3, 8));
}

TEST(DirectionSet, D2SolvableAndPositive) {
    DirectionSet ds = build_direction_set(2);
    EXPECT_EQ(ds.K.size(), 4u);
    // c + 2c' = 1 with both positive
    Rational c = ds.base_coeffs[0], cp = ds.base_coeffs[2];
    EXPECT_EQ(c + 2 * cp, Rational(1));
    EXPECT_GT(c, 0);
    EXPECT_GT(cp, 0);
}

TEST(DirectionSet, DualMapIsExactRightInverse) {
    for (int d : {2, 3, 4}) {
        DirectionSet ds = build_direction_set(d);
        const int D = ds.npairs;
        // sum_k dual(E_t)_k k(x)k = E_t for every packed basis direction
        for (int t = 0; t < D; ++t) {
            for (int s = 0; s < D; ++s) {
                Rational acc = 0;
                for (std::size_t k = 0; k < ds.K.size(); ++k) {
                    int a, b;
                    cit::detail::sym_pair_of(d, s, a, b);
                    acc += ds.dual_map.at(static_cast<int>(k), t) *
                           Rational(ds.K[k][a] * ds.K[k][b]);
                }
                EXPECT_EQ(acc, s == t ? Rational(1) : Rational(0))
                    << "d=" << d << " s=" << s << " t=" << t;
            }
        }
    }
}

TEST(Gamma, FrozenValuesAtIdentity) {
    DirectionSet ds = build_direction_set(4);
    std::vector<double> id = id_plus(4, std::vector<double>(ds.npairs, 0.0));
    std::vector<double> g = gamma_coefficients(ds, id);
    for (std::size_t k = 0; k < ds.K.size(); ++k) {
        int norm_sq = 0;
        for (int a = 0; a < 4; ++a) norm_sq += ds.K[k][a] * ds.K[k][a];
        const double want = (norm_sq == 1) ? 0.5 : std::sqrt(0.125);
        EXPECT_NEAR(g[k], want, 1e-13);
    }
}

TEST(Gamma, OffDiagonalExample) {
    DirectionSet ds = build_direction_set(4);
    std::vector<double> R = id_plus(4, std::vector<double>(ds.npairs, 0.0));
    R[SymTensorField::pair_index(4, 0, 1)] += 0.1;
    GammaSolver solver(ds);
    const auto& gsq = solver.solve(R);
    EXPECT_LT(reconstruction_residual(ds, gsq, R), 1e-12);
}

TEST(Gamma, DomainError) {
    DirectionSet ds = build_direction_set(4);
    std::vector<double> M(ds.npairs, 0.0);
    M[0] = 0.6;  // |Id - R|_F = 0.6
    GammaSolver solver(ds);
    EXPECT_THROW(solver.solve(id_plus(4, M)), std::domain_error);
}

TEST(Gamma, ReconstructionOnRandomBall) {
    DirectionSet ds = build_direction_set(4);
    GammaSolver solver(ds);
    double worst = 0.0, min_gamma_sq = 1.0, max_gamma = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        auto R = id_plus(4, random_ball_packed(4, 0.5, 2024, trial));
        const auto& gsq = solver.solve(R);
        worst = std::max(worst, reconstruction_residual(ds, gsq, R));
        for (double v : gsq) {
            min_gamma_sq = std::min(min_gamma_sq, v);
            max_gamma = std::max(max_gamma, std::sqrt(v));
        }
    }
    RecordProperty("worst_residual", worst);
    RecordProperty("min_radicand", min_gamma_sq);
    RecordProperty("max_gamma", max_gamma);
    EXPECT_LT(worst, 1e-12);
    EXPECT_GT(min_gamma_sq, 0.0);   // positivity on the sampled ball
    EXPECT_LE(max_gamma, 1.0);      // checked (not proved) bound by 1
}

TEST(Gamma, GradientMatchesFiniteDifferences) {
    DirectionSet ds = build_direction_set(4);
    GammaSolver solver(ds);
    const double h = 1e-6;
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        // interior points, radius <= 0.4 so FD stencils stay in the ball
        auto R = id_plus(4, random_ball_packed(4, 0.4, 515151, trial));
        solver.solve(R);
        auto grad = solver.gamma_sqrt_gradient();
        for (int t = 0; t < ds.npairs; ++t) {
            auto Rp = R, Rm = R;
            Rp[t] += h;
            Rm[t] -= h;
            auto gp = solver.solve(Rp);
            std::vector<double> gamma_p(gp.size());
            for (std::size_t k = 0; k < gp.size(); ++k) gamma_p[k] = std::sqrt(gp[k]);
            auto gm = solver.solve(Rm);
            for (std::size_t k = 0; k < gm.size(); ++k) {
                const double fd = (gamma_p[k] - std::sqrt(gm[k])) / (2.0 * h);
                worst = std::max(worst, std::fabs(fd - grad[k][t]));
            }
        }
    }
    RecordProperty("worst_gradient_error", worst);
    EXPECT_LT(worst, 1e-6);
}

TEST(Gamma, LinearizationAtIdMatchesDualMap) {
    // the analytic gradient of gamma^2 at Id equals the exact dual map
    DirectionSet ds = build_direction_set(3);
    GammaSolver solver(ds);
    std::vector<double> id = id_plus(3, std::vector<double>(ds.npairs, 0.0));
    solver.solve(id);
    auto grad = solver.gamma_sqrt_gradient();  // dGamma/dR
    for (std::size_t k = 0; k < ds.K.size(); ++k) {
        const double gk = std::sqrt(to_double(ds.base_coeffs[k]));
        for (int t = 0; t < ds.npairs; ++t) {
            // d(gamma)/dR = 2 Gamma dGamma/dR
            const double lin = 2.0 * gk * grad[k][t];
            EXPECT_NEAR(lin, to_double(ds.dual_map.at(static_cast<int>(k), t)), 1e-10);
        }
    }
}
