#pragma once

// Discrete peridynamic kernel weights, material calibration, boundary
// correction factors and the one-sided Neumann difference.

#include "pdbc/errors.hpp"
#include "pdbc/problem.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace pdbc {

/// Trapezoidal quadrature of the bond integral  int (u(y) - u(x)) / |y - x| dy
/// over the nodes x + j h, |j| <= m. With the factor h absorbed into the
/// kernel 1/|j h| the operator reads  kappa * sum_j c_j (u_{i+j} - u_i)  with
///   c_j = 1/|j|       for 0 < |j| < m,
///   c_j = 1/(2|j|)    for |j| = m   (trapezoid end weight).
/// The singular node j = 0 contributes nothing.
class InteriorStencil {
public:
    explicit InteriorStencil(int m) : m_(m)
    {
        if (m < 1) {
            throw ArgumentError("stencil half-width m must be >= 1");
        }
        weights_.resize(static_cast<std::size_t>(m));
        for (int j = 1; j <= m; ++j) {
            const double w = (j < m) ? 1.0 : 0.5;
            weights_[static_cast<std::size_t>(j - 1)] = w / static_cast<double>(j);
            diagonal_ += 2.0 * weights_[static_cast<std::size_t>(j - 1)];
        }
    }

    [[nodiscard]] int m() const noexcept { return m_; }

    /// c_j for j in [-m, m] \ {0}; zero otherwise.
    [[nodiscard]] double coefficient(int j) const noexcept
    {
        const int a = std::abs(j);
        if (a == 0 || a > m_) {
            return 0.0;
        }
        return weights_[static_cast<std::size_t>(a - 1)];
    }

    /// sum_j c_j
    [[nodiscard]] double diagonal() const noexcept { return diagonal_; }

    /// sum_j c_j (values[center + j] - values[center]).
    template <class Container>
    [[nodiscard]] double apply(const Container& values, std::size_t center) const
    {
        double acc = 0.0;
        for (int j = 1; j <= m_; ++j) {
            const double c = weights_[static_cast<std::size_t>(j - 1)];
            acc += c * (values[center + static_cast<std::size_t>(j)] - values[center]);
            acc += c * (values[center - static_cast<std::size_t>(j)] - values[center]);
        }
        return acc;
    }

private:
    int m_;
    std::vector<double> weights_;
    double diagonal_ = 0.0;
};

inline InteriorStencil pd_interior_stencil(int m) { return InteriorStencil(m); }

/// kappa = 2 EA / delta^2, the bond stiffness matching the local model.
inline double calibrate_kappa(double modulus_area, double delta)
{
    if (!(modulus_area > 0.0) || !(delta > 0.0)) {
        throw ArgumentError("calibrate_kappa requires EA > 0 and delta > 0");
    }
    return 2.0 * modulus_area / (delta * delta);
}

struct MaterialScaling {
    double kappa;  ///< bond stiffness
    double alpha;  ///< kappa delta^2 / (16 h^2), coefficient of the m = 2 rows
    double beta;   ///< EA / (2 h^2), coefficient of the local finite-difference rows
};

inline MaterialScaling material_scaling(double modulus_area, const Discretization& disc)
{
    const double kappa = calibrate_kappa(modulus_area, disc.delta());
    const double h2 = disc.h() * disc.h();
    return MaterialScaling{
        kappa,
        kappa * disc.delta() * disc.delta() / (16.0 * h2),
        modulus_area / (2.0 * h2),
    };
}

/// Volume/energy correction kappa_bar(x) / kappa = 2 delta^2 / (delta^2 + x^2)
/// for a point at distance x <= delta from a free end.
inline double skin_correction_factor(double x, double delta)
{
    if (!(delta > 0.0)) {
        throw ArgumentError("horizon must be positive");
    }
    if (x < 0.0 || x > delta) {
        throw DomainError("skin correction defined for 0 <= x <= delta");
    }
    return 2.0 * delta * delta / (delta * delta + x * x);
}

/// Analytic EDM correction kappa_bar(x) / kappa = (4 s - (3 - 2 ln s) s^2)^{-1}
/// with s = x / delta, x the distance to the nearer boundary.
inline double edm_analytic_correction(double x, double delta)
{
    if (!(delta > 0.0)) {
        throw ArgumentError("horizon must be positive");
    }
    if (!(x > 0.0 && x < delta)) {
        throw DomainError("analytic EDM correction defined for 0 < x < delta");
    }
    const double s = x / delta;
    return 1.0 / (4.0 * s - (3.0 - 2.0 * std::log(s)) * s * s);
}

/// 8/7: restores the u'' coefficient of the reduced EDM rows next to the boundary.
constexpr double edm_numeric_correction() noexcept { return 8.0 / 7.0; }

/// Coefficients of (u_{n-2}, u_{n-1}, u_n) in the second-order left-sided u'(1).
inline std::array<double, 3> neumann_one_sided_row(double h)
{
    if (!(h > 0.0)) {
        throw ArgumentError("grid spacing must be positive");
    }
    const double two_h = 2.0 * h;
    return {1.0 / two_h, -4.0 / two_h, 3.0 / two_h};
}

}  // namespace pdbc
