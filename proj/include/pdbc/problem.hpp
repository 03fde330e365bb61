#pragma once

// Bar problem, grid and the catalog of manufactured solutions.
//
// The bar occupies [0, 1], is clamped at x = 0 and loaded by a traction g at
// x = 1:  -EA u'' = f_b,  u(0) = u0,  EA u'(1) = g.

#include "pdbc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

namespace pdbc {

enum class CaseKind { Linear, Quadratic, Cubic, Quartic, QuarticPD, Exponential };

/// Selects a manufactured solution. `epsilon` is only meaningful for Exponential.
class ManufacturedCase {
public:
    constexpr ManufacturedCase() = default;

    static ManufacturedCase linear() { return ManufacturedCase(CaseKind::Linear, 0.0); }
    static ManufacturedCase quadratic() { return ManufacturedCase(CaseKind::Quadratic, 0.0); }
    static ManufacturedCase cubic() { return ManufacturedCase(CaseKind::Cubic, 0.0); }
    static ManufacturedCase quartic() { return ManufacturedCase(CaseKind::Quartic, 0.0); }
    static ManufacturedCase quartic_pd() { return ManufacturedCase(CaseKind::QuarticPD, 0.0); }

    static ManufacturedCase exponential(double epsilon)
    {
        if (!(epsilon > 0.0 && epsilon < 1.0)) {
            throw ArgumentError("exponential case requires 0 < epsilon < 1");
        }
        return ManufacturedCase(CaseKind::Exponential, epsilon);
    }

    [[nodiscard]] constexpr CaseKind kind() const noexcept { return kind_; }
    [[nodiscard]] constexpr double epsilon() const noexcept { return epsilon_; }

    [[nodiscard]] constexpr bool is_polynomial() const noexcept
    {
        return kind_ != CaseKind::Exponential;
    }

    friend constexpr bool operator==(const ManufacturedCase&, const ManufacturedCase&) = default;

private:
    constexpr ManufacturedCase(CaseKind kind, double epsilon) : kind_(kind), epsilon_(epsilon) {}

    CaseKind kind_ = CaseKind::Quadratic;
    double epsilon_ = 0.0;
};

inline std::string_view to_string(CaseKind kind)
{
    switch (kind) {
        case CaseKind::Linear: return "linear";
        case CaseKind::Quadratic: return "quadratic";
        case CaseKind::Cubic: return "cubic";
        case CaseKind::Quartic: return "quartic";
        case CaseKind::QuarticPD: return "quartic-pd";
        case CaseKind::Exponential: return "exponential";
    }
    return "unknown";
}

/// Uniform grid x_i = i h on [0, 1] with horizon delta = m h.
class Discretization {
public:
    Discretization(int n, int m) : n_(n), m_(m)
    {
        if (m < 1) {
            throw ArgumentError("horizon ratio m must be >= 1");
        }
        if (n < 1) {
            throw ArgumentError("number of intervals n must be >= 1");
        }
        // Every interior node must see a horizon that stays inside [0, 1].
        if (n < 2 * m) {
            throw ArgumentError("n = " + std::to_string(n) + " too small for m = " + std::to_string(m) +
                                " (need n >= 2m)");
        }
        h_ = 1.0 / static_cast<double>(n);
        delta_ = static_cast<double>(m) * h_;
    }

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] int m() const noexcept { return m_; }
    [[nodiscard]] double h() const noexcept { return h_; }
    [[nodiscard]] double delta() const noexcept { return delta_; }

    [[nodiscard]] double x(int i) const noexcept { return static_cast<double>(i) * h_; }

    /// Distance from node i to the nearer end of the bar, in units of h.
    [[nodiscard]] int nodes_to_boundary(int i) const noexcept { return std::min(i, n_ - i); }

private:
    int n_;
    int m_;
    double h_ = 0.0;
    double delta_ = 0.0;
};

/// x_0 .. x_n.
inline std::vector<double> grid_points(const Discretization& disc)
{
    std::vector<double> x(static_cast<std::size_t>(disc.n()) + 1);
    for (int i = 0; i <= disc.n(); ++i) {
        x[static_cast<std::size_t>(i)] = disc.x(i);
    }
    return x;
}

/// Piecewise-linear variable horizon min(x, delta, 1 - x).
inline double vhm_local_horizon(double x, double delta)
{
    if (!(delta > 0.0)) {
        throw ArgumentError("horizon must be positive");
    }
    if (delta > 0.5) {
        throw ConfigurationError("variable horizon requires delta <= 1/2");
    }
    if (x < 0.0 || x > 1.0) {
        throw DomainError("local horizon evaluated outside [0, 1]");
    }
    return std::min({x, delta, 1.0 - x});
}

/// Material and loading description of the bar.
class BarProblem {
public:
    explicit BarProblem(ManufacturedCase manufactured, double modulus_area = 1.0, double traction_g = 1.0,
                        double dirichlet_u0 = 0.0)
        : case_(manufactured), modulus_area_(modulus_area), traction_g_(traction_g), dirichlet_u0_(dirichlet_u0)
    {
        if (!(modulus_area > 0.0)) {
            throw ArgumentError("modulus_area (EA) must be positive");
        }
    }

    [[nodiscard]] const ManufacturedCase& manufactured() const noexcept { return case_; }
    [[nodiscard]] double modulus_area() const noexcept { return modulus_area_; }
    [[nodiscard]] double traction_g() const noexcept { return traction_g_; }
    [[nodiscard]] double dirichlet_u0() const noexcept { return dirichlet_u0_; }

    /// Same problem with EA, g and (through EA) f_b multiplied by `factor`.
    [[nodiscard]] BarProblem scaled(double factor) const
    {
        return BarProblem(case_, modulus_area_ * factor, traction_g_ * factor, dirichlet_u0_);
    }

private:
    ManufacturedCase case_;
    double modulus_area_;
    double traction_g_;
    double dirichlet_u0_;
};

namespace detail {

inline void check_unit_interval(double x, const char* what)
{
    if (!(x >= 0.0 && x <= 1.0)) {
        throw DomainError(std::string(what) + " evaluated outside [0, 1]");
    }
}

// Written exactly like the numerator of the exact solution so that u(1) == 0.
inline double exp_denominator(double eps) { return 1.0 - std::exp(-1.0 / eps); }

}  // namespace detail

/// Body force density f_b(x). The polynomial loads are written for unit EA and
/// scale linearly with EA; QuarticPD needs the grid for its horizon.
inline double body_force(const BarProblem& p, const Discretization& disc, double x)
{
    detail::check_unit_interval(x, "body force");
    const double ea = p.modulus_area();
    switch (p.manufactured().kind()) {
        case CaseKind::Linear: return 0.0;
        case CaseKind::Quadratic: return ea;
        case CaseKind::Cubic: return ea * x;
        case CaseKind::Quartic: return ea * x * x;
        case CaseKind::QuarticPD: {
            const double dv = vhm_local_horizon(x, disc.delta());
            return ea * (x * x + dv * dv / 12.0);
        }
        case CaseKind::Exponential: {
            const double eps = p.manufactured().epsilon();
            return ea * std::exp(-(1.0 - x) / eps) / (eps * eps * detail::exp_denominator(eps));
        }
    }
    return 0.0;
}

/// Exact solution of the local problem. QuarticPD shares the quartic solution.
inline double exact_solution(const BarProblem& p, double x)
{
    detail::check_unit_interval(x, "exact solution");
    switch (p.manufactured().kind()) {
        case CaseKind::Linear: return p.dirichlet_u0() + p.traction_g() / p.modulus_area() * x;
        case CaseKind::Quadratic: return x * (4.0 - x) / 2.0;
        case CaseKind::Cubic: return x * (3.0 - x) * (3.0 + x) / 6.0;
        case CaseKind::Quartic:
        case CaseKind::QuarticPD: return x * (16.0 - x * x * x) / 12.0;
        case CaseKind::Exponential: {
            const double eps = p.manufactured().epsilon();
            const double num = std::exp(-(1.0 - x) / eps) - std::exp(-1.0 / eps);
            return x - num / detail::exp_denominator(eps);
        }
    }
    return 0.0;
}

/// Traction g = EA u'(1) applied at the right end.
inline double neumann_data(const BarProblem& p)
{
    if (p.manufactured().kind() == CaseKind::Exponential) {
        const double eps = p.manufactured().epsilon();
        return p.modulus_area() * (1.0 - 1.0 / (eps * detail::exp_denominator(eps)));
    }
    return p.traction_g();
}

}  // namespace pdbc
