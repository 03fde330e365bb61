#pragma once

// Error norms against the manufactured solution and observed convergence rates.

#include "pdbc/assembly.hpp"
#include "pdbc/errors.hpp"
#include "pdbc/linalg.hpp"
#include "pdbc/method.hpp"
#include "pdbc/problem.hpp"

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace pdbc {

/// Assembles and solves one configuration with the banded solver.
inline SolutionVector solve(const BarProblem& p, const Discretization& disc, const MethodSpec& spec)
{
    const BandedSystem sys = assemble(p, disc, spec);
    return make_solution(sys, disc, spec.kind, banded_lu_solve(sys));
}

struct PointError {
    double x;
    double error;  ///< exact - computed
};

struct ErrorReport {
    MethodKind method = MethodKind::VHM;
    int n = 0;
    int m = 0;
    double delta = 0.0;
    double h = 0.0;
    /// max_{i=1..n} |e_i / u(x_i)|; absent if some |u(x_i)| is below the division guard.
    std::optional<double> max_relative;
    /// Same quantity over the interior nodes i = 1..n-1 only.
    std::optional<double> max_relative_interior;
    double max_absolute = 0.0;  ///< max_{i=1..n} |e_i|
    std::vector<PointError> pointwise;  ///< i = 0..n
};

inline constexpr double relative_error_guard = 1e-14;

inline ErrorReport error_report(const SolutionVector& sol, const BarProblem& p)
{
    const Discretization& disc = sol.disc;
    const int n = disc.n();
    if (sol.values.size() != sol.coords.size()) {
        throw ArgumentError("solution values and coordinates differ in length");
    }
    // Physical node i sits at index i + first; the full extended system stores
    // its fictitious nodes in front.
    const std::size_t first = sol.values.size() - static_cast<std::size_t>(n) - 1;
    if (sol.values.size() < static_cast<std::size_t>(n) + 1 || (first % 2) != 0) {
        throw ArgumentError("solution does not cover the physical grid");
    }
    const std::size_t offset = first / 2;

    ErrorReport r;
    r.method = sol.method;
    r.n = n;
    r.m = disc.m();
    r.delta = disc.delta();
    r.h = disc.h();
    r.pointwise.reserve(static_cast<std::size_t>(n) + 1);

    double rel = 0.0;
    double rel_interior = 0.0;
    bool guarded = false;
    bool guarded_interior = false;
    for (int i = 0; i <= n; ++i) {
        const double x = disc.x(i);
        const double exact = exact_solution(p, x);
        const double e = exact - sol.values[offset + static_cast<std::size_t>(i)];
        r.pointwise.push_back({x, e});
        if (i == 0) {
            continue;
        }
        r.max_absolute = std::max(r.max_absolute, std::abs(e));
        if (std::abs(exact) < relative_error_guard) {
            guarded = true;
            guarded_interior = guarded_interior || i < n;
            continue;
        }
        const double q = std::abs(e / exact);
        rel = std::max(rel, q);
        if (i < n) {
            rel_interior = std::max(rel_interior, q);
        }
    }
    if (!guarded) {
        r.max_relative = rel;
    }
    if (!guarded_interior) {
        r.max_relative_interior = rel_interior;
    }
    return r;
}

struct Sample {
    double h;
    double error;
};

inline constexpr double exact_error_threshold = 1e-13;

/// log2(E_k / E_{k+1}) for successive halvings of h; nullopt marks a pair in
/// which one of the errors is at round-off level ("exact").
inline std::vector<std::optional<double>> observed_rates(std::span<const Sample> samples)
{
    if (samples.size() < 2) {
        throw ArgumentError("observed_rates needs at least two samples");
    }
    std::vector<std::optional<double>> rates;
    rates.reserve(samples.size() - 1);
    for (std::size_t k = 0; k + 1 < samples.size(); ++k) {
        const double ratio = samples[k].h / samples[k + 1].h;
        if (!(std::abs(ratio - 2.0) <= 1e-9)) {
            throw ArgumentError("observed_rates requires h to halve between samples");
        }
        const double a = samples[k].error;
        const double b = samples[k + 1].error;
        if (std::abs(a) < exact_error_threshold || std::abs(b) < exact_error_threshold) {
            rates.emplace_back(std::nullopt);
        } else {
            rates.emplace_back(std::log2(std::abs(a) / std::abs(b)));
        }
    }
    return rates;
}

}  // namespace pdbc
