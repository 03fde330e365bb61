#pragma once

// Banded LU with partial pivoting (LAPACK gbtrf layout, row-wise) and a dense
// Gaussian-elimination oracle used to cross-check it on small systems.

#include "pdbc/banded_system.hpp"
#include "pdbc/errors.hpp"
#include "pdbc/method.hpp"
#include "pdbc/problem.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pdbc {

/// Nodal solution. `coords` holds x for every unknown, so the full extended
/// domain system also reports the fictitious nodes outside [0, 1].
struct SolutionVector {
    std::vector<double> coords;
    std::vector<double> values;
    MethodKind method = MethodKind::VHM;
    Discretization disc{2, 1};
};

namespace detail {

inline constexpr double pivot_tolerance = 1e-14;
inline constexpr int refinement_sweeps = 2;
inline constexpr double residual_tolerance = 1e-10;

// Rows are scaled by powers of two before elimination; this is exact and keeps
// rows of very different magnitude (identity rows next to kappa-sized rows) on
// a common footing.
inline double power_of_two_scale(double row_max)
{
    if (row_max == 0.0) {
        return 1.0;
    }
    int e = 0;
    std::frexp(row_max, &e);
    return std::ldexp(1.0, -(e - 1));
}

inline void check_residual(const BandedSystem& sys, std::span<const double> u)
{
    const auto au = sys.multiply(u);
    double res = 0.0;
    double unorm = 0.0;
    double bnorm = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (!std::isfinite(u[i])) {
            throw NumericalError("non-finite solution component at row " + std::to_string(i));
        }
        res = std::max(res, std::abs(au[i] - sys.rhs(i)));
        unorm = std::max(unorm, std::abs(u[i]));
        bnorm = std::max(bnorm, std::abs(sys.rhs(i)));
    }
    const double bound = residual_tolerance * (sys.norm_inf() * unorm + bnorm);
    if (!(res <= bound)) {
        throw NumericalError("residual check failed: |Au - b| = " + std::to_string(res) +
                             " exceeds " + std::to_string(bound));
    }
}

}  // namespace detail

/// LU factorisation of a banded matrix. Row interchanges widen the upper band
/// to ku + kl, so each row keeps a window of 2 kl + ku + 1 columns starting at
/// i - kl.
class BandedLU {
public:
    explicit BandedLU(const BandedSystem& sys)
        : n_(sys.size()), kl_(sys.lower_bw()), ku_(sys.upper_bw()), w_(2 * kl_ + ku_ + 1),
          lu_(n_ * w_, 0.0), scale_(n_, 1.0), piv_(n_, 0)
    {
        for (std::size_t i = 0; i < n_; ++i) {
            double row_max = 0.0;
            for (std::size_t j = sys.first_col(i); j < sys.end_col(i); ++j) {
                row_max = std::max(row_max, std::abs(sys(i, j)));
            }
            scale_[i] = detail::power_of_two_scale(row_max);
            for (std::size_t j = sys.first_col(i); j < sys.end_col(i); ++j) {
                at(i, j) = scale_[i] * sys(i, j);
            }
        }
        factor();
    }

    [[nodiscard]] std::vector<double> solve(std::span<const double> rhs) const
    {
        if (rhs.size() != n_) {
            throw ArgumentError("right-hand side length does not match system size");
        }
        std::vector<double> b(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            b[i] = scale_[i] * rhs[i];
        }
        for (std::size_t k = 0; k < n_; ++k) {
            std::swap(b[k], b[piv_[k]]);
            const std::size_t last = std::min(n_ - 1, k + kl_);
            for (std::size_t i = k + 1; i <= last; ++i) {
                b[i] -= at(i, k) * b[k];
            }
        }
        for (std::size_t k = n_; k-- > 0;) {
            const std::size_t end = std::min(n_, k + ku_ + kl_ + 1);
            double acc = b[k];
            for (std::size_t j = k + 1; j < end; ++j) {
                acc -= at(k, j) * b[j];
            }
            b[k] = acc / at(k, k);
        }
        return b;
    }

private:
    double& at(std::size_t i, std::size_t j) { return lu_[i * w_ + (j + kl_ - i)]; }
    [[nodiscard]] double at(std::size_t i, std::size_t j) const { return lu_[i * w_ + (j + kl_ - i)]; }

    [[nodiscard]] double scaled_norm_inf() const
    {
        double best = 0.0;
        for (std::size_t i = 0; i < n_; ++i) {
            double row = 0.0;
            for (std::size_t k = 0; k < w_; ++k) {
                row += std::abs(lu_[i * w_ + k]);
            }
            best = std::max(best, row);
        }
        return best;
    }

    void factor()
    {
        const double tiny = detail::pivot_tolerance * scaled_norm_inf();
        for (std::size_t k = 0; k < n_; ++k) {
            const std::size_t last = std::min(n_ - 1, k + kl_);
            const std::size_t end = std::min(n_, k + ku_ + kl_ + 1);

            std::size_t p = k;
            double best = std::abs(at(k, k));
            for (std::size_t i = k + 1; i <= last; ++i) {
                if (std::abs(at(i, k)) > best) {
                    best = std::abs(at(i, k));
                    p = i;
                }
            }
            if (!(best > tiny)) {
                throw SingularMatrixError(k);
            }
            piv_[k] = p;
            if (p != k) {
                for (std::size_t j = k; j < end; ++j) {
                    std::swap(at(k, j), at(p, j));
                }
            }
            const double pivot = at(k, k);
            for (std::size_t i = k + 1; i <= last; ++i) {
                const double l = at(i, k) / pivot;
                at(i, k) = l;
                if (l == 0.0) {
                    continue;
                }
                for (std::size_t j = k + 1; j < end; ++j) {
                    at(i, j) -= l * at(k, j);
                }
            }
        }
    }

    std::size_t n_;
    std::size_t kl_;
    std::size_t ku_;
    std::size_t w_;
    std::vector<double> lu_;
    std::vector<double> scale_;
    std::vector<std::size_t> piv_;
};

/// Solves the banded system and verifies the residual.
inline std::vector<double> banded_lu_solve(const BandedSystem& sys)
{
    const BandedLU lu(sys);
    auto u = lu.solve(sys.rhs());
    // The stiffness rows grow like 1/h^2, so roundoff in u grows like n^2 eps.
    // Two refinement sweeps with an extended-precision residual recover it.
    std::vector<double> r(u.size());
    for (int sweep = 0; sweep < detail::refinement_sweeps; ++sweep) {
        for (std::size_t i = 0; i < u.size(); ++i) {
            long double acc = sys.rhs(i);
            for (std::size_t j = sys.first_col(i); j < sys.end_col(i); ++j) {
                acc -= static_cast<long double>(sys(i, j)) * u[j];
            }
            r[i] = static_cast<double>(acc);
        }
        const auto d = lu.solve(r);
        for (std::size_t i = 0; i < u.size(); ++i) {
            u[i] += d[i];
        }
    }
    detail::check_residual(sys, u);
    return u;
}

inline constexpr std::size_t dense_oracle_max_size = 2048;

/// Dense Gaussian elimination with partial pivoting on the same system.
inline std::vector<double> dense_solve_oracle(const BandedSystem& sys)
{
    const std::size_t n = sys.size();
    if (n > dense_oracle_max_size) {
        throw ArgumentError("dense oracle limited to " + std::to_string(dense_oracle_max_size) + " unknowns");
    }
    auto a = sys.to_dense();
    std::vector<double> b(sys.rhs().begin(), sys.rhs().end());
    // Same exact power-of-two row equilibration as the banded solver.
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row_max = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            row_max = std::max(row_max, std::abs(a[i * n + j]));
        }
        const double sc = detail::power_of_two_scale(row_max);
        double row_sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            a[i * n + j] *= sc;
            row_sum += std::abs(a[i * n + j]);
        }
        b[i] *= sc;
        norm = std::max(norm, row_sum);
    }
    const double tiny = detail::pivot_tolerance * norm;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(a[i * n + k]) > std::abs(a[p * n + k])) {
                p = i;
            }
        }
        if (!(std::abs(a[p * n + k]) > tiny)) {
            throw SingularMatrixError(k);
        }
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a[k * n + j], a[p * n + j]);
            }
            std::swap(b[k], b[p]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const double l = a[i * n + k] / a[k * n + k];
            if (l == 0.0) {
                continue;
            }
            for (std::size_t j = k; j < n; ++j) {
                a[i * n + j] -= l * a[k * n + j];
            }
            b[i] -= l * b[k];
        }
    }
    std::vector<double> u(n);
    for (std::size_t k = n; k-- > 0;) {
        double acc = b[k];
        for (std::size_t j = k + 1; j < n; ++j) {
            acc -= a[k * n + j] * u[j];
        }
        u[k] = acc / a[k * n + k];
    }
    detail::check_residual(sys, u);
    return u;
}

/// Nodal coordinates for every unknown of `sys` (x = (r + offset) h).
inline std::vector<double> unknown_coordinates(const BandedSystem& sys, const Discretization& disc)
{
    std::vector<double> x(sys.size());
    for (std::size_t r = 0; r < sys.size(); ++r) {
        x[r] = static_cast<double>(static_cast<int>(r) + sys.index_offset()) * disc.h();
    }
    return x;
}

/// Wraps solved values with their coordinates.
inline SolutionVector make_solution(const BandedSystem& sys, const Discretization& disc, MethodKind method,
                                    std::vector<double> values)
{
    return SolutionVector{unknown_coordinates(sys, disc), std::move(values), method, disc};
}

}  // namespace pdbc
