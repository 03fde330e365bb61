#pragma once

// Assembly of the banded collocation systems of the local model (LLEM), the
// extended domain method (full and reduced, with optional corrections next to
// the boundary) and the variable horizon method.
//
// Every PD row is written as  -(PD operator)(u)(x_i) = f_b(x_i); the row for
// u_0 is the Dirichlet condition and the last physical row the Neumann
// condition EA u'(1) = g (or u(1) = u1 for a Dirichlet right end).

#include "pdbc/banded_system.hpp"
#include "pdbc/errors.hpp"
#include "pdbc/method.hpp"
#include "pdbc/problem.hpp"
#include "pdbc/stencils.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace pdbc {

namespace detail {

inline std::size_t idx(int i) { return static_cast<std::size_t>(i); }

inline void fill_body_force(BandedSystem& sys, const BarProblem& p, const Discretization& disc, int first_node,
                            int last_node, int row_offset)
{
    for (int i = first_node; i <= last_node; ++i) {
        sys.set_rhs(idx(i + row_offset), body_force(p, disc, disc.x(i)));
    }
}

inline void require_edm_grid(const Discretization& disc)
{
    if (disc.m() != 2) {
        throw ConfigurationError("extended domain method is only defined for m = 2 (got m = " +
                                 std::to_string(disc.m()) + ")");
    }
}

// EA (u_{n-2} - 4 u_{n-1} + 3 u_n) / (2h) = g, or u_n = u1.
inline void set_right_boundary_row(BandedSystem& sys, const BarProblem& p, const Discretization& disc,
                                   const RightBoundary& bc)
{
    const int n = disc.n();
    if (bc.is_dirichlet()) {
        sys.set(idx(n), idx(n), 1.0);
        sys.set_rhs(idx(n), bc.value);
        return;
    }
    const auto fd = neumann_one_sided_row(disc.h());
    const double ea = p.modulus_area();
    const std::array<double, 3> row{ea * fd[0], ea * fd[1], ea * fd[2]};
    sys.set_row(idx(n), idx(n - 2), row);
    sys.set_rhs(idx(n), neumann_data(p));
}

}  // namespace detail

/// Second-order finite differences of -EA u'' = f_b, beta = EA / (2 h^2).
inline BandedSystem assemble_llem(const BarProblem& p, const Discretization& disc,
                                  const RightBoundary& bc = RightBoundary::neumann())
{
    const int n = disc.n();
    const double beta = material_scaling(p.modulus_area(), disc).beta;
    BandedSystem sys(detail::idx(n) + 1, 2, 2);

    sys.set(0, 0, 1.0);
    sys.set_rhs(0, p.dirichlet_u0());

    const std::array<double, 3> row{-2.0 * beta, 4.0 * beta, -2.0 * beta};
    for (int i = 1; i < n; ++i) {
        sys.set_row(detail::idx(i), detail::idx(i - 1), row);
    }
    detail::fill_body_force(sys, p, disc, 1, n - 1, 0);
    detail::set_right_boundary_row(sys, p, disc, bc);
    return sys;
}

/// Extended domain system on u_{-2} .. u_{n+2} (m = 2), rows in the order
/// odd(-2), odd(-1), Dirichlet(0), PD rows 1..n-1, Neumann(n), odd(n+1), odd(n+2).
inline BandedSystem assemble_edm_full(const BarProblem& p, const Discretization& disc, const MethodSpec& spec)
{
    detail::require_edm_grid(disc);
    const int n = disc.n();
    const double alpha = material_scaling(p.modulus_area(), disc).alpha;
    const double h = disc.h();
    constexpr int shift = 2;  // matrix column of grid index i is i + 2
    BandedSystem sys(detail::idx(n) + 5, 4, 4, -shift);
    auto col = [&](int grid) { return detail::idx(grid + shift); };

    // u(-x) = 2 u(0) - u(x)
    sys.set_row(0, col(-2), std::array{1.0, 0.0, -2.0, 0.0, 1.0});
    sys.set_row(1, col(-1), std::array{1.0, -2.0, 1.0});
    sys.set(2, col(0), 1.0);
    sys.set_rhs(2, p.dirichlet_u0());

    const std::array<double, 5> pd_row{-alpha, -4.0 * alpha, 10.0 * alpha, -4.0 * alpha, -alpha};
    for (int i = 1; i < n; ++i) {
        sys.set_row(detail::idx(i + shift), col(i - 2), pd_row);
    }
    detail::fill_body_force(sys, p, disc, 1, n - 1, shift);

    const std::size_t neumann = detail::idx(n + shift);
    if (spec.right_bc.is_dirichlet()) {
        sys.set(neumann, col(n), 1.0);
        sys.set_rhs(neumann, spec.right_bc.value);
    } else {
        // Centered form of the one-sided difference, using the odd extension at x = 1.
        const double ah = alpha * h;
        sys.set_row(neumann, col(n - 2), std::array{2.0 * ah, -8.0 * ah, 0.0, 8.0 * ah, -2.0 * ah});
        sys.set_rhs(neumann, neumann_data(p));
    }

    // u(1 + x) = 2 u(1) - u(1 - x)
    sys.set_row(detail::idx(n + 3), col(n - 1), std::array{1.0, -2.0, 1.0});
    sys.set_row(detail::idx(n + 4), col(n - 2), std::array{1.0, 0.0, -2.0, 0.0, 1.0});
    return sys;
}

/// Extended domain system with the odd extensions eliminated, on u_0 .. u_n.
/// EdmI / EdmII scale the two rows next to the boundary by the analytic
/// correction at x_1 / delta = 1/2 or by 8/7; right-hand sides are unchanged.
inline BandedSystem assemble_edm_reduced(const BarProblem& p, const Discretization& disc, const MethodSpec& spec)
{
    detail::require_edm_grid(disc);
    const int n = disc.n();
    const double alpha = material_scaling(p.modulus_area(), disc).alpha;
    BandedSystem sys(detail::idx(n) + 1, 4, 4);

    double factor = 1.0;
    if (spec.kind == MethodKind::EdmI) {
        factor = edm_analytic_correction(disc.h(), disc.delta());
    } else if (spec.kind == MethodKind::EdmII) {
        factor = edm_numeric_correction();
    }

    sys.set(0, 0, 1.0);
    sys.set_rhs(0, p.dirichlet_u0());

    const double a = factor * alpha;
    sys.set_row(1, 0, std::array{-6.0 * a, 11.0 * a, -4.0 * a, -a});
    const std::array<double, 5> pd_row{-alpha, -4.0 * alpha, 10.0 * alpha, -4.0 * alpha, -alpha};
    for (int i = 2; i <= n - 2; ++i) {
        sys.set_row(detail::idx(i), detail::idx(i - 2), pd_row);
    }
    sys.set_row(detail::idx(n - 1), detail::idx(n - 3), std::array{-a, -4.0 * a, 11.0 * a, -6.0 * a});
    detail::fill_body_force(sys, p, disc, 1, n - 1, 0);

    detail::set_right_boundary_row(sys, p, disc, spec.right_bc);
    return sys;
}

/// Variable horizon system. Node i uses the local ratio m_i = min(i, m, n - i)
/// and the stencil of half-width m_i scaled by kappa delta^2 / delta_v(x_i)^2
/// = 2 EA / (m_i h)^2, so the u'' coefficient equals EA at every node.
inline BandedSystem assemble_vhm(const BarProblem& p, const Discretization& disc, const MethodSpec& spec)
{
    const int n = disc.n();
    const int m = disc.m();
    const double ea = p.modulus_area();
    const double h = disc.h();
    const auto bw = detail::idx(std::max(2, 2 * m));
    BandedSystem sys(detail::idx(n) + 1, bw, bw);

    sys.set(0, 0, 1.0);
    sys.set_rhs(0, p.dirichlet_u0());

    std::vector<InteriorStencil> stencils;
    stencils.reserve(detail::idx(m));
    for (int k = 1; k <= m; ++k) {
        stencils.emplace_back(k);
    }

    for (int i = 1; i < n; ++i) {
        const int mi = std::min(disc.nodes_to_boundary(i), m);
        if (mi < 1) {
            throw NumericalError("variable horizon vanished at interior node " + std::to_string(i));
        }
        const InteriorStencil& st = stencils[detail::idx(mi - 1)];
        const double local = static_cast<double>(mi) * h;
        const double scale = 2.0 * ea / (local * local);
        for (int j = 1; j <= mi; ++j) {
            sys.set(detail::idx(i), detail::idx(i - j), -scale * st.coefficient(j));
            sys.set(detail::idx(i), detail::idx(i + j), -scale * st.coefficient(j));
        }
        sys.set(detail::idx(i), detail::idx(i), scale * st.diagonal());
    }
    detail::fill_body_force(sys, p, disc, 1, n - 1, 0);
    detail::set_right_boundary_row(sys, p, disc, spec.right_bc);
    return sys;
}

inline BandedSystem assemble(const BarProblem& p, const Discretization& disc, const MethodSpec& spec)
{
    switch (spec.kind) {
        case MethodKind::LLEM: return assemble_llem(p, disc, spec.right_bc);
        case MethodKind::EdmFull: return assemble_edm_full(p, disc, spec);
        case MethodKind::EdmReduced:
        case MethodKind::EdmI:
        case MethodKind::EdmII: return assemble_edm_reduced(p, disc, spec);
        case MethodKind::VHM: return assemble_vhm(p, disc, spec);
    }
    throw ArgumentError("unknown method kind");
}

}  // namespace pdbc
