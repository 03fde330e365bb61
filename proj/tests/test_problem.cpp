#include "pdbc/problem.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>

using namespace pdbc;

namespace {

const std::array<ManufacturedCase, 7> all_cases{
    ManufacturedCase::linear(),         ManufacturedCase::quadratic(), ManufacturedCase::cubic(),
    ManufacturedCase::quartic(),        ManufacturedCase::quartic_pd(), ManufacturedCase::exponential(0.1),
    ManufacturedCase::exponential(0.01),
};

// -u'' by the five-point fourth-order central difference.
double minus_second_derivative(const BarProblem& p, double x, double s)
{
    const double um2 = exact_solution(p, x - 2 * s);
    const double um1 = exact_solution(p, x - s);
    const double u0 = exact_solution(p, x);
    const double up1 = exact_solution(p, x + s);
    const double up2 = exact_solution(p, x + 2 * s);
    return -(-up2 + 16 * up1 - 30 * u0 + 16 * um1 - um2) / (12 * s * s);
}

// u'(x) by a fourth-order backward difference (x = 1 has no right neighbour in the domain).
double backward_derivative(const BarProblem& p, double x, double s)
{
    return (25 * exact_solution(p, x) - 48 * exact_solution(p, x - s) + 36 * exact_solution(p, x - 2 * s) -
            16 * exact_solution(p, x - 3 * s) + 3 * exact_solution(p, x - 4 * s)) /
           (12 * s);
}

}  // namespace

TEST(GridPoints, UniformPartition)
{
    const auto x = grid_points(Discretization(4, 2));
    ASSERT_EQ(x.size(), 5u);
    const std::array<double, 5> expected{0.0, 0.25, 0.5, 0.75, 1.0};
    for (std::size_t i = 0; i < x.size(); ++i) {
        EXPECT_DOUBLE_EQ(x[i], expected[i]);
    }
}

TEST(GridPoints, MidpointAndMonotone)
{
    const Discretization disc(8, 2);
    const auto x = grid_points(disc);
    EXPECT_EQ(x[4], 0.5);
    for (std::size_t i = 1; i < x.size(); ++i) {
        EXPECT_LT(x[i - 1], x[i]);
    }
    EXPECT_NEAR(x.back(), 1.0, 1e-16);
    EXPECT_EQ(disc.h(), 1.0 / 8.0);
    EXPECT_EQ(disc.delta(), 2.0 / 8.0);
}

TEST(Discretization, RejectsTooFewIntervals)
{
    EXPECT_THROW(Discretization(1, 1), ArgumentError);
    EXPECT_THROW(Discretization(3, 2), ArgumentError);
    EXPECT_THROW(Discretization(8, 0), ArgumentError);
    EXPECT_NO_THROW(Discretization(4, 2));
}

TEST(BarProblem, Validation)
{
    EXPECT_THROW(BarProblem(ManufacturedCase::cubic(), 0.0), ArgumentError);
    EXPECT_THROW(BarProblem(ManufacturedCase::cubic(), -1.0), ArgumentError);
    EXPECT_THROW(ManufacturedCase::exponential(0.0), ArgumentError);
    EXPECT_THROW(ManufacturedCase::exponential(1.0), ArgumentError);
}

TEST(BodyForce, PolynomialLoads)
{
    const Discretization disc(8, 2);
    EXPECT_EQ(body_force(BarProblem(ManufacturedCase::quadratic()), disc, 0.3), 1.0);
    EXPECT_EQ(body_force(BarProblem(ManufacturedCase::linear()), disc, 0.3), 0.0);
    EXPECT_EQ(body_force(BarProblem(ManufacturedCase::cubic()), disc, 0.3), 0.3);
    EXPECT_DOUBLE_EQ(body_force(BarProblem(ManufacturedCase::quartic()), disc, 0.3), 0.09);
}

TEST(BodyForce, QuarticPdInterior)
{
    const Discretization disc(8, 2);  // delta = 1/4
    const double f = body_force(BarProblem(ManufacturedCase::quartic_pd()), disc, 0.5);
    EXPECT_NEAR(f, 0.25 + 0.0625 / 12.0, 1e-15);
    EXPECT_NEAR(f, 0.2552083333, 1e-10);
}

TEST(BodyForce, QuarticPdIsQuarticPlusDeltaSquaredOverTwelve)
{
    const Discretization disc(16, 2);
    const BarProblem pd(ManufacturedCase::quartic_pd());
    const BarProblem q(ManufacturedCase::quartic());
    for (double x = disc.delta(); x <= 1.0 - disc.delta(); x += 0.01) {
        EXPECT_EQ(body_force(pd, disc, x), body_force(q, disc, x) + disc.delta() * disc.delta() / 12.0);
    }
}

TEST(BodyForce, ExponentialAtRightEnd)
{
    const Discretization disc(8, 2);
    const BarProblem p(ManufacturedCase::exponential(0.1));
    const double f = body_force(p, disc, 1.0);
    EXPECT_NEAR(f, 100.0 / (1.0 - std::exp(-10.0)), 1e-12);
    EXPECT_NEAR(f, 100.00454, 5e-6);
    // Independent check: -u'' by central differences of the exact solution at step 1e-5.
    const double x = 1.0 - 2e-5;
    const double s = 1e-5;
    const double fd = -(exact_solution(p, x + s) - 2 * exact_solution(p, x) + exact_solution(p, x - s)) / (s * s);
    EXPECT_NEAR(fd, body_force(p, disc, x), 1e-3 * 100.0);
}

TEST(BodyForce, OutsideDomainThrows)
{
    const Discretization disc(8, 2);
    EXPECT_THROW(body_force(BarProblem(ManufacturedCase::cubic()), disc, -0.1), DomainError);
    EXPECT_THROW(body_force(BarProblem(ManufacturedCase::cubic()), disc, 1.1), DomainError);
    EXPECT_THROW(exact_solution(BarProblem(ManufacturedCase::cubic()), 1.5), DomainError);
}

TEST(ExactSolution, Values)
{
    EXPECT_DOUBLE_EQ(exact_solution(BarProblem(ManufacturedCase::quadratic()), 1.0), 1.5);
    EXPECT_DOUBLE_EQ(exact_solution(BarProblem(ManufacturedCase::quartic()), 1.0), 1.25);
    EXPECT_EQ(exact_solution(BarProblem(ManufacturedCase::exponential(0.1)), 1.0), 0.0);
    for (const auto& c : all_cases) {
        EXPECT_EQ(exact_solution(BarProblem(c), 0.0), 0.0) << to_string(c.kind());
    }
}

TEST(NeumannData, Values)
{
    EXPECT_EQ(neumann_data(BarProblem(ManufacturedCase::cubic())), 1.0);
    EXPECT_NEAR(neumann_data(BarProblem(ManufacturedCase::exponential(0.1))), 1.0 - 10.0 / (1.0 - std::exp(-10.0)),
                1e-13);
    EXPECT_NEAR(neumann_data(BarProblem(ManufacturedCase::exponential(0.1))), -9.000454, 5e-7);
    EXPECT_EQ(neumann_data(BarProblem(ManufacturedCase::exponential(0.01))), -99.0);
}

// -EA u'' = f_b on a 1001-point grid. The exponential cases use step 1e-4 and
// tolerance 1e-5. The five-point formula is exact for polynomials up to degree
// five, so the polynomial cases use step 1e-2 to keep round-off (about
// 1e-16 / s^2) below their 1e-9 tolerance.
TEST(ManufacturedCases, BodyForceMatchesSecondDerivative)
{
    for (const auto& c : all_cases) {
        for (double ea : {1.0, 3.0}) {
            const BarProblem p(c, ea);
            const Discretization disc(64, 2);
            const double s = c.is_polynomial() ? 1e-2 : 1e-4;
            const double tol = c.is_polynomial() ? 1e-9 : 1e-5;
            for (int k = 0; k <= 1000; ++k) {
                const double x = k / 1000.0;
                if (x - 2 * s < 0.0 || x + 2 * s > 1.0) {
                    continue;
                }
                if (c.kind() == CaseKind::QuarticPD) {
                    // The PD load adds delta_v^2/12; compare with the quartic part only.
                    const double f = body_force(p, disc, x) - ea * std::pow(vhm_local_horizon(x, disc.delta()), 2) / 12.0;
                    EXPECT_NEAR(ea * minus_second_derivative(p, x, s), f, tol * std::max(1.0, std::abs(f)));
                    continue;
                }
                const double f = body_force(p, disc, x);
                EXPECT_NEAR(ea * minus_second_derivative(p, x, s), f, tol * std::max(1.0, std::abs(f)))
                    << to_string(c.kind()) << " x=" << x;
            }
        }
    }
}

TEST(ManufacturedCases, TractionMatchesDerivativeAtRightEnd)
{
    for (const auto& c : all_cases) {
        if (c.kind() == CaseKind::Linear) {
            continue;  // u = g x / EA by construction
        }
        const BarProblem p(c);
        const double g = neumann_data(p);
        EXPECT_NEAR(p.modulus_area() * backward_derivative(p, 1.0, 1e-4), g, 1e-6 * std::abs(g))
            << to_string(c.kind());
    }
}

TEST(VhmLocalHorizon, Values)
{
    EXPECT_EQ(vhm_local_horizon(0.5, 0.25), 0.25);
    EXPECT_EQ(vhm_local_horizon(0.125, 0.25), 0.125);
    EXPECT_EQ(vhm_local_horizon(1.0, 0.25), 0.0);
    EXPECT_EQ(vhm_local_horizon(0.0, 0.25), 0.0);
    EXPECT_THROW(vhm_local_horizon(0.5, 0.6), ConfigurationError);
    EXPECT_THROW(vhm_local_horizon(1.5, 0.25), DomainError);
}

TEST(VhmLocalHorizon, StaysInsideBar)
{
    for (double delta : {0.5, 0.25, 0.1}) {
        for (int k = 0; k <= 1000; ++k) {
            const double x = k / 1000.0;
            const double dv = vhm_local_horizon(x, delta);
            EXPECT_GE(dv, 0.0);
            EXPECT_LE(dv, delta);
            EXPECT_GE(x - dv, 0.0);
            EXPECT_LE(x + dv, 1.0 + 1e-15);
        }
    }
}
