#include "pdbc/assembly.hpp"
#include "pdbc/linalg.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

using namespace pdbc;

namespace {

// Row i of `sys` restricted to columns [first, first + coeffs.size()), and zero elsewhere.
void expect_row(const BandedSystem& sys, std::size_t i, std::size_t first, const std::vector<double>& coeffs,
                double tol = 1e-13)
{
    for (std::size_t j = 0; j < sys.size(); ++j) {
        double expected = 0.0;
        if (j >= first && j < first + coeffs.size()) {
            expected = coeffs[j - first];
        }
        const double scale = std::max(1.0, std::abs(expected));
        EXPECT_NEAR(sys(i, j), expected, tol * scale) << "row " << i << " col " << j;
    }
}

std::vector<double> scaled(std::vector<double> v, double s)
{
    for (auto& x : v) {
        x *= s;
    }
    return v;
}

const BarProblem quartic{ManufacturedCase::quartic()};

}  // namespace

TEST(AssembleLlem, GoldenRowsN4)
{
    const Discretization disc(4, 2);
    const auto sys = assemble_llem(quartic, disc);
    ASSERT_EQ(sys.size(), 5u);
    expect_row(sys, 0, 0, {1.0});
    EXPECT_EQ(sys.rhs(0), 0.0);
    expect_row(sys, 2, 1, {-16.0, 32.0, -16.0});
    EXPECT_EQ(sys.rhs(2), body_force(quartic, disc, 0.5));
    expect_row(sys, 4, 2, {2.0, -8.0, 6.0});
    EXPECT_EQ(sys.rhs(4), 1.0);
}

TEST(AssembleLlem, DirichletRight)
{
    const Discretization disc(8, 2);
    const auto sys = assemble_llem(quartic, disc, RightBoundary::dirichlet(0.7));
    expect_row(sys, 8, 8, {1.0});
    EXPECT_EQ(sys.rhs(8), 0.7);
}

// Golden rows for n = 8, m = 2 against the four system layouts.
TEST(GoldenRows, Llem)
{
    const Discretization disc(8, 2);
    const auto sys = assemble(quartic, disc, MethodSpec{MethodKind::LLEM});
    const double beta = 1.0 / (2.0 * disc.h() * disc.h());
    const double h = disc.h();
    expect_row(sys, 0, 0, {1.0});
    for (std::size_t i = 1; i < 8; ++i) {
        expect_row(sys, i, i - 1, scaled({-2, 4, -2}, beta));
        EXPECT_EQ(sys.rhs(i), body_force(quartic, disc, disc.x(static_cast<int>(i))));
    }
    expect_row(sys, 8, 6, scaled({1, -4, 3}, beta * h));
}

TEST(GoldenRows, EdmFull)
{
    const Discretization disc(8, 2);
    const auto sys = assemble(quartic, disc, MethodSpec{MethodKind::EdmFull});
    ASSERT_EQ(sys.size(), 13u);
    EXPECT_EQ(sys.index_offset(), -2);
    const double alpha = 2.0 / (disc.delta() * disc.delta()) * disc.delta() * disc.delta() / (16 * disc.h() * disc.h());
    const double h = disc.h();
    expect_row(sys, 0, 0, {1, 0, -2, 0, 1});
    expect_row(sys, 1, 0, {0, 1, -2, 1, 0});
    expect_row(sys, 2, 2, {1});
    EXPECT_EQ(sys.rhs(0), 0.0);
    EXPECT_EQ(sys.rhs(1), 0.0);
    EXPECT_EQ(sys.rhs(2), 0.0);
    for (std::size_t i = 1; i < 8; ++i) {
        expect_row(sys, i + 2, i - 2 + 2, scaled({-1, -4, 10, -4, -1}, alpha));
        EXPECT_EQ(sys.rhs(i + 2), body_force(quartic, disc, disc.x(static_cast<int>(i))));
    }
    expect_row(sys, 10, 8, scaled({2, -8, 0, 8, -2}, alpha * h));
    EXPECT_EQ(sys.rhs(10), 1.0);
    expect_row(sys, 11, 8, {0, 1, -2, 1, 0});
    expect_row(sys, 12, 8, {1, 0, -2, 0, 1});
}

TEST(GoldenRows, EdmReducedAndCorrections)
{
    const Discretization disc(8, 2);
    const double alpha = 2.0 / (disc.delta() * disc.delta()) * disc.delta() * disc.delta() / (16 * disc.h() * disc.h());
    const double h = disc.h();
    const double s_half = 1.0 / (2.0 - (3.0 + 2.0 * std::log(2.0)) / 4.0);
    struct Variant {
        MethodKind kind;
        double factor;
    };
    for (const Variant v : {Variant{MethodKind::EdmReduced, 1.0}, Variant{MethodKind::EdmI, s_half},
                            Variant{MethodKind::EdmII, 8.0 / 7.0}}) {
        const auto sys = assemble(quartic, disc, MethodSpec{v.kind});
        ASSERT_EQ(sys.size(), 9u);
        expect_row(sys, 0, 0, {1});
        expect_row(sys, 1, 0, scaled({-6, 11, -4, -1}, alpha * v.factor));
        for (std::size_t i = 2; i <= 6; ++i) {
            expect_row(sys, i, i - 2, scaled({-1, -4, 10, -4, -1}, alpha));
        }
        expect_row(sys, 7, 5, scaled({-1, -4, 11, -6}, alpha * v.factor));
        expect_row(sys, 8, 6, scaled({4, -16, 12}, alpha * h));
        for (std::size_t i = 1; i < 8; ++i) {
            EXPECT_EQ(sys.rhs(i), body_force(quartic, disc, disc.x(static_cast<int>(i))));
        }
        EXPECT_EQ(sys.rhs(8), 1.0);
    }
}

TEST(GoldenRows, Vhm)
{
    const Discretization disc(8, 2);
    const auto sys = assemble(quartic, disc, MethodSpec{MethodKind::VHM});
    const double alpha = 1.0 / (8.0 * disc.h() * disc.h());
    const double h = disc.h();
    expect_row(sys, 0, 0, {1});
    expect_row(sys, 1, 0, scaled({-8, 16, -8}, alpha));
    for (std::size_t i = 2; i <= 6; ++i) {
        expect_row(sys, i, i - 2, scaled({-1, -4, 10, -4, -1}, alpha));
    }
    expect_row(sys, 7, 6, scaled({-8, 16, -8}, alpha));
    expect_row(sys, 8, 6, scaled({4, -16, 12}, alpha * h));
}

TEST(AssembleVhm, SizeAndDispatch)
{
    EXPECT_EQ(assemble(quartic, Discretization(4, 2), MethodSpec{MethodKind::VHM}).size(), 5u);
    const Discretization disc(8, 2);
    const auto a = assemble(quartic, disc, MethodSpec{MethodKind::LLEM});
    const auto b = assemble_llem(quartic, disc);
    EXPECT_EQ(a.to_dense(), b.to_dense());
}

TEST(AssembleEdm, RejectsOtherHorizonRatios)
{
    for (MethodKind k : {MethodKind::EdmFull, MethodKind::EdmReduced, MethodKind::EdmI, MethodKind::EdmII}) {
        EXPECT_THROW(assemble(quartic, Discretization(16, 4), MethodSpec{k}), ConfigurationError);
        EXPECT_THROW(assemble(quartic, Discretization(16, 1), MethodSpec{k}), ConfigurationError);
    }
}

// VHM rows 1 and n-1 are literally the LLEM rows when m = 2.
TEST(AssembleVhm, NearBoundaryRowsEqualLlem)
{
    for (int n : {4, 8, 32}) {
        const Discretization disc(n, 2);
        for (double ea : {1.0, 2.5}) {
            const BarProblem p(ManufacturedCase::cubic(), ea);
            const auto v = assemble_vhm(p, disc, MethodSpec{MethodKind::VHM});
            const auto l = assemble_llem(p, disc);
            for (std::size_t i : {std::size_t{0}, std::size_t{1}, static_cast<std::size_t>(n - 1),
                                  static_cast<std::size_t>(n)}) {
                for (std::size_t j = 0; j < v.size(); ++j) {
                    EXPECT_EQ(v(i, j), l(i, j)) << "n=" << n << " row " << i << " col " << j;
                }
                EXPECT_EQ(v.rhs(i), l.rhs(i));
            }
        }
    }
}

TEST(AssembleVhm, InteriorRowsAnnihilateAffine)
{
    for (int m : {1, 2, 4, 8}) {
        const Discretization disc(4 * m, m);
        const auto sys = assemble_vhm(quartic, disc, MethodSpec{MethodKind::VHM});
        std::vector<double> affine;
        for (int i = 0; i <= disc.n(); ++i) {
            affine.push_back(0.3 - 1.7 * disc.x(i));
        }
        const auto y = sys.multiply(affine);
        const double scale = sys.norm_inf();
        for (int i = 1; i < disc.n(); ++i) {
            EXPECT_NEAR(y[static_cast<std::size_t>(i)], 0.0, 1e-12 * scale) << "m=" << m << " i=" << i;
        }
    }
}

// m = 4, node 3: seven-point row from the m = 3 stencil scaled by 2 EA / (3h)^2.
TEST(AssembleVhm, M4NodeThreeRow)
{
    const Discretization disc(16, 4);
    const double h = disc.h();
    const auto sys = assemble_vhm(quartic, disc, MethodSpec{MethodKind::VHM});
    const double s = 2.0 / (9.0 * h * h);
    const std::vector<double> row{-s / 6, -s / 2, -s, s * 10.0 / 3.0, -s, -s / 2, -s / 6};
    expect_row(sys, 3, 0, row, 1e-13);
    // Symmetric.
    for (std::size_t j = 1; j <= 3; ++j) {
        EXPECT_EQ(sys(3, 3 - j), sys(3, 3 + j));
    }
    // u'' coefficient equals EA: row applied to x^2 gives -2.
    std::vector<double> quad;
    for (int i = 0; i <= disc.n(); ++i) {
        quad.push_back(disc.x(i) * disc.x(i));
    }
    EXPECT_NEAR(sys.multiply(quad)[3], -2.0, 1e-12 * sys.norm_inf());
    // Row 4 already has the full horizon.
    EXPECT_NE(sys(4, 0), 0.0);
    EXPECT_EQ(sys(3, 7), 0.0);
}

TEST(AssembleEdm, InteriorRowsAnnihilateAffine)
{
    const Discretization disc(16, 2);
    for (MethodKind k : {MethodKind::EdmReduced, MethodKind::EdmI, MethodKind::EdmII}) {
        const auto sys = assemble(quartic, disc, MethodSpec{k});
        std::vector<double> affine;
        for (int i = 0; i <= disc.n(); ++i) {
            affine.push_back(disc.x(i));
        }
        // Odd extension of u = x about 0 and 1 is still affine, so every PD row vanishes.
        const auto y = sys.multiply(affine);
        for (int i = 1; i < disc.n(); ++i) {
            EXPECT_NEAR(y[static_cast<std::size_t>(i)], 0.0, 1e-12 * sys.norm_inf());
        }
    }
}

TEST(Assemble, BandwidthContract)
{
    const Discretization disc(16, 2);
    EXPECT_EQ(assemble(quartic, disc, MethodSpec{MethodKind::LLEM}).lower_bw(), 2u);
    EXPECT_EQ(assemble(quartic, disc, MethodSpec{MethodKind::VHM}).lower_bw(), 4u);
    EXPECT_EQ(assemble(quartic, disc, MethodSpec{MethodKind::EdmReduced}).upper_bw(), 4u);
    EXPECT_EQ(assemble(quartic, disc, MethodSpec{MethodKind::EdmFull}).size(), 21u);
    EXPECT_EQ(assemble(quartic, Discretization(32, 8), MethodSpec{MethodKind::VHM}).lower_bw(), 16u);
}

TEST(Assemble, DenseDumpOutsideBandIsZero)
{
    const Discretization disc(8, 2);
    for (MethodKind k : all_methods) {
        const auto sys = assemble(quartic, disc, MethodSpec{k});
        const auto dense = sys.to_dense();
        const std::size_t n = sys.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (!sys.in_band(i, j)) {
                    EXPECT_EQ(dense[i * n + j], 0.0);
                }
            }
        }
    }
}

TEST(Assemble, OutOfBandWriteThrows)
{
    BandedSystem sys(5, 1, 1);
    EXPECT_THROW(sys.set(0, 3, 1.0), ArgumentError);
    EXPECT_NO_THROW(sys.set(0, 1, 1.0));
}
