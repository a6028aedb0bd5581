#include <gtest/gtest.h>

#include "modeq/equation.hpp"
#include "reference_matrices.hpp"

using namespace modeq;

TEST(Params, Reduction)
{
    EXPECT_EQ(params_for(5), (PrimeParams{5, 3, 4}));
    EXPECT_EQ(params_for(11), (PrimeParams{11, 3, 2}));
    EXPECT_EQ(params_for(23), (PrimeParams{23, 3, 1}));
    EXPECT_EQ(params_for(13), (PrimeParams{13, 7, 4}));
    EXPECT_EQ(params_for(7), (PrimeParams{7, 1, 1}));
    EXPECT_THROW(params_for(4), InvalidInputError);
    EXPECT_THROW(params_for(2), InvalidInputError);
    for (std::int64_t p = 3; p < 400; p += 2) {
        if (!is_odd_prime(p)) continue;
        const auto pp = params_for(p);
        EXPECT_EQ(std::gcd(pp.m, pp.n), 1);
        EXPECT_EQ((p + 1) * pp.n, 8 * pp.m);
    }
}

TEST(Equation, RowZero)
{
    const auto r = row0(3);
    EXPECT_EQ(r.values, (std::vector<Rational>{1, -3, 3, -1}));
    EXPECT_THROW(row0(0), InvalidInputError);
}

TEST(Equation, BlockShapesAndEntries)
{
    const PrimeParams pp = params_for(5);
    for (int i = 0; i <= pp.m; ++i)
        for (int r = 0; r <= i; ++r) {
            const auto b = block(pp, i, r);
            EXPECT_EQ(b.rows(), static_cast<std::size_t>(pp.m - i + 1));
            EXPECT_EQ(b.cols(), static_cast<std::size_t>(pp.m - r + 1));
        }
    // A^{1,1} first row is b_0 = 1; second row b_1(1+2h, 1) = -n(1+2h).
    const auto a11 = block(pp, 1, 1);
    for (int h = 0; h < 3; ++h) {
        EXPECT_EQ(a11(0, h), 1);
        EXPECT_EQ(a11(1, h), -4 * (1 + 2 * h));
    }
    EXPECT_THROW(block(pp, 1, 2), InvalidInputError);
}

TEST(Equation, RowOneFromSingleSolve)
{
    const PrimeParams pp = params_for(5);
    const auto r1 = solve_row(pp, 1, {row0(3)});
    EXPECT_EQ(r1.values, (std::vector<Rational>{-3, -26, -3}));
    EXPECT_THROW(solve_row(pp, 2, {row0(3)}), InvalidInputError);
}

TEST(Equation, AssembleReproducesReferenceTables)
{
    for (const auto& ref : reference_matrices()) {
        const ModularMatrix a = assemble(ref.p);
        const int dim = a.m() + 1;
        ASSERT_EQ(static_cast<int>(ref.rows.size()), dim) << ref.p;
        for (int i = 0; i < dim; ++i)
            for (int h = 0; h < dim; ++h) EXPECT_EQ(a(i, h), ref.rows[i][h]) << "p=" << ref.p << " (" << i << "," << h << ")";
        for (const auto& [key, ok] : a.verification) EXPECT_TRUE(ok) << ref.p << " " << key;
    }
}

TEST(Equation, EmergentStructureForOtherPrimes)
{
    for (std::int64_t p : {3, 7, 17, 29, 43}) {
        const ModularMatrix a = assemble(p);
        EXPECT_TRUE(verify_symmetry(a).passed()) << verify_symmetry(a);
        EXPECT_EQ(a(0, 0), 1);
    }
}

TEST(Equation, SymmetryCheckRejectsPerturbation)
{
    ModularMatrix a = assemble(19);
    a.entries(1, 2) += 1;
    const Report rep = verify_symmetry(a);
    EXPECT_FALSE(rep.passed());
    ASSERT_NE(rep.find("transpose symmetry"), nullptr);
    EXPECT_FALSE(rep.find("transpose symmetry")->ok);

    ModularMatrix b = assemble(19);
    b.entries(5, 1) = 2;
    b.entries(1, 5) = 2;
    EXPECT_FALSE(verify_symmetry(b).find("zero triangle")->ok);
}

TEST(Equation, RowMomentsOnReferenceMatrices)
{
    for (const auto& ref : reference_matrices()) {
        const Report rep = verify_row_moments(assemble(ref.p));
        EXPECT_TRUE(rep.passed()) << rep;
    }
}

TEST(Equation, ThirdMomentSign)
{
    // Row-1 weighted square sums of the reference tables.
    const std::pair<std::int64_t, long> expected[] = {{5, -312}, {11, -168}, {23, -60}};
    for (const auto& [p, value] : expected) {
        const ModularMatrix a = assemble(p);
        Rational s = 0;
        for (int h = 0; h <= 3; ++h) s += Rational((1 + 2 * h) * (1 + 2 * h)) * Rational(a(1, h));
        EXPECT_EQ(s, value);
        const Report rep = verify_row_moments(a);
        const Condition* printed = nullptr;
        for (const auto& c : rep.conditions)
            if (c.informational) printed = &c;
        ASSERT_NE(printed, nullptr);
        EXPECT_FALSE(printed->ok);
    }
}

TEST(Equation, RowOneMomentsThroughNinetySeven)
{
    for (std::int64_t p = 3; p <= 97; p += 2) {
        if (!is_odd_prime(p)) continue;
        const Report rep = row1_moments(params_for(p));
        EXPECT_TRUE(rep.passed()) << rep;
    }
}

TEST(Equation, BlockDeterminants)
{
    for (std::int64_t p : {5, 11, 13, 19, 23, 31, 47}) {
        const Report rep = verify_block_determinants(params_for(p));
        EXPECT_TRUE(rep.passed()) << rep;
        EXPECT_EQ(rep.conditions.size(), static_cast<std::size_t>(params_for(p).m));
    }
}

TEST(Equation, GlobalVanishingAndPerturbation)
{
    for (std::int64_t p : {5, 11, 13, 23}) {
        const ModularMatrix a = assemble(p);
        const unsigned t = default_vanish_order(a.params);
        EXPECT_TRUE(verify_global_vanish(a, t).passed()) << p;

        ModularMatrix bad = a;
        bad.entries(a.m() / 2, 1) += 1;
        EXPECT_FALSE(verify_global_vanish(bad, t).passed()) << p;
    }
}

TEST(MThreeStatements, PartOnePrintedFormsAreNegated)
{
    for (std::int64_t p : {5, 11, 23}) {
        const Report rep = theorem52_part1(p);
        EXPECT_TRUE(rep.passed()) << rep;
    }
}

TEST(MThreeStatements, PartTwoPipeline)
{
    const std::pair<std::int64_t, long> constants[] = {{5, 6144}, {11, 192}, {23, 24}};
    for (const auto& [p, c] : constants) {
        EquationSystem sys(params_for(p));
        const Row2Pipeline pipe = row2_pipeline(sys);
        EXPECT_EQ(pipe.row2, (std::vector<Rational>{3, -3}));
        EXPECT_EQ(pipe.c, c);
        const Report rep = theorem52_part2(p);
        EXPECT_TRUE(rep.passed()) << rep;
    }
}

TEST(MThreeStatements, PartThreeDeterminant)
{
    const std::pair<std::int64_t, long> dets[] = {{5, -24576}, {11, -768}, {23, -48}};
    for (const auto& [p, d] : dets) {
        EquationSystem sys(params_for(p));
        EXPECT_EQ(theorem52_part3_determinant(sys), d);
        EXPECT_TRUE(theorem52_part3(p).passed());
    }
}

TEST(MThreeStatements, RequiresMThree)
{
    EXPECT_THROW(theorem52_part1(13), InvalidInputError);
    EXPECT_THROW(theorem52_part2(19), InvalidInputError);
}
