#include <gtest/gtest.h>

#include <set>

#include "liekit/chars.hpp"
#include "liekit/error.hpp"

using namespace liekit;

namespace {

// Partition with at most n parts -> sl_n fundamental coordinates.
IVec gl_weight(std::vector<int> parts, int n)
{
    parts.resize(n, 0);
    IVec w(n - 1);
    for (int i = 0; i + 1 < n; ++i)
        w[i] = parts[i] - parts[i + 1];
    return w;
}

// Product of two characters by direct convolution of weight maps.
std::map<IVec, Integer> convolve(const FormalCharacter& a, const FormalCharacter& b)
{
    std::map<IVec, Integer> out;
    for (const auto& [x, m] : a.terms)
        for (const auto& [y, n] : b.terms) {
            IVec z = x;
            for (std::size_t i = 0; i < z.size(); ++i)
                z[i] += y[i];
            out[z] += m * n;
        }
    return out;
}

} // namespace

TEST(Kostant, Trivial)
{
    auto rs = RootSystem::build("B3");
    EXPECT_EQ(kostant_p(rs, {0, 0, 0}), 1);
    for (int i = 0; i < 3; ++i) {
        IVec e(3, 0);
        e[i] = 1;
        EXPECT_EQ(kostant_p(rs, e), 1);
    }
    EXPECT_EQ(kostant_p(rs, {-1, 0, 0}), 0);
}

TEST(Kostant, Sl3AgainstEnumeration)
{
    auto rs = RootSystem::build("A2");
    KostantTable table(rs);
    for (int k1 = 0; k1 <= 12; ++k1)
        for (int k2 = 0; k2 <= 12; ++k2) {
            // a alpha1 + b alpha2 + c (alpha1 + alpha2)
            int count = 0;
            for (int c = 0; c <= std::min(k1, k2); ++c)
                for (int a = 0; a <= k1; ++a)
                    for (int b = 0; b <= k2; ++b)
                        count += (a + c == k1 && b + c == k2);
            EXPECT_EQ(table({k1, k2}), count);
            EXPECT_EQ(count, std::min(k1, k2) + 1);
        }
    EXPECT_EQ(kostant_p(rs, highest_root(rs).coords), 2);
}

TEST(Multiplicity, Examples)
{
    auto b3 = RootSystem::build("B3");
    IVec lam{1, 1, 0};
    EXPECT_EQ(weight_multiplicity(b3, lam, lam), 1);
    for (auto name : {"A3", "B2", "G2", "F4"}) {
        auto rs = RootSystem::build(name);
        auto theta = rs.root_to_weight(highest_root(rs).coords);
        EXPECT_EQ(weight_multiplicity(rs, theta, IVec(rs.rank(), 0)), rs.rank()) << name;
    }
    auto a1 = RootSystem::build("A1");
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k)
            EXPECT_EQ(weight_multiplicity(a1, {n}, {n - 2 * k}), 1);
    EXPECT_EQ(weight_multiplicity(a1, {4}, {1}), 0);
}

TEST(Character, Sl2)
{
    auto a1 = RootSystem::build("A1");
    for (int n = 0; n <= 6; ++n) {
        FormalCharacter want;
        for (int k = -n; k <= n; k += 2)
            want.terms[{k}] = 1;
        EXPECT_EQ(character(a1, {n}), want);
    }
}

TEST(Character, MinusculeIsOneOrbit)
{
    for (auto name : {"A4", "B3", "C3", "D5", "E6", "E7"}) {
        auto rs = RootSystem::build(name);
        for (const auto& w : minuscule_weights(rs)) {
            FormalCharacter want;
            for (const auto& x : orbit(rs, w))
                want.terms[x] = 1;
            EXPECT_EQ(character(rs, w), want) << name;
        }
    }
}

TEST(Character, WeylInvariantAndSupportInHull)
{
    auto rs = RootSystem::build("B3");
    IVec lam{1, 0, 1};
    auto chi = character(rs, lam);
    for (const auto& [x, m] : chi.terms)
        for (int i = 0; i < 3; ++i)
            EXPECT_EQ(chi.multiplicity(rs.reflect_weight(i, x)), m);
    EXPECT_EQ(chi.dimension(), dimension(rs, lam));
    EXPECT_EQ(character(rs, {0, 0, 0}).terms.size(), 1u);
}

TEST(Dimension, Examples)
{
    for (int n = 2; n <= 8; ++n) {
        IVec spin(n, 0);
        spin[n - 1] = 1;
        EXPECT_EQ(dimension(RootSystem::build(CartanType{Family::B, n}), spin), Integer(1) << n);
    }
    EXPECT_EQ(dimension(RootSystem::build("E6"), {1, 0, 0, 0, 0, 0}), 27);
    EXPECT_EQ(dimension(RootSystem::build("E7"), {0, 0, 0, 0, 0, 0, 1}), 56);
    auto a2 = RootSystem::build("A2");
    auto theta = a2.root_to_weight(highest_root(a2).coords);
    EXPECT_EQ(dimension(a2, theta), Integer(a2.num_roots() + a2.rank()));
    EXPECT_THROW(dimension(a2, {-1, 0}), NotDominant);
}

TEST(QDimension, Examples)
{
    auto a1 = RootSystem::build("A1");
    for (int n = 0; n <= 6; ++n) {
        std::vector<Integer> ones(n + 1, 1);
        EXPECT_EQ(q_dimension(a1, {n}), IntPoly(ones));
    }
    auto a2 = RootSystem::build("A2");
    EXPECT_EQ(q_dimension(a2, {0, 0}), IntPoly::constant(1));
    EXPECT_EQ(q_dimension(a2, {1, 1}).value_at_one(), 8);
}

TEST(QDimension, Palindromic)
{
    for (auto name : {"B3", "G2", "C3", "A3"}) {
        auto rs = RootSystem::build(name);
        IVec lam(rs.rank(), 1);
        lam[0] = 2;
        auto p = q_dimension(rs, lam);
        const auto& c = p.coeffs();
        for (std::size_t k = 0; k < c.size(); ++k)
            EXPECT_EQ(c[k], c[c.size() - 1 - k]) << name;
    }
}

TEST(Tensor, ClebschGordan)
{
    auto a1 = RootSystem::build("A1");
    EXPECT_EQ(tensor_decompose(a1, {2}, {3}), (Decomposition{{{1}, 1}, {{3}, 1}, {{5}, 1}}));
    EXPECT_EQ(tensor_decompose(a1, {4}, {0}), (Decomposition{{{4}, 1}}));
}

TEST(Tensor, A3Omega2SquaredAgainstConvolution)
{
    auto rs = RootSystem::build("A3");
    IVec w2{0, 1, 0};
    auto dec = tensor_decompose(rs, w2, w2);
    EXPECT_EQ(decomposition_dimension(rs, dec), 36);
    std::map<IVec, Integer> sum;
    for (const auto& [nu, m] : dec)
        for (const auto& [x, k] : character(rs, nu).terms)
            sum[x] += m * k;
    EXPECT_EQ(sum, convolve(character(rs, w2), character(rs, w2)));
}

TEST(Tensor, SymmetricAndBrauerAgrees)
{
    auto rs = RootSystem::build("G2");
    IVec l{1, 0}, m{0, 1};
    auto a = tensor_decompose(rs, l, m);
    EXPECT_EQ(a, tensor_decompose(rs, m, l));
    EXPECT_EQ(a, tensor_decompose_brauer(rs, l, m));
    EXPECT_EQ(decomposition_dimension(rs, a), dimension(rs, l) * dimension(rs, m));
}

TEST(Tensor, ProductCap)
{
    auto rs = RootSystem::build("E8");
    IVec w(8, 0);
    w[7] = 1;
    EXPECT_THROW(tensor_decompose(rs, w, w, 1000), TooLarge);
}

TEST(Minuscule, AddableBoxes)
{
    auto rs = RootSystem::build("A4");
    auto got = tensor_minuscule(rs, gl_weight({1}, 5), gl_weight({3, 3, 2, 1}, 5));
    Decomposition want;
    for (auto p : std::vector<std::vector<int>>{{4, 3, 2, 1}, {3, 3, 3, 1}, {3, 3, 2, 2}, {3, 3, 2, 1, 1}})
        want[gl_weight(p, 5)] = 1;
    EXPECT_EQ(got, want);
    EXPECT_EQ(got, tensor_decompose(rs, gl_weight({1}, 5), gl_weight({3, 3, 2, 1}, 5)));
    EXPECT_EQ(tensor_minuscule(rs, gl_weight({1}, 5), IVec(4, 0)), (Decomposition{{gl_weight({1}, 5), 1}}));
}

TEST(Minuscule, B3SpinSquared)
{
    auto rs = RootSystem::build("B3");
    IVec s{0, 0, 1};
    auto d = tensor_minuscule(rs, s, s);
    EXPECT_EQ(decomposition_dimension(rs, d), 64);
    EXPECT_EQ(d, tensor_decompose(rs, s, s));
    EXPECT_THROW(tensor_minuscule(rs, IVec{1, 0, 0}, s), NotMinuscule);
}

TEST(Dual, Examples)
{
    for (int r = 1; r <= 6; ++r) {
        auto rs = RootSystem::build(CartanType{Family::A, r});
        IVec w1(r, 0), wl(r, 0);
        w1[0] = 1;
        wl[r - 1] = 1;
        EXPECT_EQ(dual_highest_weight(rs, w1), wl);
    }
    auto b4 = RootSystem::build("B4");
    EXPECT_EQ(dual_highest_weight(b4, {1, 2, 0, 1}), (IVec{1, 2, 0, 1}));
    EXPECT_EQ(dual_highest_weight(b4, {0, 0, 0, 0}), (IVec{0, 0, 0, 0}));
}

TEST(Dual, CharacterIsNegated)
{
    for (auto name : {"A3", "E6", "D5"}) {
        auto rs = RootSystem::build(name);
        IVec lam(rs.rank(), 0);
        lam[0] = 1;
        lam[1] = 1;
        FormalCharacter neg;
        for (const auto& [x, m] : character(rs, lam).terms) {
            IVec y = x;
            for (auto& v : y)
                v = -v;
            neg.terms[y] = m;
        }
        EXPECT_EQ(character(rs, dual_highest_weight(rs, lam)), neg) << name;
    }
}

TEST(FrobeniusSchur, Sl2)
{
    auto a1 = RootSystem::build("A1");
    for (int n = 0; n <= 9; ++n)
        EXPECT_EQ(frobenius_schur_type(a1, {n}), n % 2 ? FSType::Quaternionic : FSType::Real);
}

TEST(FrobeniusSchur, SpinModEight)
{
    // so_m spin representations: m mod 8 in {1,7,0} real, {3,5,4} quaternionic, {2,6} complex.
    auto expect = [](int m) {
        switch (m % 8) {
        case 0: case 1: case 7: return FSType::Real;
        case 3: case 4: case 5: return FSType::Quaternionic;
        default: return FSType::Complex;
        }
    };
    for (int m = 5; m <= 18; ++m) {
        if (m % 2) {
            int n = (m - 1) / 2;
            IVec spin(n, 0);
            spin[n - 1] = 1;
            EXPECT_EQ(frobenius_schur_type(RootSystem::build(CartanType{Family::B, n}), spin), expect(m)) << m;
        } else if (m >= 8) {
            int n = m / 2;
            IVec half(n, 0);
            half[n - 1] = 1;
            EXPECT_EQ(frobenius_schur_type(RootSystem::build(CartanType{Family::D, n}), half), expect(m)) << m;
        }
    }
}

TEST(Casimir, Examples)
{
    auto a1 = RootSystem::build("A1");
    EXPECT_EQ(casimir_eigenvalue(a1, {0}), 0);
    for (int n = 1; n <= 5; ++n) {
        Rational want(n * (n + 2), 8);
        want.canonicalize();
        EXPECT_EQ(casimir_eigenvalue(a1, {n}) / casimir_eigenvalue(a1, {2}), want);
    }
    auto a2 = RootSystem::build("A2");
    IVec theta{1, 1};
    auto top = casimir_eigenvalue(a2, theta);
    for (const auto& mu : dominant_weights_below(a2, theta))
        if (mu != theta)
            EXPECT_GT(top, casimir_eigenvalue(a2, mu));
}

TEST(Denominator, IdentityExact)
{
    for (auto name : {"A2", "B2", "G2", "A3", "C3"}) {
        auto rs = RootSystem::build(name);
        for (int a = 0; a <= 2; ++a) {
            IVec lam(rs.rank(), 0);
            lam[0] = a;
            lam[rs.rank() - 1] += 1;
            EXPECT_EQ(denominator_times(rs, character(rs, lam)), alternating_sum(rs, lam)) << name;
        }
        // lambda = 0 is the Weyl denominator formula.
        EXPECT_EQ(denominator_times(rs, character(rs, IVec(rs.rank(), 0))), alternating_sum(rs, IVec(rs.rank(), 0)));
    }
}
