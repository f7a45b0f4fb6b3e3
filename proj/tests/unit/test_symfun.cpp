#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "liekit/error.hpp"
#include "liekit/symfun.hpp"
#include "liekit/weyl.hpp"

using namespace liekit;

namespace {

// Murnaghan-Nakayama on beta-sets: removing a rim hook of length k moves one
// bead from b to b - k, with sign given by the beads jumped over.
long mn_character(const Partition& lambda, std::vector<int> mu)
{
    if (mu.empty())
        return lambda.empty() ? 1 : 0;
    const int k = mu.back();
    mu.pop_back();
    const int l = static_cast<int>(lambda.size());
    std::set<int> beta;
    for (int i = 0; i < l; ++i)
        beta.insert(lambda[i] + l - 1 - i);
    long total = 0;
    for (int b : beta) {
        if (b - k < 0 || beta.count(b - k))
            continue;
        int between = 0;
        for (int c : beta)
            if (c > b - k && c < b)
                ++between;
        auto moved = beta;
        moved.erase(b);
        moved.insert(b - k);
        std::vector<int> desc(moved.rbegin(), moved.rend());
        Partition nu;
        for (int i = 0; i < l; ++i)
            if (int part = desc[i] - (l - 1 - i); part > 0)
                nu.push_back(part);
        total += (between % 2 ? -1 : 1) * mn_character(nu, mu);
    }
    return total;
}

// Partitions fitting in an m x n box, by brute force, as a polynomial in q.
IntPoly box_count(int m, int n)
{
    std::vector<Integer> c(static_cast<std::size_t>(m * n + 1), 0);
    std::function<void(int, int, int)> rec = [&](int row, int cap, int sum) {
        if (row == m) {
            c[sum] += 1;
            return;
        }
        for (int part = 0; part <= cap; ++part)
            rec(row + 1, part, sum + part);
    };
    rec(0, n, 0);
    return IntPoly(c);
}

SparsePoly sum(const std::vector<Partition>& ps, std::size_t n)
{
    SparsePoly s;
    s.nvars = n;
    for (const auto& p : ps)
        s = s + schur_poly(p, n);
    return s;
}

} // namespace

TEST(Partitions, ConjugateAndContent)
{
    EXPECT_EQ(conjugate({3, 3, 2, 1}), (Partition{4, 3, 2}));
    EXPECT_EQ(conjugate({}), Partition{});
    for (int n = 1; n <= 8; ++n)
        for (const auto& p : partitions(n)) {
            EXPECT_EQ(conjugate(conjugate(p)), p);
            EXPECT_EQ(content(p), content_formula(p));
            EXPECT_EQ(content(conjugate(p)), -content(p));
        }
    EXPECT_EQ(content({2, 1}), 0);
    EXPECT_EQ(content({}), 0);
    EXPECT_EQ(jucys_murphy_eigenvalue({2}), 1);
    EXPECT_EQ(jucys_murphy_eigenvalue({1, 1}), -1);
    EXPECT_EQ(jucys_murphy_eigenvalue({2, 1}), 0);
    EXPECT_THROW(make_partition({1, 2}), NotPartition);
    EXPECT_THROW(make_partition({2, -1}), NotPartition);
    EXPECT_EQ(make_partition({3, 1, 0, 0}), (Partition{3, 1}));
}

TEST(Partitions, Enumeration)
{
    const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n)
        EXPECT_EQ(partitions(n).size(), counts[n]) << n;
    EXPECT_EQ(partitions(3), (std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}}));
}

TEST(Schur, CompleteAndElementary)
{
    for (std::size_t n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m) {
            EXPECT_EQ(schur_poly({m}, n), complete_symmetric(m, n));
            EXPECT_EQ(schur_poly(Partition(m, 1), n), elementary_symmetric(m, n));
        }
    EXPECT_TRUE(schur_poly({2, 1}, 3).is_symmetric());
    EXPECT_EQ(schur_poly({2, 1}, 3).eval({1, 1, 1}), 8);
    EXPECT_TRUE(schur_poly({1, 1, 1}, 2).terms.empty());
}

TEST(Schur, MatchesBialternant)
{
    const std::vector<Integer> pts{2, 3, 5, 7};
    for (int n = 1; n <= 5; ++n)
        for (const auto& p : partitions(n))
            if (p.size() <= pts.size())
                EXPECT_EQ(schur_poly(p, pts.size()).eval(pts), schur_bialternant(p, pts)) << partition_string(p);
}

TEST(Schur, DimensionPolynomial)
{
    auto p21 = schur_dim_poly({2, 1});
    for (int n = 1; n <= 10; ++n) {
        Rational want(n * (n + 1) * (n - 1), 3);
        want.canonicalize();
        EXPECT_EQ(p21.eval(Rational(n)), want);
        EXPECT_EQ(schur_dim_poly({1}).eval(Rational(n)), n);
        EXPECT_EQ(schur_dim({2, 1}, n), Integer(n * (n + 1) * (n - 1) / 3));
    }
    for (int n = 1; n <= 4; ++n)
        for (const auto& p : partitions(4)) {
            std::vector<Integer> ones(static_cast<std::size_t>(n), 1);
            EXPECT_EQ(schur_dim(p, n), schur_poly(p, n).eval(ones)) << partition_string(p) << " " << n;
        }
}

TEST(Schur, Narayana)
{
    EXPECT_EQ(narayana(4, 2), 6);
    for (int a = 1; a <= 5; ++a) {
        auto poly = schur_dim_poly({a, a});
        for (int n = 2; n <= 8; ++n)
            EXPECT_EQ(poly.eval(Rational(n)), Rational(narayana(n + a - 1, n - 1))) << a << " " << n;
    }
}

TEST(Frobenius, SmallCases)
{
    auto id = cycle_type({1, 1, 1});
    EXPECT_EQ(frobenius_character({3}, id), 1);
    EXPECT_EQ(frobenius_character({2, 1}, id), 2);
    EXPECT_EQ(frobenius_character({1, 1, 1}, id), 1);
    EXPECT_EQ(frobenius_character({2, 1}, cycle_type({3})), -1);
    EXPECT_THROW(frobenius_character({2, 1}, cycle_type({2, 2})), SizeMismatch);
}

TEST(Frobenius, MatchesMurnaghanNakayama)
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& l : partitions(n))
            for (const auto& mu : partitions(n)) {
                auto m = cycle_type(mu);
                Integer chi = frobenius_character(l, m);
                EXPECT_EQ(chi, mn_character(l, mu)) << partition_string(l) << " " << partition_string(mu);
                if (l.size() == 1)
                    EXPECT_EQ(chi, 1);
                EXPECT_EQ(frobenius_character(conjugate(l), m), cycle_sign(m) * chi);
            }
}

TEST(Frobenius, Orthogonality)
{
    Integer fact = 1;
    for (int n = 1; n <= 6; ++n) {
        fact *= n;
        auto ps = partitions(n);
        Integer squares = 0;
        for (const auto& l : ps) {
            auto d = frobenius_character(l, cycle_type(Partition(n, 1)));
            squares += d * d;
        }
        EXPECT_EQ(squares, fact);
        for (const auto& a : ps)
            for (const auto& b : ps) {
                Rational s = 0;
                for (const auto& mu : ps) {
                    auto m = cycle_type(mu);
                    s += Rational(frobenius_character(a, m) * frobenius_character(b, m), centralizer_order(m));
                }
                s.canonicalize();
                EXPECT_EQ(s, a == b ? 1 : 0);
            }
    }
}

TEST(Pieri, Examples)
{
    auto one = pieri({3, 3, 2, 1});
    std::sort(one.begin(), one.end());
    std::vector<Partition> want1{{4, 3, 2, 1}, {3, 3, 3, 1}, {3, 3, 2, 2}, {3, 3, 2, 1, 1}};
    std::sort(want1.begin(), want1.end());
    EXPECT_EQ(one, want1);

    auto two = pieri({3, 1}, 2, 3);
    std::sort(two.begin(), two.end());
    std::vector<Partition> want2{{4, 2}, {4, 1, 1}, {3, 2, 1}};
    std::sort(want2.begin(), want2.end());
    EXPECT_EQ(two, want2);
    EXPECT_EQ(pieri({}), (std::vector<Partition>{{1}}));
}

TEST(Pieri, AgreesWithProducts)
{
    for (std::size_t n = 2; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k)
            for (const auto& l : partitions(k))
                for (int m = 1; m <= 2; ++m) {
                    if (l.size() > n)
                        continue;
                    EXPECT_EQ(sum(pieri(l, m, n), n), schur_poly(l, n) * elementary_symmetric(m, n))
                        << partition_string(l) << " m=" << m << " n=" << n;
                }
}

TEST(QCombinatorics, Binomials)
{
    EXPECT_EQ(gaussian_binomial(2, 2), (IntPoly({1, 1, 2, 1, 1})));
    EXPECT_EQ(q_factorial(3), (IntPoly({1, 2, 2, 1})));
    EXPECT_EQ(q_binomial(5, 0), IntPoly({1}));
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n) {
            EXPECT_EQ(gaussian_binomial(m, n), box_count(m, n)) << m << " " << n;
            EXPECT_EQ(gaussian_binomial(m, n), gaussian_binomial_ratio(m, n));
            EXPECT_EQ(q_binomial(m + n, n), gaussian_binomial(m, n));
        }
    EXPECT_EQ(gaussian_multinomial({1, 1, 1}), q_factorial(3));
    EXPECT_EQ(gaussian_multinomial({2, 2}), gaussian_binomial(2, 2));
}

TEST(QCombinatorics, Betti)
{
    for (int n = 1; n <= 6; ++n) {
        auto b = betti_from_poincare(grassmannian_poincare(1, n));
        ASSERT_EQ(b.size(), static_cast<std::size_t>(2 * n + 1));
        for (std::size_t i = 0; i < b.size(); ++i)
            EXPECT_EQ(b[i], i % 2 ? 0 : 1);
    }
    EXPECT_EQ(betti_from_poincare(flag_poincare(3)), (std::vector<Integer>{1, 0, 2, 0, 2, 0, 1}));
    EXPECT_EQ(grassmannian_poincare(2, 2), gaussian_binomial(2, 2));
    for (int n = 1; n <= 5; ++n) {
        auto rs = RootSystem::build(CartanType{Family::A, n});
        EXPECT_EQ(flag_poincare(n + 1), length_generating_function(rs)) << n;
    }
    EXPECT_EQ(partial_flag_poincare({1, 1, 1}), flag_poincare(3));
    EXPECT_EQ(partial_flag_poincare({2, 3}), grassmannian_poincare(2, 3));
}

TEST(Cauchy, Identity)
{
    EXPECT_TRUE(cauchy_check(1, 1, 6));
    EXPECT_TRUE(cauchy_check(2, 2, 4));
    EXPECT_TRUE(cauchy_check(2, 3, 4));
    EXPECT_THROW(cauchy_check(7, 1, 2), TooLarge);
}
