#include <gtest/gtest.h>

#include <random>

#include "liekit/error.hpp"
#include "liekit/freelie.hpp"

using namespace liekit;

namespace {

Word w(const std::string& s) { return parse_word(s, 2); }

// Strictly upper triangular d x d matrix with small distinct entries.
QMatrix strict_upper(std::size_t d, int seed)
{
    QMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            m(i, j) = Rational(static_cast<long>((seed * 7 + i * 3 + j * 5) % 11) - 5, static_cast<long>(1 + (i + j) % 3));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            m(i, j).canonicalize();
    return m;
}

QMatrix power_series(const QMatrix& x, const std::vector<Rational>& coeff)
{
    const std::size_t d = x.rows();
    QMatrix out(d, d), p = QMatrix::identity(d);
    for (const auto& c : coeff) {
        out = out + p.scaled(c);
        p = p * x;
    }
    return out;
}

QMatrix mat_exp(const QMatrix& x)
{
    std::vector<Rational> c;
    Rational f = 1;
    for (std::size_t k = 0; k <= x.rows(); ++k) {
        if (k > 0)
            f /= static_cast<long>(k);
        c.push_back(f);
    }
    return power_series(x, c);
}

QMatrix mat_log(const QMatrix& u)
{
    const std::size_t d = u.rows();
    QMatrix n = u - QMatrix::identity(d);
    std::vector<Rational> c{0};
    for (std::size_t k = 1; k <= d; ++k)
        c.push_back(Rational(k % 2 ? 1 : -1, static_cast<long>(k)));
    return power_series(n, c);
}

QMatrix substitute(const FreeSeries& s, const QMatrix& x, const QMatrix& y)
{
    const std::size_t d = x.rows();
    QMatrix out(d, d);
    for (const auto& [word, c] : s.terms()) {
        QMatrix p = QMatrix::identity(d);
        for (auto l : word)
            p = p * (l == 0 ? x : y);
        out = out + p.scaled(c);
    }
    return out;
}

} // namespace

TEST(Lyndon, Counts)
{
    auto l23 = lyndon_words(2, 3);
    ASSERT_EQ(l23.size(), 2u);
    EXPECT_EQ(bracket_string(l23[0], 2), "[x,[x,y]]");
    EXPECT_EQ(bracket_string(l23[1], 2), "[[x,y],y]");
    EXPECT_EQ(lyndon_words(3, 3).size(), 8u);
    for (int d = 2; d <= 6; ++d)
        EXPECT_TRUE(lyndon_words(1, d).empty());
    for (const auto& v : lyndon_words(3, 5))
        EXPECT_TRUE(is_lyndon(v));
    EXPECT_FALSE(is_lyndon(w("yx")));
}

TEST(Witt, Dimensions)
{
    auto d2 = witt_dimensions(2, 10);
    EXPECT_EQ(d2[0], 2);
    EXPECT_EQ(d2[1], 1);
    EXPECT_EQ(witt_dimensions(3, 3)[2], 8);
    auto d1 = witt_dimensions(1, 6);
    for (int m = 2; m <= 6; ++m)
        EXPECT_EQ(d1[m - 1], 0);
    for (int m = 1; m <= 7; ++m)
        EXPECT_EQ(d2[m - 1], Integer(lie_degree_rank(2, m)));
}

TEST(ExpLog, Identities)
{
    auto x = FreeSeries::letter(2, 6, 0), y = FreeSeries::letter(2, 6, 1);
    EXPECT_EQ(log(exp(x)), x);
    EXPECT_EQ(exp(x) * exp(x.scaled(-1)), FreeSeries::one(2, 6));
    auto mu = log(exp(x) * exp(y));
    EXPECT_EQ(mu.homogeneous(0) + mu.homogeneous(1), x + y);
    EXPECT_THROW(exp(FreeSeries::one(2, 3)), BadConstantTerm);
    EXPECT_THROW(log(x), BadConstantTerm);
}

TEST(Primitive, Examples)
{
    auto x = FreeSeries::letter(2, 4, 0), y = FreeSeries::letter(2, 4, 1);
    EXPECT_TRUE(is_primitive(x + y));
    auto defect = primitivity_defect(x * y);
    ASSERT_TRUE(defect.has_value());
    EXPECT_EQ(defect->left, w("x"));
    EXPECT_EQ(defect->right, w("y"));
    EXPECT_TRUE(is_primitive(commutator(x, y)));
    auto b = bch(6);
    EXPECT_TRUE(is_primitive(b.series));
}

TEST(Bch, LowDegrees)
{
    auto b = bch(3);
    EXPECT_EQ(b.lie.coeffs.at(w("xy")), Rational(1, 2));
    EXPECT_EQ(b.lie.coeffs.at(w("xxy")), Rational(1, 12));
    EXPECT_EQ(b.lie.coeffs.at(w("xyy")), Rational(1, 12));
    // mu_3 = 1/2 ([x,[x,y]] + [y,[y,x]]) and mu = sum mu_n / n!.
    auto x = FreeSeries::letter(2, 3, 0), y = FreeSeries::letter(2, 3, 1);
    auto mu3 = (commutator(x, commutator(x, y)) + commutator(y, commutator(y, x))).scaled(Rational(1, 2));
    EXPECT_EQ(b.series.homogeneous(3), mu3.scaled(Rational(1, 6)));
    EXPECT_THROW(bch(11), TooDeep);
}

TEST(Bch, MatrixOracle)
{
    // 6x6 strictly upper triangular matrices: products of 6 letters vanish, so
    // truncating at degree 5 is exact.
    auto X = strict_upper(6, 1), Y = strict_upper(6, 2);
    auto b = bch(5);
    EXPECT_EQ(substitute(b.series, X, Y), mat_log(mat_exp(X) * mat_exp(Y)));
    EXPECT_EQ(evaluate(b.series, {X, Y}), substitute(b.series, X, Y));
}

TEST(Bch, StabilityAndSymmetry)
{
    auto b4 = bch(4), b6 = bch(6);
    for (int m = 1; m <= 4; ++m)
        EXPECT_EQ(b4.series.homogeneous(m).terms(), b6.series.homogeneous(m).terms());
    // mu(x, y) = -mu(-y, -x): the word with letters swapped has coefficient (-1)^(m+1) c.
    for (const auto& [word, c] : b6.series.terms()) {
        Word sw;
        for (auto l : word)
            sw.push_back(1 - l);
        Rational sign = word.size() % 2 ? 1 : -1;
        EXPECT_EQ(b6.series.coeff(sw), sign * c) << word_string(word, 2);
    }
}

TEST(LieDecompose, RoundTrips)
{
    auto x = FreeSeries::letter(2, 4, 0), y = FreeSeries::letter(2, 4, 1);
    auto e = lie_decompose(commutator(x, y));
    EXPECT_EQ(e.coeffs.size(), 1u);
    EXPECT_EQ(e.coeffs.at(w("xy")), 1);
    EXPECT_THROW(lie_decompose(x * y), NotPrimitive);

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int t = 0; t < 20; ++t) {
        LieElement le;
        le.alphabet = 2;
        for (int d = 1; d <= 4; ++d)
            for (const auto& v : lyndon_words(2, d))
                if (int c = coef(rng))
                    le.coeffs[v] = c;
        EXPECT_EQ(lie_decompose(le.expand(4)).coeffs, le.coeffs);
    }
}

TEST(Parse, Words)
{
    EXPECT_EQ(word_string(parse_word("xyx", 2), 2), "xyx");
    EXPECT_EQ(word_string(parse_word("abd", 4), 4), "abd");
    EXPECT_THROW(parse_word("xq", 2), ParseError);
}
