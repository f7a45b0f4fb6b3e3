#include <gtest/gtest.h>

#include <set>

#include "liekit/error.hpp"
#include "liekit/liealg.hpp"
#include "liekit/rootsys.hpp"

using namespace liekit;

namespace {

// Killing form from the bracket table alone: K(e_a, e_b) = sum_{c,d} c_{ac}^d c_{bd}^c.
QMatrix killing_oracle(const LieAlgebra& g)
{
    const std::size_t n = g.dim();
    std::vector<QMatrix> ad(n, QMatrix(n, n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c)
            for (const auto& [d, v] : g.bracket(a, c))
                ad[a](d, c) = v;
    QMatrix k(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            auto p = ad[a] * ad[b];
            for (std::size_t i = 0; i < n; ++i)
                k(a, b) += p(i, i);
        }
    return k;
}

Rational trace(const QMatrix& m)
{
    Rational t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        t += m(i, i);
    return t;
}

IntPoly from_exponents(const std::vector<int>& exps)
{
    IntPoly p({1});
    for (auto m : exps) {
        std::vector<Integer> f(static_cast<std::size_t>(2 * m + 2), 0);
        f.front() = 1;
        f.back() = 1;
        p = p * IntPoly(f);
    }
    return p;
}

std::string g2_path() { return std::string(LIEKIT_DATA_DIR) + "/g2.json"; }

} // namespace

TEST(Constructors, Sl2Brackets)
{
    auto g = sl(2);
    ASSERT_EQ(g.dim(), 3u);
    EXPECT_EQ(g.labels(), (std::vector<std::string>{"e", "f", "h"}));
    EXPECT_EQ(g.bracket(0, 1), (SparseVec{{2, 1}}));
    EXPECT_EQ(g.bracket(2, 0), (SparseVec{{0, 2}}));
    EXPECT_EQ(g.bracket(2, 1), (SparseVec{{1, -2}}));
    EXPECT_EQ(g.bracket(1, 0), (SparseVec{{2, -1}}));
    EXPECT_TRUE(g.bracket(0, 0).empty());
}

TEST(Constructors, Dimensions)
{
    EXPECT_EQ(sp(4).dim(), 10u);
    for (int n = 1; n <= 3; ++n)
        EXPECT_EQ(sp(2 * n).dim(), static_cast<std::size_t>(n * (2 * n + 1)));
    for (int n = 2; n <= 6; ++n) {
        EXPECT_EQ(sl(n).dim(), static_cast<std::size_t>(n * n - 1));
        EXPECT_EQ(so(n).dim(), static_cast<std::size_t>(n * (n - 1) / 2));
        EXPECT_EQ(gl(n).dim(), static_cast<std::size_t>(n * n));
        EXPECT_EQ(upper_triangular(n).dim(), static_cast<std::size_t>(n * (n + 1) / 2));
        EXPECT_EQ(strictly_upper_triangular(n).dim(), static_cast<std::size_t>(n * (n - 1) / 2));
    }
    auto h = heisenberg();
    ASSERT_EQ(h.dim(), 3u);
    EXPECT_EQ(h.bracket(0, 1), (SparseVec{{2, 1}}));
    EXPECT_TRUE(h.bracket(0, 2).empty());
    EXPECT_TRUE(h.bracket(1, 2).empty());
}

TEST(Constructors, JacobiIsChecked)
{
    // [a,b] = a, [b,c] = b: the Jacobi sum on (a,b,c) is a.
    EXPECT_THROW(LieAlgebra({"a", "b", "c"}, {{0, 1, {{0, 1}}}, {1, 2, {{1, 1}}}}), JacobiFailure);
    EXPECT_NO_THROW(LieAlgebra({"a", "b"}, {{0, 1, {{1, 1}}}}));
}

TEST(Constructors, JsonRoundTrip)
{
    for (const auto& g : {sl(3), so(5), heisenberg(), upper_triangular(3)}) {
        auto back = lie_algebra_from_json(lie_algebra_to_json(g));
        EXPECT_EQ(back, g);
        EXPECT_EQ(back.labels(), g.labels());
        EXPECT_EQ(back.cartan(), g.cartan());
    }
    EXPECT_THROW(lie_algebra_from_json("{\"dim\": 2, \"brackets\": [{\"i\": 0, \"j\": 5, \"coeffs\": {}}]}"), InvalidFile);
    EXPECT_THROW(lie_algebra_from_file("/nonexistent/liekit.json"), InvalidFile);
}

TEST(Killing, Sl2Values)
{
    auto g = sl(2);
    auto k = killing_form(g);
    EXPECT_EQ(k, killing_oracle(g));
    EXPECT_EQ(k(2, 2), 8);
    EXPECT_EQ(k(0, 1), 4);
    EXPECT_EQ(k(2, 0), 0);
}

TEST(Killing, TraceFormOnSln)
{
    // On sl(n), K(x, y) = 2n tr(xy).
    for (int n = 2; n <= 4; ++n) {
        auto g = sl(n);
        auto k = killing_form(g);
        const auto& m = g.matrices();
        ASSERT_EQ(m.size(), g.dim());
        for (std::size_t a = 0; a < g.dim(); ++a)
            for (std::size_t b = 0; b < g.dim(); ++b)
                EXPECT_EQ(k(a, b), Rational(2 * n) * trace(m[a] * m[b]));
    }
}

TEST(Killing, ZeroAndInvariant)
{
    EXPECT_EQ(killing_form(abelian(4)), QMatrix(4, 4));
    EXPECT_EQ(killing_form(heisenberg()), QMatrix(3, 3));
    for (const auto& g : {so(5), upper_triangular(3), sp(4)}) {
        auto k = killing_form(g);
        EXPECT_EQ(k, killing_oracle(g));
        const std::size_t n = g.dim();
        auto basis = [&](std::size_t i) {
            QVec v(n, 0);
            v[i] = 1;
            return v;
        };
        auto form = [&](const QVec& x, const QVec& y) {
            Rational s = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    s += x[i] * k(i, j) * y[j];
            return s;
        };
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z)
                    EXPECT_EQ(form(g.bracket(basis(x), basis(y)), basis(z)),
                              form(basis(x), g.bracket(basis(y), basis(z))));
    }
}

TEST(Killing, PositiveOnSlnCartan)
{
    for (int n = 2; n <= 5; ++n) {
        auto g = sl(n);
        const auto& h = g.cartan();
        ASSERT_EQ(h.size(), static_cast<std::size_t>(n - 1));
        auto k = killing_form(g);
        QMatrix r(h.size(), h.size());
        for (std::size_t i = 0; i < h.size(); ++i)
            for (std::size_t j = 0; j < h.size(); ++j)
                r(i, j) = k(h[i], h[j]);
        EXPECT_TRUE(is_positive_definite(r)) << n;
    }
}

TEST(Predicates, Examples)
{
    EXPECT_TRUE(is_solvable(upper_triangular(3)));
    EXPECT_FALSE(is_nilpotent(upper_triangular(3)));
    for (int n = 2; n <= 5; ++n)
        EXPECT_TRUE(is_nilpotent(strictly_upper_triangular(n))) << n;
    for (int n = 2; n <= 4; ++n) {
        EXPECT_TRUE(is_semisimple(sl(n)));
        EXPECT_FALSE(is_solvable(sl(n)));
    }
    for (int n = 3; n <= 6; ++n)
        EXPECT_TRUE(is_semisimple(so(n))) << n;
    EXPECT_TRUE(is_semisimple(sp(6)));
    EXPECT_FALSE(is_semisimple(gl(2)));
    EXPECT_FALSE(is_semisimple(heisenberg()));
    EXPECT_TRUE(is_simple(sl(3)));
    EXPECT_TRUE(is_simple(so(5)));
    EXPECT_FALSE(is_simple(so(4)));
    EXPECT_FALSE(is_simple(direct_sum(sl(2), sl(2))));
    EXPECT_EQ(solvable_by_series(heisenberg()), solvable_by_cartan_criterion(heisenberg()));
}

TEST(Series, Examples)
{
    EXPECT_EQ(derived_series(abelian(4)), (std::vector<std::size_t>{4, 0}));
    EXPECT_EQ(lower_central_series(heisenberg()), (std::vector<std::size_t>{3, 1, 0}));
    auto d = derived_series(sl(2));
    EXPECT_EQ(d.front(), 3u);
    EXPECT_EQ(d.back(), 3u);
    // b(3): [b, b] is strictly upper triangular, then its derived algebra is the corner.
    EXPECT_EQ(derived_series(upper_triangular(3)), (std::vector<std::size_t>{6, 3, 1, 0}));
    EXPECT_EQ(lower_central_series(upper_triangular(3)), (std::vector<std::size_t>{6, 3, 3}));
    for (const auto& s : {derived_series(gl(3)), lower_central_series(strictly_upper_triangular(4))})
        EXPECT_TRUE(std::is_sorted(s.rbegin(), s.rend()));
}

TEST(RootDecomposition, ClassicalMatches)
{
    struct Case {
        LieAlgebra g;
        Family family;
        int rank;
    };
    std::vector<Case> cases{{sl(3), Family::A, 2}, {sp(4), Family::C, 2}, {so(5), Family::B, 2},
                            {so(8), Family::D, 4}, {sp(6), Family::C, 3}};
    for (const auto& c : cases) {
        auto rd = root_decomposition(c.g);
        EXPECT_EQ(rd.cartan_dim, static_cast<std::size_t>(c.rank));
        auto rs = RootSystem::build(CartanType{c.family, c.rank});
        EXPECT_EQ(rd.roots.size(), rs.roots().size());
        for (const auto& r : rd.roots)
            EXPECT_EQ(r.basis.size(), 1u);
        auto m = match_root_system(c.g, rd);
        ASSERT_EQ(m.types.size(), 1u);
        EXPECT_EQ(m.types[0].family, c.family);
        EXPECT_EQ(m.types[0].rank, c.rank);
        EXPECT_TRUE(m.bijective);
        std::set<IVec> got(m.root_coords.begin(), m.root_coords.end());
        auto want = rs.roots();
        EXPECT_EQ(got, std::set<IVec>(want.begin(), want.end()));
    }
}

TEST(RootDecomposition, NeedsDiagonalAction)
{
    // Mark e in sl(2) as the Cartan: ad e is nilpotent, not diagonal.
    auto s = sl(2);
    std::vector<LieAlgebra::Bracket> br;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            br.push_back({i, j, s.bracket(i, j)});
    LieAlgebra bad(s.labels(), br, {0});
    EXPECT_THROW(root_decomposition(bad), NotDiagonalizable);
}

TEST(Cohomology, TrivialCoefficients)
{
    EXPECT_EQ(poincare_polynomial(ce_cohomology(sl(2))), (IntPoly({1, 0, 0, 1})));
    EXPECT_EQ(poincare_polynomial(ce_cohomology(abelian(2))), (IntPoly({1, 2, 1})));
    EXPECT_EQ(ce_cohomology(heisenberg()), (std::vector<std::size_t>{1, 2, 2, 1}));
    EXPECT_EQ(poincare_polynomial(ce_cohomology(sl(3))), from_exponents({1, 2}));
    EXPECT_THROW(ce_cohomology(sp(6)), TooLarge);
}

TEST(Cohomology, EulerCharacteristicVanishes)
{
    for (const auto& g : {sl(2), heisenberg(), upper_triangular(3), strictly_upper_triangular(4), gl(2)}) {
        auto b = ce_cohomology(g);
        ASSERT_EQ(b.size(), g.dim() + 1);
        long chi = 0;
        for (std::size_t k = 0; k < b.size(); ++k)
            chi += (k % 2 ? -1 : 1) * static_cast<long>(b[k]);
        EXPECT_EQ(chi, 0);
        EXPECT_EQ(b[0], 1u);
    }
}

TEST(Cohomology, WhiteheadVanishing)
{
    auto g = sl(2);
    for (int n = 1; n <= 6; ++n) {
        auto v = sl2_irrep(g, n);
        EXPECT_EQ(v.dim, static_cast<std::size_t>(n + 1));
        auto h = ce_cohomology(g, v);
        EXPECT_EQ(h[0], 0u) << n;
        EXPECT_EQ(h[1], 0u) << n;
        EXPECT_EQ(h[2], 0u) << n;
    }
    // H^0 with the trivial module of dimension 2 is everything.
    EXPECT_EQ(ce_cohomology(g, trivial_module(g, 2))[0], 2u);
    // The adjoint module: no invariants, no derivations beyond inner ones.
    auto ad = ce_cohomology(g, adjoint_module(g));
    EXPECT_EQ(ad[0], 0u);
    EXPECT_EQ(ad[1], 0u);
}

TEST(Cohomology, ModulesAreValidated)
{
    auto g = sl(2);
    auto v = sl2_irrep(g, 2);
    EXPECT_NO_THROW(validate_module(g, v));
    v.action[0] = v.action[0].scaled(2);
    EXPECT_THROW(validate_module(g, v), JacobiFailure);
    EXPECT_NO_THROW(validate_module(sl(3), natural_module(sl(3))));
}

TEST(InvariantForms, MatchesCohomologyAndExponents)
{
    for (const auto& [g, name] : std::vector<std::pair<LieAlgebra, std::string>>{
             {sl(2), "A1"}, {sl(3), "A2"}, {so(5), "B2"}, {sp(4), "C2"}}) {
        auto p = invariant_forms_poincare(g);
        EXPECT_EQ(p, poincare_polynomial(ce_cohomology(g))) << name;
        auto rs = RootSystem::build(name);
        EXPECT_EQ(p, from_exponents(exponents(rs))) << name;
        EXPECT_EQ(p.value_at_one(), Integer(1) << rs.rank()) << name;
    }
    EXPECT_EQ(invariant_forms_poincare(so(5)), from_exponents({1, 3}));
    EXPECT_EQ(invariant_forms_dim(sl(3), 3), 1u);
    EXPECT_EQ(invariant_forms_dim(sl(3), 5), 1u);
    EXPECT_EQ(invariant_forms_dim(sl(3), 4), 0u);
}

TEST(InvariantForms, G2FromFile)
{
    auto g = lie_algebra_from_file(g2_path());
    ASSERT_EQ(g.dim(), 14u);
    EXPECT_TRUE(is_simple(g));
    EXPECT_EQ(invariant_forms_poincare(g), from_exponents({1, 5}));
    auto m = match_root_system(g, root_decomposition(g));
    ASSERT_EQ(m.types.size(), 1u);
    EXPECT_EQ(m.types[0].family, Family::G);
    EXPECT_TRUE(m.bijective);
}

TEST(InvariantForms, TripleProduct)
{
    for (const auto& g : {sl(2), sl(3), so(5)}) {
        auto t = triple_product_invariant(g);
        EXPECT_EQ(t.dim, 1u);
        EXPECT_TRUE(t.simple);
    }
    auto t = triple_product_invariant(abelian(3));
    EXPECT_EQ(t.dim, 1u);
    EXPECT_FALSE(t.simple);
}

TEST(CentralExtension, TorusGivesHeisenberg)
{
    auto c = two_cocycles(abelian(2));
    ASSERT_EQ(c.size(), 1u);
    QMatrix omega = c[0].scaled(1 / c[0](0, 1));
    EXPECT_EQ(omega(1, 0), -1);
    EXPECT_EQ(central_extension(abelian(2), omega), heisenberg());
    // Every 2-cocycle of sl(2) is a coboundary: Z^2 = B^2 = d(g^*), of dimension 3.
    EXPECT_EQ(two_cocycles(sl(2)).size(), 3u);
}

TEST(Constructions, DirectSumAndChangeOfBasis)
{
    auto g = direct_sum(sl(2), heisenberg());
    EXPECT_EQ(g.dim(), 6u);
    EXPECT_EQ(ce_cohomology(g)[1], 2u);
    QMatrix p = QMatrix::identity(3);
    p(0, 1) = 1;
    p(2, 0) = -2;
    auto h = change_basis(sl(2), p);
    EXPECT_TRUE(is_semisimple(h));
    EXPECT_EQ(poincare_polynomial(ce_cohomology(h)), (IntPoly({1, 0, 0, 1})));
    auto v = semidirect(sl(2), sl2_irrep(sl(2), 1));
    EXPECT_EQ(v.dim(), 5u);
    EXPECT_FALSE(is_semisimple(v));
    EXPECT_FALSE(is_solvable(v));
}
