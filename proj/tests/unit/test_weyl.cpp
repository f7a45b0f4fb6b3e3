#include <gtest/gtest.h>

#include <map>
#include <queue>
#include <random>
#include <set>

#include "liekit/error.hpp"
#include "liekit/weyl.hpp"

using namespace liekit;

namespace {

// Reflection on fundamental coordinates straight from the Cartan matrix:
// alpha_i has fundamental coordinates given by column i of A.
IVec reflect(const CartanMatrix& a, int i, IVec w)
{
    const int64_t c = w[i];
    for (int k = 0; k < a.rank(); ++k)
        w[k] -= c * a(k, i);
    return w;
}

// BFS over group elements, identified by the image of rho (regular weight).
std::map<IVec, std::size_t> bfs_lengths(const RootSystem& rs)
{
    std::map<IVec, std::size_t> dist;
    std::queue<IVec> q;
    IVec r(rs.rank(), 1);
    dist[r] = 0;
    q.push(r);
    while (!q.empty()) {
        auto v = q.front();
        q.pop();
        for (int i = 0; i < rs.rank(); ++i) {
            auto u = reflect(rs.cartan(), i, v);
            if (!dist.count(u)) {
                dist[u] = dist[v] + 1;
                q.push(u);
            }
        }
    }
    return dist;
}

} // namespace

TEST(Act, SimpleReflectionOfRho)
{
    auto rs = RootSystem::build("B3");
    IVec r = rho(rs);
    for (int i = 0; i < 3; ++i) {
        IVec e(3, 0);
        e[i] = 1;
        IVec want = r;
        auto ai = rs.root_to_weight(e);
        for (int k = 0; k < 3; ++k)
            want[k] -= ai[k];
        EXPECT_EQ(act(rs, WeylWord{{i + 1}}, r), want);
    }
    EXPECT_EQ(act(rs, WeylWord{}, r), r);
}

TEST(Act, A2Example)
{
    auto rs = RootSystem::build("A2");
    auto s1 = [&](IVec w) { return reflect(rs.cartan(), 0, w); };
    auto s2 = [&](IVec w) { return reflect(rs.cartan(), 1, w); };
    IVec want = s1(s2(s1({1, 0})));
    EXPECT_EQ(want, (IVec{0, -1}));
    EXPECT_EQ(act(rs, WeylWord{{1, 2, 1}}, IVec{1, 0}), want);
    EXPECT_THROW(act(rs, WeylWord{{3}}, IVec{1, 0}), IndexOutOfRange);
}

TEST(Act, IsometryOfPairing)
{
    auto rs = RootSystem::build("G2");
    IVec x{1, 2}, y{3, -1};
    WeylWord w{{1, 2, 2, 1, 2}};
    auto px = pairing(rs, LatticeVector::weight(x), LatticeVector::weight(y));
    auto py = pairing(rs, LatticeVector::weight(act(rs, w, x)), LatticeVector::weight(act(rs, w, y)));
    EXPECT_EQ(px, py);
}

TEST(Length, Examples)
{
    auto a2 = RootSystem::build("A2");
    EXPECT_EQ(length(a2, WeylWord{{1}}), 1u);
    EXPECT_EQ(length(a2, WeylWord{{1, 2}}), 2u);
    EXPECT_EQ(length(a2, WeylWord{{1, 1}}), 0u);
    for (auto name : {"A3", "B3", "G2", "F4", "D5"}) {
        auto rs = RootSystem::build(name);
        EXPECT_EQ(length(rs, longest_element(rs).word), rs.positive_roots().size()) << name;
    }
}

TEST(Length, MatchesBfsDistance)
{
    for (auto name : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"}) {
        auto rs = RootSystem::build(name);
        auto dist = bfs_lengths(rs);
        auto elems = enumerate_elements(rs);
        EXPECT_EQ(elems.size(), dist.size()) << name;
        for (const auto& w : elems) {
            auto img = act(rs, w, rho(rs));
            ASSERT_TRUE(dist.count(img));
            EXPECT_EQ(length(rs, w), dist[img]) << name;
            EXPECT_EQ(length(rs, w), w.letters.size()) << name;
            EXPECT_EQ(length(rs, w), length(rs, w.inverse()));
        }
    }
}

TEST(Length, SignIsAHomomorphism)
{
    std::mt19937_64 rng(7);
    auto rs = RootSystem::build("D4");
    std::uniform_int_distribution<int> letter(1, 4), len(0, 10);
    for (int t = 0; t < 100; ++t) {
        WeylWord u, v;
        for (int k = len(rng); k > 0; --k)
            u.letters.push_back(letter(rng));
        for (int k = len(rng); k > 0; --k)
            v.letters.push_back(letter(rng));
        EXPECT_EQ(sign(rs, u * v), sign(rs, u) * sign(rs, v));
    }
}

TEST(LongestElement, B2IsMinusOne)
{
    auto rs = RootSystem::build("B2");
    auto elems = enumerate_elements(rs);
    ASSERT_EQ(elems.size(), 8u);
    // The unique element sending every weight to its negative, found by search.
    std::size_t count = 0;
    for (const auto& w : elems)
        if (act(rs, w, IVec{1, 0}) == IVec{-1, 0} && act(rs, w, IVec{0, 1}) == IVec{0, -1}) {
            ++count;
            EXPECT_TRUE(same_element(rs, w, longest_element(rs).word));
        }
    EXPECT_EQ(count, 1u);
    EXPECT_EQ(longest_element(rs).diagram_automorphism, (std::vector<int>{0, 1}));
}

TEST(LongestElement, AFlipsTheChain)
{
    for (int r = 1; r <= 6; ++r) {
        auto rs = RootSystem::build(CartanType{Family::A, r});
        auto w0 = longest_element(rs);
        for (int i = 0; i < r; ++i)
            EXPECT_EQ(w0.diagram_automorphism[i], r - 1 - i);
        EXPECT_TRUE(same_element(rs, w0.word * w0.word, WeylWord{}));
    }
    auto a1 = RootSystem::build("A1");
    EXPECT_TRUE(same_element(a1, longest_element(a1).word, WeylWord{{1}}));
}

TEST(LongestElement, SendsDominantToAntidominant)
{
    auto rs = RootSystem::build("E6");
    auto w0 = longest_element(rs);
    auto img = act(rs, w0.word, rho(rs));
    for (auto x : img)
        EXPECT_EQ(x, -1);
}

TEST(Orbit, Sizes)
{
    for (int n = 2; n <= 7; ++n) {
        auto rs = RootSystem::build(CartanType{Family::A, n - 1});
        IVec w1(n - 1, 0);
        w1[0] = 1;
        EXPECT_EQ(orbit(rs, w1).size(), static_cast<std::size_t>(n));
    }
    auto b4 = RootSystem::build("B4");
    EXPECT_EQ(orbit(b4, IVec{0, 0, 0, 1}).size(), 16u);
    EXPECT_EQ(orbit(b4, IVec{0, 0, 0, 0}), (std::vector<IVec>{{0, 0, 0, 0}}));
    auto orb = orbit(b4, IVec{1, 0, 1, 0});
    EXPECT_TRUE(std::is_sorted(orb.begin(), orb.end()));
}

TEST(Orbit, CapIsEnforced)
{
    auto e8 = RootSystem::build("E8");
    EXPECT_THROW(orbit(e8, IVec(8, 1), 10000), OrbitTooLarge);
    EXPECT_EQ(orbit_size(e8, IVec{0, 0, 0, 0, 0, 0, 0, 1}), 240u);
}

TEST(ToDominant, Examples)
{
    auto a1 = RootSystem::build("A1");
    auto d = to_dominant(a1, IVec{-3});
    EXPECT_EQ(d.weight, (IVec{3}));
    EXPECT_EQ(d.word, (WeylWord{{1}}));
    EXPECT_EQ(d.sign, -1);

    auto b3 = RootSystem::build("B3");
    auto same = to_dominant(b3, IVec{1, 0, 2});
    EXPECT_EQ(same.weight, (IVec{1, 0, 2}));
    EXPECT_TRUE(same.word.letters.empty());
    EXPECT_EQ(same.sign, 1);

    // Oracle: search the six elements of W(A2) for the one that makes (-1,-1) dominant.
    // It is w0, of length 3, so the sign is -1.
    auto a2 = RootSystem::build("A2");
    auto got = to_dominant(a2, IVec{-1, -1});
    EXPECT_EQ(got.weight, (IVec{1, 1}));
    int hits = 0;
    for (const auto& w : enumerate_elements(a2))
        if (act(a2, w, IVec{-1, -1}) == IVec{1, 1}) {
            ++hits;
            EXPECT_EQ(got.sign, sign(a2, w));
            EXPECT_EQ(length(a2, w), 3u);
        }
    EXPECT_EQ(hits, 1);
}

TEST(GroupOrder, Examples)
{
    auto a2 = RootSystem::build("A2");
    EXPECT_EQ(group_order(a2), 6);
    EXPECT_EQ(length_generating_function(a2), (IntPoly({1, 2, 2, 1})));
    EXPECT_EQ(length_generating_function(RootSystem::build("A1")), (IntPoly({1, 1})));
    auto g2 = RootSystem::build("G2");
    EXPECT_EQ(group_order(g2), bfs_lengths(g2).size());
    EXPECT_EQ(group_order(RootSystem::build("F4")), 1152);
    EXPECT_EQ(group_order(RootSystem::build("E6")), 51840);
    for (auto name : {"B3", "C4", "D4", "G2"}) {
        auto rs = RootSystem::build(name);
        EXPECT_EQ(length_generating_function(rs).value_at_one(), group_order(rs));
    }
}

TEST(Reflections, EveryRootReflectionPermutesRoots)
{
    for (auto name : {"B3", "G2", "F4"}) {
        auto rs = RootSystem::build(name);
        auto roots = rs.roots();
        std::set<IVec> all(roots.begin(), roots.end());
        for (const auto& a : rs.positive_roots()) {
            std::set<IVec> img;
            for (const auto& b : roots)
                img.insert(reflect_by_root(rs, a, b));
            EXPECT_EQ(img, all) << name;
        }
    }
}
