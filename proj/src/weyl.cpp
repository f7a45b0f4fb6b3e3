#include "liekit/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "liekit/error.hpp"

namespace liekit {

namespace {

void check_letters(const RootSystem& rs, const WeylWord& w)
{
    for (int a : w.letters)
        if (a < 1 || a > rs.rank())
            throw IndexOutOfRange("letter " + std::to_string(a) + " outside 1.." + std::to_string(rs.rank()));
}

template <class V>
bool positive_coord(const V& v, std::size_t i)
{
    return v[i] > 0;
}

// Visits the orbit of a dominant weight one layer at a time. Layer k holds the
// weights w(lambda) with w a minimal coset representative of length k; from mu the
// next layer is reached by s_i whenever <mu, alpha_i^vee> > 0.
template <class V, class Hash, class F>
void walk_orbit(const RootSystem& rs, const V& dominant, std::size_t cap, F&& visit)
{
    std::vector<V> cur{dominant};
    std::size_t total = 0;
    for (std::size_t depth = 0; !cur.empty(); ++depth) {
        total += cur.size();
        if (total > cap)
            throw OrbitTooLarge("orbit exceeds the cap of " + std::to_string(cap) + " elements");
        std::unordered_set<V, Hash> next;
        for (const auto& mu : cur) {
            visit(depth, mu);
            for (int i = 0; i < rs.rank(); ++i)
                if (positive_coord(mu, i))
                    next.insert(rs.reflect_weight(i, mu));
        }
        cur.assign(next.begin(), next.end());
        std::sort(cur.begin(), cur.end());
    }
}

struct QVecHash {
    std::size_t operator()(const QVec& v) const noexcept
    {
        std::size_t h = 0x51ed27;
        for (const auto& x : v) {
            std::size_t e = mpz_get_si(x.get_num_mpz_t()) * 1000003u + mpz_get_si(x.get_den_mpz_t());
            h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

} // namespace

IVec act(const RootSystem& rs, const WeylWord& w, IVec weight)
{
    check_letters(rs, w);
    if (static_cast<int>(weight.size()) != rs.rank())
        throw DimensionMismatch("weight length");
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        weight = rs.reflect_weight(*it - 1, std::move(weight));
    return weight;
}

QVec act(const RootSystem& rs, const WeylWord& w, QVec weight)
{
    check_letters(rs, w);
    if (static_cast<int>(weight.size()) != rs.rank())
        throw DimensionMismatch("weight length");
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        weight = rs.reflect_weight(*it - 1, std::move(weight));
    return weight;
}

IVec act_on_root(const RootSystem& rs, const WeylWord& w, IVec root)
{
    check_letters(rs, w);
    if (static_cast<int>(root.size()) != rs.rank())
        throw DimensionMismatch("root length");
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        root = rs.reflect_root(*it - 1, std::move(root));
    return root;
}

IMatrix action_matrix(const RootSystem& rs, const WeylWord& w)
{
    const int r = rs.rank();
    IMatrix m(r, r);
    for (int j = 0; j < r; ++j) {
        IVec e(r, 0);
        e[j] = 1;
        IVec img = act(rs, w, e);
        for (int i = 0; i < r; ++i)
            m(i, j) = img[i];
    }
    return m;
}

bool same_element(const RootSystem& rs, const WeylWord& u, const WeylWord& v)
{
    return action_matrix(rs, u) == action_matrix(rs, v);
}

std::size_t length(const RootSystem& rs, const WeylWord& w)
{
    std::size_t n = 0;
    for (const auto& a : rs.positive_roots()) {
        IVec img = act_on_root(rs, w, a);
        if (std::any_of(img.begin(), img.end(), [](int64_t x) { return x < 0; }))
            ++n;
    }
    return n;
}

IVec reflect_by_root(const RootSystem& rs, const IVec& alpha, const IVec& beta)
{
    int64_t c = rs.coroot_pairing(rs.root_to_weight(beta), alpha);
    IVec out = beta;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] -= c * alpha[i];
    return out;
}

namespace {

template <class V, class Out>
Out descend(const RootSystem& rs, V weight)
{
    if (static_cast<int>(weight.size()) != rs.rank())
        throw DimensionMismatch("weight length");
    std::vector<int> applied;
    for (;;) {
        int i = 0;
        while (i < rs.rank() && weight[i] >= 0)
            ++i;
        if (i == rs.rank())
            break;
        weight = rs.reflect_weight(i, std::move(weight));
        applied.push_back(i + 1);
    }
    // Each step strictly increases the height of the weight, so the word is reduced
    // and its length is the number of steps.
    WeylWord w{std::vector<int>(applied.rbegin(), applied.rend())};
    int s = applied.size() % 2 ? -1 : 1;
    return Out{std::move(weight), std::move(w), s};
}

} // namespace

Dominant to_dominant(const RootSystem& rs, IVec weight)
{
    return descend<IVec, Dominant>(rs, std::move(weight));
}

DominantQ to_dominant(const RootSystem& rs, QVec weight)
{
    return descend<QVec, DominantQ>(rs, std::move(weight));
}

LongestElement longest_element(const RootSystem& rs)
{
    IVec neg(rs.rank(), -1);
    LongestElement out{to_dominant(rs, neg).word, {}};
    for (int i = 0; i < rs.rank(); ++i) {
        IVec e(rs.rank(), 0);
        e[i] = 1;
        IVec img = act(rs, out.word, e);
        int target = -1;
        for (int j = 0; j < rs.rank(); ++j)
            if (img[j] == -1 && target < 0)
                target = j;
            else if (img[j] != 0)
                target = -2;
        out.diagram_automorphism.push_back(target);
    }
    return out;
}

std::vector<IVec> orbit(const RootSystem& rs, const IVec& weight, std::size_t cap)
{
    IVec dom = to_dominant(rs, weight).weight;
    std::vector<IVec> out;
    walk_orbit<IVec, IVecHash>(rs, dom, cap, [&](std::size_t, const IVec& mu) { out.push_back(mu); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<QVec> orbit(const RootSystem& rs, const QVec& weight, std::size_t cap)
{
    QVec dom = to_dominant(rs, weight).weight;
    std::vector<QVec> out;
    walk_orbit<QVec, QVecHash>(rs, dom, cap, [&](std::size_t, const QVec& mu) { out.push_back(mu); });
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t orbit_size(const RootSystem& rs, const IVec& weight, std::size_t cap)
{
    IVec dom = to_dominant(rs, weight).weight;
    std::size_t n = 0;
    walk_orbit<IVec, IVecHash>(rs, dom, cap, [&](std::size_t, const IVec&) { ++n; });
    return n;
}

IntPoly length_generating_function(const RootSystem& rs, std::size_t cap)
{
    // The stabilizer of rho is trivial, so the orbit of rho is a copy of W with
    // the layer index equal to the length.
    std::vector<Integer> coeffs;
    walk_orbit<IVec, IVecHash>(rs, rho(rs), cap, [&](std::size_t depth, const IVec&) {
        if (coeffs.size() <= depth)
            coeffs.resize(depth + 1, Integer(0));
        ++coeffs[depth];
    });
    return IntPoly(std::move(coeffs));
}

Integer group_order(const RootSystem& rs, std::size_t cap)
{
    return length_generating_function(rs, cap).value_at_one();
}

std::vector<WeylWord> enumerate_elements(const RootSystem& rs, std::size_t cap)
{
    std::vector<WeylWord> out;
    std::vector<std::pair<IVec, WeylWord>> cur{{rho(rs), WeylWord{}}};
    while (!cur.empty()) {
        std::map<IVec, WeylWord> next;
        for (auto& [mu, w] : cur) {
            out.push_back(w);
            if (out.size() > cap)
                throw OrbitTooLarge("group exceeds the cap of " + std::to_string(cap) + " elements");
            for (int i = 0; i < rs.rank(); ++i)
                if (mu[i] > 0) {
                    IVec nu = rs.reflect_weight(i, mu);
                    if (!next.count(nu)) {
                        WeylWord v{{i + 1}};
                        next.emplace(std::move(nu), v * w);
                    }
                }
        }
        cur.assign(next.begin(), next.end());
    }
    return out;
}

} // namespace liekit
