#include "liekit/selftest.hpp"

#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "liekit/chars.hpp"
#include "liekit/error.hpp"
#include "liekit/freelie.hpp"
#include "liekit/rootsys.hpp"
#include "liekit/symfun.hpp"
#include "liekit/voganforms.hpp"
#include "liekit/weyl.hpp"

namespace liekit {

namespace {

// Thrown by check() on the first failed property; carries the message.
struct Failure {
    std::string what;
};

void check(bool ok, const std::string& what)
{
    if (!ok)
        throw Failure{what};
}

int uniform(std::mt19937_64& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::vector<CartanType> all_types(int max_rank)
{
    std::vector<CartanType> out;
    for (int r = 1; r <= max_rank; ++r)
        out.push_back({Family::A, r});
    for (int r = 2; r <= max_rank; ++r)
        out.push_back({Family::B, r});
    for (int r = 3; r <= max_rank; ++r)
        out.push_back({Family::C, r});
    for (int r = 4; r <= max_rank; ++r)
        out.push_back({Family::D, r});
    out.push_back({Family::G, 2});
    if (max_rank >= 4)
        out.push_back({Family::F, 4});
    for (int r = 6; r <= std::min(max_rank, 8); ++r)
        out.push_back({Family::E, r});
    return out;
}

IVec random_dominant(std::mt19937_64& rng, int rank, int hi)
{
    IVec w(rank);
    for (auto& x : w)
        x = uniform(rng, 0, hi);
    return w;
}

WeylWord random_word(std::mt19937_64& rng, int rank, int max_len)
{
    WeylWord w;
    int len = uniform(rng, 0, max_len);
    for (int k = 0; k < len; ++k)
        w.letters.push_back(uniform(rng, 1, rank));
    return w;
}

std::size_t suite_rootsys(std::mt19937_64&)
{
    std::size_t cases = 0;
    for (auto t : all_types(8)) {
        auto rs = RootSystem::build(t);
        const auto name = t.name();
        const int r = rs.rank();
        std::size_t h1 = 0;
        for (const auto& a : rs.positive_roots()) {
            if (RootSystem::height(a) == 1)
                ++h1;
            IVec neg = a;
            for (auto& x : neg)
                x = -x;
            check(rs.is_root(neg), name + ": roots not symmetric");
        }
        check(h1 == static_cast<std::size_t>(r), name + ": simple root count");
        for (const auto& a : rs.roots())
            for (int i = 0; i < r; ++i)
                check(rs.is_root(rs.reflect_root(i, a)), name + ": not closed under reflections");
        auto ex = exponents(rs);
        auto [h, hv] = coxeter_numbers(rs);
        int64_t sum = 0;
        for (int e : ex)
            sum += e;
        check(sum == static_cast<int64_t>(rs.positive_roots().size()), name + ": sum of exponents");
        check(ex.back() + 1 == h, name + ": largest exponent");
        for (int i = 0; i < r; ++i)
            check(ex[i] + ex[r - 1 - i] == h, name + ": exponent duality");
        check(highest_root(rs).height + 1 == h, name + ": height of theta");
        Integer det = cartan_determinant(rs);
        check(Integer(minuscule_weights(rs).size()) == det, name + ": minuscule count");
        Integer order = 1;
        for (const auto& n : weight_lattice_quotient(rs))
            order *= n;
        check(order == det, name + ": |P/Q|");
        auto dd = dual_root_system(dual_root_system(rs));
        check(dd.cartan() == rs.cartan(), name + ": double dual");
        IVec rh = rho(rs);
        for (int i = 0; i < r; ++i) {
            IVec ai(r, 0);
            ai[i] = 1;
            check(rs.coroot_pairing(rh, ai) == 1, name + ": (rho, alpha_i^vee)");
        }
        ++cases;
    }
    return cases;
}

std::size_t suite_weyl(std::mt19937_64& rng)
{
    std::size_t cases = 0;
    auto types = all_types(4);
    for (int trial = 0; trial < 200; ++trial) {
        auto t = types[uniform(rng, 0, static_cast<int>(types.size()) - 1)];
        auto rs = RootSystem::build(t);
        const int r = rs.rank();
        auto u = random_word(rng, r, 12), v = random_word(rng, r, 12);
        IVec lam(r);
        for (auto& x : lam)
            x = uniform(rng, -4, 4);
        const auto name = t.name();
        check(act(rs, u.inverse(), act(rs, u, lam)) == lam, name + ": w^-1 w != 1");
        check(length(rs, u) == length(rs, u.inverse()), name + ": l(w) != l(w^-1)");
        check(sign(rs, u * v) == sign(rs, u) * sign(rs, v), name + ": sign not multiplicative");
        check(length(rs, u) <= rs.positive_roots().size(), name + ": length too large");
        auto dom = to_dominant(rs, lam);
        check(is_dominant(dom.weight), name + ": to_dominant result not dominant");
        check(act(rs, dom.word, lam) == dom.weight, name + ": to_dominant word");
        for (int i = 0; i < r; ++i) {
            WeylWord si{{i + 1}};
            check(act(rs, si * si, lam) == lam, name + ": s_i^2 != 1");
        }
        ++cases;
    }
    for (auto t : all_types(4)) {
        auto rs = RootSystem::build(t);
        auto w0 = longest_element(rs);
        check(length(rs, w0.word) == rs.positive_roots().size(), t.name() + ": l(w0)");
        check(same_element(rs, w0.word * w0.word, WeylWord{}), t.name() + ": w0^2 != 1");
        ++cases;
    }
    return cases;
}

std::size_t suite_chars(std::mt19937_64& rng)
{
    std::size_t cases = 0;
    auto types = all_types(3);
    for (int trial = 0; trial < 40; ++trial) {
        auto t = types[uniform(rng, 0, static_cast<int>(types.size()) - 1)];
        auto rs = RootSystem::build(t);
        IVec lam = random_dominant(rng, rs.rank(), 2), mu = random_dominant(rng, rs.rank(), 1);
        const auto name = t.name() + " " + format_vec(lam);
        Integer d = dimension(rs, lam);
        if (d > 2000)
            continue;
        auto chi = character(rs, lam);
        check(chi.dimension() == d, name + ": multiplicity sum != Weyl dimension");
        auto lhs = denominator_times(rs, chi);
        auto rhs = alternating_sum(rs, lam);
        check(lhs == rhs, name + ": denominator identity");
        check(q_dimension(rs, lam).value_at_one() == d, name + ": q-dimension at 1");
        if (d * dimension(rs, mu) <= 20000) {
            auto a = tensor_decompose(rs, lam, mu);
            check(a == tensor_decompose_brauer(rs, lam, mu), name + ": peel != Brauer");
            check(decomposition_dimension(rs, a) == d * dimension(rs, mu), name + ": tensor dimension");
        }
        ++cases;
    }
    // Clebsch-Gordan for sl2.
    auto a1 = RootSystem::build("A1");
    for (int m = 0; m <= 8; ++m)
        for (int n = 0; n <= 8; ++n) {
            auto dec = tensor_decompose(a1, {m}, {n});
            Decomposition want;
            for (int k = std::abs(m - n); k <= m + n; k += 2)
                want[{k}] = 1;
            check(dec == want, "Clebsch-Gordan " + std::to_string(m) + "," + std::to_string(n));
            ++cases;
        }
    return cases;
}

std::size_t suite_freelie(std::mt19937_64& rng)
{
    std::size_t cases = 0;
    auto b = bch(6);
    for (int d = 1; d <= 6; ++d) {
        check(is_primitive(b.series.homogeneous(d)), "BCH degree " + std::to_string(d) + " not primitive");
        ++cases;
    }
    for (int trial = 0; trial < 30; ++trial) {
        int n = uniform(rng, 2, 3), deg = uniform(rng, 1, 4);
        LieElement e;
        e.alphabet = n;
        for (const auto& w : lyndon_words(n, deg))
            if (int c = uniform(rng, -2, 2); c != 0)
                e.coeffs[w] = c;
        auto s = e.expand(deg);
        check(is_primitive(s), "Lie element not primitive");
        auto back = lie_decompose(s);
        check(back.coeffs == e.coeffs, "Lyndon coordinates do not round trip");
        auto x = FreeSeries::letter(n, 5, 0, uniform(rng, 1, 3)) + FreeSeries::letter(n, 5, 1, uniform(rng, -3, -1));
        check(log(exp(x)) == x, "log exp != id");
        ++cases;
    }
    for (int n = 2; n <= 3; ++n) {
        auto wd = witt_dimensions(n, 6);
        for (int m = 1; m <= 6; ++m) {
            check(wd[m - 1] == Integer(lyndon_words(n, m).size()), "Witt dimension vs Lyndon count");
            ++cases;
        }
    }
    return cases;
}

std::size_t suite_liealg(std::mt19937_64& rng)
{
    std::size_t cases = 0;
    for (int trial = 0; trial < 100; ++trial) {
        auto ra = random_lie_algebra(rng);
        const auto& g = ra.g;
        const auto& name = ra.recipe;
        bool sol = is_solvable(g); // throws if the two criteria disagree
        check(sol == ra.solvable, name + ": solvable");
        check(is_nilpotent(g) == ra.nilpotent, name + ": nilpotent");
        auto k = killing_form(g);
        const std::size_t n = g.dim();
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z) {
                    Rational lhs = 0, rhs = 0;
                    for (const auto& [i, c] : g.bracket(x, y))
                        lhs += c * k(i, z);
                    for (const auto& [i, c] : g.bracket(x, z))
                        rhs += c * k(y, i);
                    check(lhs == -rhs, name + ": Killing form not invariant");
                }
        if (trial % 4 == 0) {
            auto betti = ce_cohomology(g);
            long euler = 0;
            for (std::size_t i = 0; i < betti.size(); ++i)
                euler += (i % 2 ? -1 : 1) * static_cast<long>(betti[i]);
            check(euler == 0, name + ": Euler characteristic");
            check(betti.front() == 1, name + ": H^0");
        }
        ++cases;
    }
    return cases;
}

std::size_t suite_symfun(std::mt19937_64& rng)
{
    std::size_t cases = 0;
    for (int n = 1; n <= 7; ++n) {
        Integer fact = 1;
        for (int i = 2; i <= n; ++i)
            fact *= i;
        Integer sq = 0;
        auto parts = partitions(n);
        for (const auto& lam : parts) {
            auto one = cycle_type(Partition(n, 1));
            Integer d = frobenius_character(lam, one);
            sq += d * d;
            check(conjugate(conjugate(lam)) == lam, partition_string(lam) + ": conjugate");
            check(content(lam) == content_formula(lam), partition_string(lam) + ": content");
            check(content(conjugate(lam)) == -content(lam), partition_string(lam) + ": content of conjugate");
            ++cases;
        }
        check(sq == fact, "sum of squares of dimensions for n = " + std::to_string(n));
    }
    for (int trial = 0; trial < 30; ++trial) {
        int n = uniform(rng, 1, 6);
        auto parts = partitions(n);
        auto lam = parts[uniform(rng, 0, static_cast<int>(parts.size()) - 1)];
        auto mu = parts[uniform(rng, 0, static_cast<int>(parts.size()) - 1)];
        auto m = cycle_type(mu);
        check(frobenius_character(conjugate(lam), m) == cycle_sign(m) * frobenius_character(lam, m),
              partition_string(lam) + ": sign twist");
        int big = uniform(rng, 1, 6);
        auto dp = schur_dim_poly(lam);
        check(dp.eval(Rational(big)) == Rational(schur_dim(lam, big)), partition_string(lam) + ": dimension polynomial");
        Integer total = 0;
        for (const auto& nu : pieri(lam, 1, big))
            total += schur_dim(nu, big);
        check(total == schur_dim(lam, big) * big, partition_string(lam) + ": Pieri dimension count");
        ++cases;
    }
    return cases;
}

std::size_t suite_qcomb(std::mt19937_64& rng)
{
    std::size_t cases = 0;
    for (int trial = 0; trial < 30; ++trial) {
        int m = uniform(rng, 0, 8), n = uniform(rng, 0, 8);
        auto g = gaussian_binomial(m, n);
        check(g == gaussian_binomial_ratio(m, n), "box DP != ratio");
        check(g == gaussian_binomial(n, m), "box symmetry");
        check(g == q_binomial(m + n, n), "q-binomial");
        Integer c = 1;
        for (int i = 1; i <= n; ++i)
            c = c * (m + i) / i;
        check(g.value_at_one() == c, "value at 1");
        ++cases;
    }
    for (int n = 1; n <= 6; ++n) {
        auto rs = RootSystem::build(CartanType{Family::A, std::max(n - 1, 1)});
        IntPoly want = n == 1 ? IntPoly::constant(1) : length_generating_function(rs);
        check(flag_poincare(n) == want, "flag(" + std::to_string(n) + ")");
        ++cases;
    }
    return cases;
}

std::size_t suite_voganforms(std::mt19937_64& rng)
{
    std::size_t cases = 0;
    auto types = all_types(6);
    for (int trial = 0; trial < 60; ++trial) {
        auto t = types[uniform(rng, 0, static_cast<int>(types.size()) - 1)];
        std::vector<int> blacks;
        for (int i = 0; i < t.rank; ++i)
            if (uniform(rng, 0, 2) == 0)
                blacks.push_back(i);
        auto vd = inner_diagram(t, blacks);
        auto base = classify(vd);
        auto rs = RootSystem::build(t);
        check(base.dim_k + base.dim_p == rs.num_roots() + static_cast<std::size_t>(t.rank),
              t.name() + ": dim k + dim p");
        auto canon = canonical_form(vd);
        for (int j : blacks) {
            auto f = flip(vd, j);
            check(canonical_form(f).rep == canon.rep, t.name() + ": flip changed the class");
            check(fixed_subalgebra_dims(f).dim_k == base.dim_k, t.name() + ": flip changed dim k");
        }
        ++cases;
    }
    return cases;
}

const std::vector<std::pair<std::string, std::function<std::size_t(std::mt19937_64&)>>>& registry()
{
    static const std::vector<std::pair<std::string, std::function<std::size_t(std::mt19937_64&)>>> r = {
        {"rootsys", suite_rootsys}, {"weyl", suite_weyl},     {"chars", suite_chars},
        {"freelie", suite_freelie}, {"liealg", suite_liealg}, {"symfun", suite_symfun},
        {"qcomb", suite_qcomb},     {"voganforms", suite_voganforms},
    };
    return r;
}

struct Block {
    LieAlgebra g;
    bool solvable, nilpotent;
    std::string name;
};

std::vector<Block> blocks()
{
    auto s2 = sl(2);
    LieAlgebra xy({"x", "y"}, {{0, 1, {{1, Rational(1)}}}});
    return {
        {s2, false, false, "sl2"},
        {heisenberg(), true, true, "heis"},
        {abelian(1), true, true, "ab1"},
        {abelian(2), true, true, "ab2"},
        {xy, true, false, "aff1"},
        {upper_triangular(2), true, false, "b2"},
        {upper_triangular(3), true, false, "b3"},
        {strictly_upper_triangular(4), true, true, "n4"},
        {semidirect(s2, sl2_irrep(s2, 1)), false, false, "sl2+V1"},
        {semidirect(s2, sl2_irrep(s2, 2)), false, false, "sl2+V2"},
        {gl(2), false, false, "gl2"},
    };
}

} // namespace

RandomAlgebra random_lie_algebra(std::mt19937_64& rng, std::size_t max_dim)
{
    static const std::vector<Block> pool = blocks();
    std::vector<const Block*> chosen;
    std::size_t dim = 0;
    for (;;) {
        std::vector<const Block*> fit;
        for (const auto& b : pool)
            if (dim + b.g.dim() <= max_dim)
                fit.push_back(&b);
        if (fit.empty() || (!chosen.empty() && uniform(rng, 0, 2) == 0))
            break;
        chosen.push_back(fit[uniform(rng, 0, static_cast<int>(fit.size()) - 1)]);
        dim += chosen.back()->g.dim();
    }
    if (chosen.empty())
        throw std::invalid_argument("max_dim too small for any block");

    RandomAlgebra out{chosen.front()->g, true, true, ""};
    for (std::size_t i = 0; i < chosen.size(); ++i) {
        if (i > 0) {
            out.g = direct_sum(out.g, chosen[i]->g);
            out.recipe += "+";
        }
        out.recipe += chosen[i]->name;
        out.solvable = out.solvable && chosen[i]->solvable;
        out.nilpotent = out.nilpotent && chosen[i]->nilpotent;
    }
    const std::size_t n = out.g.dim();
    QMatrix p(n, n);
    do {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                p(i, j) = uniform(rng, -2, 2);
    } while (determinant(p) == 0);
    out.g = change_basis(out.g, p);
    return out;
}

std::vector<std::string> selftest_suites()
{
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry())
        out.push_back(name);
    return out;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed)
{
    const auto& reg = registry();
    for (std::size_t idx = 0; idx < reg.size(); ++idx) {
        const auto& [n, fn] = reg[idx];
        if (n != name)
            continue;
        // Each suite gets its own stream so that one can be replayed alone.
        std::seed_seq seq{seed, static_cast<std::uint64_t>(idx)};
        std::mt19937_64 rng(seq);
        SuiteResult res;
        res.name = name;
        auto t0 = std::chrono::steady_clock::now();
        try {
            res.cases = fn(rng);
        } catch (const Failure& f) {
            res.passed = false;
            res.detail = f.what;
        } catch (const std::exception& e) {
            res.passed = false;
            res.detail = std::string("exception: ") + e.what();
        }
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return res;
    }
    throw std::invalid_argument("unknown selftest suite: " + name);
}

std::vector<SuiteResult> run_selftest(std::uint64_t seed, const std::vector<std::string>& only)
{
    std::vector<SuiteResult> out;
    if (only.empty()) {
        for (const auto& name : selftest_suites())
            out.push_back(run_suite(name, seed));
    } else {
        for (const auto& name : only)
            out.push_back(run_suite(name, seed));
    }
    return out;
}

} // namespace liekit
