#include "liekit/symfun.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>

#include "liekit/chars.hpp"
#include "liekit/error.hpp"
#include "liekit/linalg.hpp"
#include "liekit/rootsys.hpp"

namespace liekit {

namespace {

Rational frac(long a, long b)
{
    Rational q(a, b);
    q.canonicalize();
    return q;
}

} // namespace

Partition make_partition(std::vector<int> parts)
{
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw NotPartition("parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw NotPartition("parts must be weakly decreasing");
    }
    return parts;
}

int size(const Partition& p)
{
    return std::accumulate(p.begin(), p.end(), 0);
}

Partition conjugate(const Partition& p)
{
    Partition out(p.empty() ? 0 : static_cast<std::size_t>(p[0]), 0);
    for (int row : p)
        for (int j = 0; j < row; ++j)
            ++out[static_cast<std::size_t>(j)];
    return out;
}

std::string partition_string(const Partition& p)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < p.size(); ++i)
        os << (i ? "," : "") << p[i];
    os << ')';
    return os.str();
}

long content(const Partition& p)
{
    long c = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j)
            c += j - static_cast<long>(i);
    return c;
}

long content_formula(const Partition& p)
{
    long twice = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        long l = p[i], r = static_cast<long>(i) + 1;
        twice += l * (l - 2 * r + 1);
    }
    return twice / 2;
}

namespace {

void partitions_rec(int left, int cap, Partition& cur, std::vector<Partition>& out)
{
    if (left == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(left, cap); k >= 1; --k) {
        cur.push_back(k);
        partitions_rec(left - k, k, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions(int n)
{
    std::vector<Partition> out;
    Partition cur;
    if (n >= 0)
        partitions_rec(n, n, cur, out);
    return out;
}

// ---------------------------------------------------------------- SparsePoly

void SparsePoly::add(const IVec& exps, const Integer& c)
{
    if (c == 0)
        return;
    auto [it, fresh] = terms.try_emplace(exps, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms.erase(it);
    }
}

Integer SparsePoly::eval(const std::vector<Integer>& x) const
{
    if (x.size() != nvars)
        throw DimensionMismatch("need one value per variable");
    Integer s = 0;
    for (const auto& [e, c] : terms) {
        Integer t = c;
        for (std::size_t i = 0; i < nvars; ++i) {
            Integer p;
            mpz_pow_ui(p.get_mpz_t(), x[i].get_mpz_t(), static_cast<unsigned long>(e[i]));
            t *= p;
        }
        s += t;
    }
    return s;
}

bool SparsePoly::is_symmetric() const
{
    for (const auto& [e, c] : terms)
        for (std::size_t i = 0; i + 1 < nvars; ++i) {
            IVec f = e;
            std::swap(f[i], f[i + 1]);
            auto it = terms.find(f);
            if (it == terms.end() || it->second != c)
                return false;
        }
    return true;
}

std::string SparsePoly::to_string() const
{
    if (terms.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    // Highest exponents first reads most naturally.
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [e, c] = *it;
        bool constant = std::all_of(e.begin(), e.end(), [](int64_t x) { return x == 0; });
        Integer mag = abs(c);
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        first = false;
        if (constant || mag != 1)
            os << mag.get_str() << (constant ? "" : "*");
        bool lead = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            os << (lead ? "" : "*") << "x" << i + 1;
            if (e[i] > 1)
                os << "^" << e[i];
            lead = false;
        }
    }
    return os.str();
}

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b)
{
    SparsePoly out = a;
    out.nvars = std::max(a.nvars, b.nvars);
    for (const auto& [e, c] : b.terms)
        out.add(e, c);
    return out;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b)
{
    if (a.nvars != b.nvars)
        throw DimensionMismatch("variable counts differ");
    SparsePoly out{a.nvars, {}};
    for (const auto& [e, c] : a.terms)
        for (const auto& [f, d] : b.terms) {
            IVec g = e;
            for (std::size_t i = 0; i < g.size(); ++i)
                g[i] += f[i];
            out.add(g, c * d);
        }
    return out;
}

namespace {

void monomials_rec(std::size_t i, int left, int cap, IVec& cur, SparsePoly& out)
{
    if (i == cur.size()) {
        if (left == 0)
            out.add(cur, 1);
        return;
    }
    for (int k = 0; k <= std::min(left, cap); ++k) {
        cur[i] = k;
        monomials_rec(i + 1, left - k, cap, cur, out);
    }
    cur[i] = 0;
}

} // namespace

SparsePoly complete_symmetric(int m, std::size_t n)
{
    SparsePoly out{n, {}};
    IVec cur(n, 0);
    if (m >= 0)
        monomials_rec(0, m, m, cur, out);
    return out;
}

SparsePoly elementary_symmetric(int m, std::size_t n)
{
    SparsePoly out{n, {}};
    IVec cur(n, 0);
    if (m >= 0)
        monomials_rec(0, m, 1, cur, out);
    return out;
}

// ---------------------------------------------------------------- Schur polynomials

SparsePoly schur_poly(const Partition& lambda_in, std::size_t n)
{
    Partition lambda = make_partition(lambda_in);
    SparsePoly out{n, {}};
    if (lambda.size() > n || n == 0)
        return out;
    const int total = size(lambda);
    if (n == 1) {
        out.add(IVec{total}, 1);
        return out;
    }
    std::vector<int> padded(lambda.begin(), lambda.end());
    padded.resize(n, 0);
    IVec mu(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
        mu[i] = padded[i] - padded[i + 1];
    RootSystem rs = RootSystem::build("A" + std::to_string(n - 1));
    FormalCharacter chi = character(rs, mu);
    // Exponents e with e_i - e_{i+1} = nu_i and sum e = |lambda|.
    for (const auto& [nu, mult] : chi.terms) {
        int64_t weighted = 0;
        for (std::size_t j = 0; j + 1 < n; ++j)
            weighted += static_cast<int64_t>(j + 1) * nu[j];
        int64_t last = (total - weighted) / static_cast<int64_t>(n);
        IVec e(n);
        e[n - 1] = last;
        for (std::size_t i = n - 1; i-- > 0;)
            e[i] = e[i + 1] + nu[i];
        out.add(e, mult);
    }
    return out;
}

Integer schur_bialternant(const Partition& lambda_in, const std::vector<Integer>& x)
{
    Partition lambda = make_partition(lambda_in);
    const std::size_t n = x.size();
    if (lambda.size() > n)
        return 0;
    std::vector<int> l(lambda.begin(), lambda.end());
    l.resize(n, 0);
    QMatrix num(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Integer p;
            mpz_pow_ui(p.get_mpz_t(), x[i].get_mpz_t(), static_cast<unsigned long>(l[j] + static_cast<int>(n - 1 - j)));
            num(i, j) = p;
        }
    Rational vdm = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            vdm *= Rational(x[i] - x[j]);
    if (vdm == 0)
        throw DimensionMismatch("bialternant needs distinct points");
    Rational v = determinant(num) / vdm;
    if (!is_integer(v))
        throw std::logic_error("bialternant is not an integer");
    return v.get_num();
}

Integer schur_dim(const Partition& lambda_in, int n)
{
    Partition lambda = make_partition(lambda_in);
    if (n < 0 || lambda.size() > static_cast<std::size_t>(n))
        return 0;
    std::vector<long> l(lambda.begin(), lambda.end());
    l.resize(static_cast<std::size_t>(n), 0);
    Rational v = 1;
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j)
            v *= frac(l[static_cast<std::size_t>(i)] - l[static_cast<std::size_t>(j)] + j - i, j - i);
    return v.get_num();
}

RatPoly schur_dim_poly(const Partition& lambda_in)
{
    Partition lambda = make_partition(lambda_in);
    const long k = static_cast<long>(lambda.size());
    Rational scale = 1;
    for (long i = 0; i < k; ++i)
        for (long j = i + 1; j < k; ++j)
            scale *= frac(lambda[static_cast<std::size_t>(i)] - lambda[static_cast<std::size_t>(j)] + j - i, j - i);
    RatPoly p = RatPoly::constant(1);
    // prod_i prod_{t=1}^{lambda_i} (N + t - i) / (k + t - i), rows i 1-based
    for (long i = 1; i <= k; ++i)
        for (long t = 1; t <= lambda[static_cast<std::size_t>(i - 1)]; ++t) {
            p *= RatPoly{Rational(t - i), Rational(1)};
            scale /= Rational(k + t - i);
        }
    return p.scaled(scale);
}

Integer narayana(int n, int k)
{
    if (n < 1 || k < 1 || k > n)
        return 0;
    Integer a, b;
    mpz_bin_uiui(a.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k - 1));
    return a * b / n;
}

// ---------------------------------------------------------------- Frobenius

CycleType cycle_type(const Partition& mu)
{
    Partition p = make_partition(mu);
    CycleType m(p.empty() ? 0 : static_cast<std::size_t>(p[0]), 0);
    for (int c : p)
        ++m[static_cast<std::size_t>(c - 1)];
    return m;
}

Integer centralizer_order(const CycleType& m)
{
    Integer z = 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
        Integer f, p;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m[i]));
        mpz_ui_pow_ui(p.get_mpz_t(), i + 1, static_cast<unsigned long>(m[i]));
        z *= f * p;
    }
    return z;
}

int cycle_sign(const CycleType& m)
{
    int odd = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (i % 2 == 1)
            odd += m[i];
    return odd % 2 ? -1 : 1;
}

namespace {

// Number of ways to give each cycle a variable so that exponents add up to e:
// the coefficient of x^e in prod_c p_{len c}.
class PowerSumCoefficient {
public:
    explicit PowerSumCoefficient(std::vector<int> cycles) : cycles_(std::move(cycles)) {}

    Integer operator()(const IVec& e) { return count(0, e); }

private:
    Integer count(std::size_t idx, const IVec& e)
    {
        if (idx == cycles_.size())
            return std::all_of(e.begin(), e.end(), [](int64_t x) { return x == 0; }) ? 1 : 0;
        auto key = std::make_pair(idx, e);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        Integer total = 0;
        IVec f = e;
        for (std::size_t i = 0; i < f.size(); ++i)
            if (f[i] >= cycles_[idx]) {
                f[i] -= cycles_[idx];
                total += count(idx + 1, f);
                f[i] += cycles_[idx];
            }
        memo_.emplace(std::move(key), total);
        return total;
    }

    std::vector<int> cycles_;
    std::map<std::pair<std::size_t, IVec>, Integer> memo_;
};

} // namespace

Integer frobenius_character(const Partition& lambda_in, const CycleType& m, std::size_t nvars)
{
    Partition lambda = make_partition(lambda_in);
    long weight = 0;
    std::vector<int> cycles;
    for (std::size_t i = m.size(); i-- > 0;) {
        if (m[i] < 0)
            throw SizeMismatch("negative cycle count");
        weight += static_cast<long>(i + 1) * m[i];
        for (int c = 0; c < m[i]; ++c)
            cycles.push_back(static_cast<int>(i + 1));
    }
    if (weight != size(lambda))
        throw SizeMismatch("|lambda| = " + std::to_string(size(lambda)) + " but the cycle type has weight " +
                           std::to_string(weight));
    const std::size_t n = nvars ? nvars : std::max<std::size_t>(1, static_cast<std::size_t>(size(lambda)));
    if (lambda.size() > n)
        throw SizeMismatch("fewer variables than parts");
    IVec target(n);
    for (std::size_t i = 0; i < n; ++i)
        target[i] = (i < lambda.size() ? lambda[i] : 0) + static_cast<int64_t>(n - 1 - i);
    // Vandermonde = sum_w sgn(w) x^{w(delta)}; pair each term with the power-sum product.
    PowerSumCoefficient coeff(std::move(cycles));
    std::vector<int64_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Integer chi = 0;
    do {
        IVec e(n);
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            e[i] = target[i] - (static_cast<int64_t>(n) - 1 - perm[i]);
            ok = e[i] >= 0;
        }
        if (!ok)
            continue;
        int inv = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                inv += perm[i] > perm[j];
        Integer c = coeff(e);
        chi += inv % 2 ? Integer(-c) : c;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return chi;
}

// ---------------------------------------------------------------- Pieri

namespace {

void strip_rec(std::size_t row, int left, Partition& cur, std::vector<Partition>& out)
{
    if (left == 0) {
        out.push_back(make_partition(cur));
        return;
    }
    if (row >= cur.size())
        return;
    // Row `row` may grow by one if it stays no longer than the (updated) row above.
    const int above = row == 0 ? INT32_MAX : cur[row - 1];
    if (cur[row] + 1 <= above) {
        ++cur[row];
        strip_rec(row + 1, left - 1, cur, out);
        --cur[row];
    }
    strip_rec(row + 1, left, cur, out);
}

} // namespace

std::vector<Partition> pieri(const Partition& lambda_in, int m, std::size_t max_parts)
{
    Partition lambda = make_partition(lambda_in);
    if (m < 1)
        throw DimensionMismatch("pieri needs m >= 1");
    Partition base = lambda;
    base.resize(lambda.size() + static_cast<std::size_t>(m), 0);
    Partition cur = base;
    std::vector<Partition> out;
    strip_rec(0, m, cur, out);
    if (max_parts)
        std::erase_if(out, [&](const Partition& p) { return p.size() > max_parts; });
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

// ---------------------------------------------------------------- q-combinatorics

IntPoly q_factorial(int n)
{
    IntPoly p = IntPoly::constant(1);
    for (int k = 1; k <= n; ++k)
        p *= q_integer(static_cast<std::size_t>(k));
    return p;
}

IntPoly gaussian_binomial(int m, int n)
{
    if (m < 0 || n < 0)
        return {};
    // B(a, b) = B(a-1, b) + q^a B(a, b-1): fewer than a parts, or exactly a parts.
    std::vector<std::vector<IntPoly>> b(static_cast<std::size_t>(m) + 1,
                                        std::vector<IntPoly>(static_cast<std::size_t>(n) + 1));
    for (int a = 0; a <= m; ++a)
        for (int c = 0; c <= n; ++c) {
            auto A = static_cast<std::size_t>(a), C = static_cast<std::size_t>(c);
            if (a == 0 || c == 0)
                b[A][C] = IntPoly::constant(1);
            else
                b[A][C] = b[A - 1][C] + IntPoly::monomial(A) * b[A][C - 1];
        }
    return b[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
}

IntPoly gaussian_binomial_ratio(int m, int n)
{
    if (m < 0 || n < 0)
        return {};
    return exact_div(q_factorial(m + n), q_factorial(m) * q_factorial(n));
}

IntPoly q_binomial(int n, int k)
{
    if (k < 0 || k > n)
        return {};
    return gaussian_binomial(k, n - k);
}

IntPoly gaussian_multinomial(const std::vector<int>& parts)
{
    int n = 0;
    IntPoly den = IntPoly::constant(1);
    for (int p : parts) {
        if (p < 0)
            throw DimensionMismatch("negative part");
        n += p;
        den *= q_factorial(p);
    }
    return exact_div(q_factorial(n), den);
}

std::vector<Integer> betti_from_poincare(const IntPoly& p)
{
    std::vector<Integer> b;
    for (long k = 0; k <= p.degree(); ++k) {
        if (k > 0)
            b.emplace_back(0);
        b.push_back(p.coeff(static_cast<std::size_t>(k)));
    }
    return b;
}

IntPoly grassmannian_poincare(int m, int n) { return gaussian_binomial(m, n); }
IntPoly flag_poincare(int n) { return q_factorial(n); }
IntPoly partial_flag_poincare(const std::vector<int>& dims) { return gaussian_multinomial(dims); }

// ---------------------------------------------------------------- Cauchy

bool cauchy_check(std::size_t r, std::size_t s, int d)
{
    if (r == 0 || s == 0 || r > 6 || s > 6 || d < 0 || d > 12)
        throw TooLarge("cauchy_check supports 1 <= r, s <= 6 and 0 <= d <= 12");
    const std::size_t nv = r + s;
    auto embed = [&](const SparsePoly& p, std::size_t offset) {
        SparsePoly out{nv, {}};
        for (const auto& [e, c] : p.terms) {
            IVec f(nv, 0);
            for (std::size_t i = 0; i < e.size(); ++i)
                f[offset + i] = e[i];
            out.add(f, c);
        }
        return out;
    };
    SparsePoly lhs{nv, {}};
    for (int k = 0; k <= d; ++k)
        for (const auto& lam : partitions(k)) {
            if (lam.size() > std::min(r, s))
                continue;
            lhs = lhs + embed(schur_poly(lam, r), 0) * embed(schur_poly(lam, s), r);
        }
    auto x_degree = [&](const IVec& e) {
        int64_t t = 0;
        for (std::size_t i = 0; i < r; ++i)
            t += e[i];
        return t;
    };
    SparsePoly rhs{nv, {}};
    rhs.add(IVec(nv, 0), 1);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            SparsePoly geo{nv, {}};
            for (int k = 0; k <= d; ++k) {
                IVec e(nv, 0);
                e[i] = e[r + j] = k;
                geo.add(e, 1);
            }
            SparsePoly next = rhs * geo;
            std::erase_if(next.terms, [&](const auto& t) { return x_degree(t.first) > d; });
            rhs = std::move(next);
        }
    return lhs == rhs;
}

} // namespace liekit
