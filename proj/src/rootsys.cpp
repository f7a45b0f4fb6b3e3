#include "liekit/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <numeric>

#include "liekit/error.hpp"

namespace liekit {

std::string CartanType::name() const
{
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

namespace {

void check_rank(CartanType t)
{
    bool ok = false;
    switch (t.family) {
    case Family::A: ok = t.rank >= 1; break;
    case Family::B: ok = t.rank >= 2; break;
    case Family::C: ok = t.rank >= 2; break;
    case Family::D: ok = t.rank >= 4; break;
    case Family::E: ok = t.rank >= 6 && t.rank <= 8; break;
    case Family::F: ok = t.rank == 4; break;
    case Family::G: ok = t.rank == 2; break;
    }
    if (!ok)
        throw UnsupportedType("no root system of type " + t.name());
}

} // namespace

std::vector<CartanType> parse_cartan_types(std::string_view text)
{
    std::vector<CartanType> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find_first_of("xX", pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view tok = text.substr(pos, end - pos);
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front())))
            tok.remove_prefix(1);
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back())))
            tok.remove_suffix(1);
        if (tok.size() < 2)
            throw ParseError("bad Dynkin type '" + std::string(text) + "'");
        char f = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
        if (f < 'A' || f > 'G')
            throw UnsupportedType("unknown family '" + std::string(1, tok[0]) + "'");
        int r = 0;
        for (char c : tok.substr(1)) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("bad rank in '" + std::string(tok) + "'");
            r = r * 10 + (c - '0');
            if (r > 1000)
                throw UnsupportedType("rank too large in '" + std::string(tok) + "'");
        }
        CartanType t{static_cast<Family>(f), r};
        check_rank(t);
        out.push_back(t);
        pos = end + 1;
    }
    return out;
}

std::string type_string(const std::vector<CartanType>& types)
{
    std::string s;
    for (std::size_t i = 0; i < types.size(); ++i) {
        if (i)
            s += "x";
        s += types[i].name();
    }
    return s;
}

CartanMatrix::CartanMatrix(IMatrix entries) : m_(std::move(entries))
{
    if (m_.rows() != m_.cols())
        throw NotCartan(NotCartan::Reason::NotSquare, std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()));
}

CartanMatrix CartanMatrix::from_rows(const std::vector<std::vector<int64_t>>& rows)
{
    IMatrix m(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size())
            throw NotCartan(NotCartan::Reason::NotSquare, "row " + std::to_string(i + 1) + " has length " +
                                                             std::to_string(rows[i].size()));
        for (std::size_t j = 0; j < rows.size(); ++j)
            m(i, j) = rows[i][j];
    }
    return CartanMatrix(std::move(m));
}

CartanMatrix cartan_matrix(CartanType t)
{
    check_rank(t);
    const int r = t.rank;
    IMatrix m(r, r);
    for (int i = 0; i < r; ++i)
        m(i, i) = 2;
    auto link = [&](int i, int j) { m(i - 1, j - 1) = m(j - 1, i - 1) = -1; };
    switch (t.family) {
    case Family::A:
    case Family::B:
    case Family::C:
        for (int i = 1; i < r; ++i)
            link(i, i + 1);
        if (t.family == Family::B)
            m(r - 1, r - 2) = -2;
        if (t.family == Family::C)
            m(r - 2, r - 1) = -2;
        break;
    case Family::D:
        for (int i = 1; i < r - 1; ++i)
            link(i, i + 1);
        link(r - 2, r);
        break;
    case Family::E:
        link(1, 3);
        link(2, 4);
        for (int i = 3; i < r; ++i)
            link(i, i + 1);
        break;
    case Family::F:
        link(1, 2);
        link(2, 3);
        link(3, 4);
        m(1, 2) = -2;
        break;
    case Family::G:
        m(0, 1) = -1;
        m(1, 0) = -3;
        break;
    }
    return CartanMatrix(std::move(m));
}

CartanMatrix cartan_matrix(const std::vector<CartanType>& types)
{
    int total = 0;
    for (auto t : types)
        total += t.rank;
    IMatrix m(total, total);
    int off = 0;
    for (auto t : types) {
        CartanMatrix c = cartan_matrix(t);
        for (int i = 0; i < t.rank; ++i)
            for (int j = 0; j < t.rank; ++j)
                m(off + i, off + j) = c(i, j);
        off += t.rank;
    }
    return CartanMatrix(std::move(m));
}

namespace {

struct ComponentData {
    std::vector<int> vertices;
    IVec d;
};

QMatrix symmetrized(const IMatrix& a, const std::vector<int>& vs, const IVec& d, int skip = -1)
{
    std::vector<int> keep;
    std::vector<int64_t> dk;
    for (std::size_t k = 0; k < vs.size(); ++k)
        if (static_cast<int>(k) != skip) {
            keep.push_back(vs[k]);
            dk.push_back(d[k]);
        }
    QMatrix b(keep.size(), keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j)
            b(i, j) = Rational(static_cast<long>(dk[i] * a(keep[i], keep[j])));
    return b;
}

CartanType identify(const IMatrix& a, const std::vector<int>& vs)
{
    const int r = static_cast<int>(vs.size());
    if (r == 1)
        return {Family::A, 1};
    std::vector<std::vector<int>> adj(r);
    int triple = -1, dbl_i = -1, dbl_j = -1;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (i == j || a(vs[i], vs[j]) == 0)
                continue;
            adj[i].push_back(j);
            int64_t mult = a(vs[i], vs[j]) * a(vs[j], vs[i]);
            if (mult == 3)
                triple = i;
            if (mult == 2 && a(vs[i], vs[j]) == -2) {
                dbl_i = i; // the short end
                dbl_j = j;
            }
        }
    if (triple >= 0)
        return {Family::G, 2};
    for (int v = 0; v < r; ++v) {
        if (adj[v].size() != 3)
            continue;
        std::vector<int> legs;
        for (int start : adj[v]) {
            int len = 0, prev = v, cur = start;
            for (;;) {
                ++len;
                int next = -1;
                for (int w : adj[cur])
                    if (w != prev)
                        next = w;
                if (next < 0)
                    break;
                prev = cur;
                cur = next;
            }
            legs.push_back(len);
        }
        std::sort(legs.begin(), legs.end());
        if (legs[0] == 1 && legs[1] == 1)
            return {Family::D, r};
        return {Family::E, r};
    }
    if (dbl_i >= 0) {
        if (r == 4 && adj[dbl_i].size() == 2 && adj[dbl_j].size() == 2)
            return {Family::F, 4};
        if (r == 2)
            return {vs.size() == 2 && dbl_i == 1 ? Family::B : Family::C, 2};
        // Exactly one end of the double edge is a leaf of the diagram.
        return {adj[dbl_i].size() == 1 ? Family::B : Family::C, r};
    }
    return {Family::A, r};
}

} // namespace

std::vector<CartanComponent> decompose_cartan(const IMatrix& a)
{
    using R = NotCartan::Reason;
    if (a.rows() != a.cols())
        throw NotCartan(R::NotSquare, std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    const int n = static_cast<int>(a.rows());
    if (n == 0)
        throw NotCartan(R::NotSquare, "empty matrix");
    for (int i = 0; i < n; ++i)
        if (a(i, i) != 2)
            throw NotCartan(R::Diagonal, "a_" + std::to_string(i + 1) + std::to_string(i + 1) + " = " +
                                             std::to_string(a(i, i)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && a(i, j) > 0)
                throw NotCartan(R::PositiveOffDiagonal,
                                "a_(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") > 0");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((a(i, j) == 0) != (a(j, i) == 0))
                throw NotCartan(R::ZeroPattern, "a_(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                                    ") vs a_(" + std::to_string(j + 1) + "," +
                                                    std::to_string(i + 1) + ")");

    std::vector<int> comp(n, -1);
    std::vector<ComponentData> comps;
    std::vector<Rational> dq(n);
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0)
            continue;
        ComponentData cd;
        std::deque<int> queue{s};
        comp[s] = static_cast<int>(comps.size());
        dq[s] = 1;
        while (!queue.empty()) {
            int i = queue.front();
            queue.pop_front();
            cd.vertices.push_back(i);
            for (int j = 0; j < n; ++j) {
                if (j == i || a(i, j) == 0)
                    continue;
                // d_i a_ij = d_j a_ji
                Rational want = dq[i] * static_cast<long>(a(i, j)) / static_cast<long>(a(j, i));
                if (comp[j] < 0) {
                    comp[j] = comp[s];
                    dq[j] = want;
                    queue.push_back(j);
                } else if (dq[j] != want) {
                    throw NotCartan(R::NotSymmetrizable, "cycle through vertex " + std::to_string(j + 1));
                }
            }
        }
        std::sort(cd.vertices.begin(), cd.vertices.end());
        Integer lcm = 1;
        for (int v : cd.vertices)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), dq[v].get_den_mpz_t());
        Integer g = 0;
        for (int v : cd.vertices) {
            Integer x = dq[v].get_num() * (lcm / dq[v].get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        }
        for (int v : cd.vertices) {
            Integer x = dq[v].get_num() * (lcm / dq[v].get_den()) / g;
            cd.d.push_back(to_int64(x));
        }
        comps.push_back(std::move(cd));
    }

    std::vector<CartanComponent> out;
    for (const auto& cd : comps) {
        QMatrix b = symmetrized(a, cd.vertices, cd.d);
        if (!is_positive_definite(b)) {
            bool affine = determinant(b) == 0;
            for (std::size_t k = 0; affine && k < cd.vertices.size() && cd.vertices.size() > 1; ++k)
                affine = is_positive_definite(symmetrized(a, cd.vertices, cd.d, static_cast<int>(k)));
            std::string where = "component containing vertex " + std::to_string(cd.vertices.front() + 1);
            throw NotCartan(affine ? R::Affine : R::Indefinite, where);
        }
        out.push_back({identify(a, cd.vertices), cd.vertices, cd.d});
    }
    return out;
}

std::vector<CartanType> validate_cartan(const IMatrix& entries)
{
    std::vector<CartanType> out;
    for (const auto& c : decompose_cartan(entries))
        out.push_back(c.type);
    return out;
}

std::optional<std::vector<int>> cartan_isomorphism(const CartanMatrix& a, const CartanMatrix& b)
{
    const int n = a.rank();
    if (b.rank() != n)
        return std::nullopt;
    auto profile = [](const CartanMatrix& m, int i) {
        std::vector<int64_t> p;
        for (int j = 0; j < m.rank(); ++j)
            if (j != i && m(i, j) != 0)
                p.push_back(m(i, j) * 8 + m(j, i));
        std::sort(p.begin(), p.end());
        return p;
    };
    std::vector<std::vector<int64_t>> pa(n), pb(n);
    for (int i = 0; i < n; ++i) {
        pa[i] = profile(a, i);
        pb[i] = profile(b, i);
    }
    std::vector<int> p(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(int)> go = [&](int i) {
        if (i == n)
            return true;
        for (int c = 0; c < n; ++c) {
            if (used[c] || pa[i] != pb[c])
                continue;
            bool ok = true;
            for (int k = 0; k < i && ok; ++k)
                ok = a(i, k) == b(c, p[k]) && a(k, i) == b(p[k], c);
            if (!ok)
                continue;
            used[c] = true;
            p[i] = c;
            if (go(i + 1))
                return true;
            used[c] = false;
        }
        return false;
    };
    if (!go(0))
        return std::nullopt;
    return p;
}

std::size_t IVecHash::operator()(const IVec& v) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ull;
    for (int64_t x : v) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

RootSystem RootSystem::build(CartanType type)
{
    return build(cartan_matrix(type));
}

RootSystem RootSystem::build(const std::vector<CartanType>& types)
{
    if (types.empty())
        throw UnsupportedType("empty type list");
    return build(cartan_matrix(types));
}

RootSystem RootSystem::build(std::string_view text)
{
    return build(parse_cartan_types(text));
}

RootSystem RootSystem::build(const CartanMatrix& cartan)
{
    RootSystem rs;
    rs.cartan_ = cartan;
    rs.components_ = decompose_cartan(cartan.matrix());
    rs.d_.assign(cartan.rank(), 1);
    for (const auto& c : rs.components_)
        for (std::size_t k = 0; k < c.vertices.size(); ++k)
            rs.d_[c.vertices[k]] = c.d[k];
    rs.inverse_ = inverse(to_qmatrix(cartan.matrix()));
    rs.generate();
    return rs;
}

void RootSystem::generate()
{
    const int r = rank();
    std::deque<IVec> queue;
    for (int i = 0; i < r; ++i) {
        IVec e(r, 0);
        e[i] = 1;
        if (all_.insert(e).second)
            queue.push_back(e);
    }
    while (!queue.empty()) {
        IVec v = std::move(queue.front());
        queue.pop_front();
        for (int i = 0; i < r; ++i) {
            IVec w = reflect_root(i, v);
            if (all_.insert(w).second)
                queue.push_back(std::move(w));
        }
    }
    for (const auto& v : all_)
        if (std::all_of(v.begin(), v.end(), [](int64_t x) { return x >= 0; }))
            positive_.push_back(v);
    std::sort(positive_.begin(), positive_.end(), [](const IVec& x, const IVec& y) {
        int64_t hx = height(x), hy = height(y);
        return hx != hy ? hx < hy : x < y;
    });
}

std::string RootSystem::type_name() const
{
    std::vector<CartanType> t;
    for (const auto& c : components_)
        t.push_back(c.type);
    return type_string(t);
}

std::vector<IVec> RootSystem::roots() const
{
    std::vector<IVec> out = positive_;
    for (const auto& p : positive_) {
        IVec n = p;
        for (auto& x : n)
            x = -x;
        out.push_back(std::move(n));
    }
    return out;
}

int64_t RootSystem::height(const IVec& root)
{
    return std::accumulate(root.begin(), root.end(), int64_t{0});
}

IVec RootSystem::root_to_weight(const IVec& n) const
{
    if (static_cast<int>(n.size()) != rank())
        throw DimensionMismatch("root has " + std::to_string(n.size()) + " coordinates, rank is " +
                                std::to_string(rank()));
    IVec w(rank(), 0);
    for (int j = 0; j < rank(); ++j)
        for (int k = 0; k < rank(); ++k)
            w[j] += cartan_(j, k) * n[k];
    return w;
}

QVec RootSystem::weight_to_root(const QVec& w) const
{
    if (static_cast<int>(w.size()) != rank())
        throw DimensionMismatch("weight has " + std::to_string(w.size()) + " coordinates, rank is " +
                                std::to_string(rank()));
    QVec n(rank(), Rational(0));
    for (int j = 0; j < rank(); ++j)
        for (int k = 0; k < rank(); ++k)
            n[j] += inverse_(j, k) * w[k];
    return n;
}

Rational RootSystem::pairing(const LatticeVector& x, const LatticeVector& y) const
{
    if (static_cast<int>(x.coords.size()) != rank() || static_cast<int>(y.coords.size()) != rank())
        throw DimensionMismatch("pairing arguments must have rank coordinates");
    // (x, y) with y in root coordinates n: sum_j n_j d_j <x, alpha_j^vee>.
    QVec xw = x.basis == LatticeVector::Basis::Weight ? x.coords : QVec(rank(), Rational(0));
    if (x.basis == LatticeVector::Basis::Root)
        for (int j = 0; j < rank(); ++j)
            for (int k = 0; k < rank(); ++k)
                xw[j] += Rational(static_cast<long>(cartan_(j, k))) * x.coords[k];
    QVec yn = y.basis == LatticeVector::Basis::Root ? y.coords : weight_to_root(y.coords);
    Rational s = 0;
    for (int j = 0; j < rank(); ++j)
        s += yn[j] * static_cast<long>(d_[j]) * xw[j];
    return s;
}

Rational RootSystem::half_norm(const IVec& root) const
{
    return pairing(LatticeVector::root(root), LatticeVector::root(root)) / 2;
}

Rational RootSystem::coroot_pairing(const QVec& weight, const IVec& root) const
{
    Rational num = 0;
    for (int j = 0; j < rank(); ++j)
        num += weight[j] * static_cast<long>(root[j] * d_[j]);
    return num / half_norm(root);
}

int64_t RootSystem::coroot_pairing(const IVec& weight, const IVec& root) const
{
    Rational v = coroot_pairing(to_qvec(weight), root);
    return to_int64(v.get_num());
}

QVec RootSystem::coroot(const IVec& root) const
{
    Rational hn = half_norm(root);
    QVec c(rank());
    for (int j = 0; j < rank(); ++j)
        c[j] = Rational(static_cast<long>(root[j] * d_[j])) / hn;
    return c;
}

IVec RootSystem::reflect_weight(int i, IVec w) const
{
    if (i < 0 || i >= rank())
        throw IndexOutOfRange("simple reflection " + std::to_string(i + 1));
    int64_t c = w[i];
    if (c != 0)
        for (int j = 0; j < rank(); ++j)
            w[j] -= c * cartan_(j, i);
    return w;
}

QVec RootSystem::reflect_weight(int i, QVec w) const
{
    if (i < 0 || i >= rank())
        throw IndexOutOfRange("simple reflection " + std::to_string(i + 1));
    Rational c = w[i];
    if (c != 0)
        for (int j = 0; j < rank(); ++j)
            w[j] -= c * static_cast<long>(cartan_(j, i));
    return w;
}

IVec RootSystem::reflect_root(int i, IVec n) const
{
    if (i < 0 || i >= rank())
        throw IndexOutOfRange("simple reflection " + std::to_string(i + 1));
    int64_t c = 0;
    for (int j = 0; j < rank(); ++j)
        c += cartan_(i, j) * n[j];
    n[i] -= c;
    return n;
}

void require_irreducible(const RootSystem& rs, const char* what)
{
    if (!rs.is_irreducible())
        throw Reducible(std::string(what) + " needs an irreducible root system, got " + rs.type_name());
}

HighestRoot highest_root(const RootSystem& rs)
{
    require_irreducible(rs, "highest_root");
    const IVec& t = rs.positive_roots().back();
    return {t, RootSystem::height(t)};
}

std::vector<std::size_t> height_census(const RootSystem& rs)
{
    std::vector<std::size_t> census;
    for (const auto& a : rs.positive_roots()) {
        auto h = static_cast<std::size_t>(RootSystem::height(a));
        if (census.size() < h)
            census.resize(h, 0);
        ++census[h - 1];
    }
    return census;
}

std::vector<int> exponents(const RootSystem& rs)
{
    require_irreducible(rs, "exponents");
    auto census = height_census(rs);
    std::vector<int> ex;
    for (std::size_t m = 1; m <= census.size(); ++m) {
        std::size_t next = m < census.size() ? census[m] : 0;
        for (std::size_t k = next; k < census[m - 1]; ++k)
            ex.push_back(static_cast<int>(m));
    }
    return ex;
}

std::pair<int64_t, int64_t> coxeter_numbers(const RootSystem& rs)
{
    auto theta = highest_root(rs);
    QVec cv = rs.coroot(theta.coords);
    Rational s = 0;
    for (const auto& x : cv)
        s += x;
    return {theta.height + 1, to_int64(s.get_num()) + 1};
}

IVec rho(const RootSystem& rs)
{
    return IVec(rs.rank(), 1);
}

QVec rho_check(const RootSystem& rs)
{
    QMatrix at = inverse(to_qmatrix(rs.cartan().matrix().transpose()));
    QVec c(rs.rank(), Rational(0));
    for (int i = 0; i < rs.rank(); ++i)
        for (int j = 0; j < rs.rank(); ++j)
            c[i] += at(i, j);
    return c;
}

bool is_minuscule(const RootSystem& rs, const IVec& weight)
{
    for (auto x : weight)
        if (x < 0)
            return false;
    for (const auto& a : rs.positive_roots())
        if (rs.coroot_pairing(to_qvec(weight), a) > 1)
            return false;
    return true;
}

std::vector<IVec> minuscule_weights(const RootSystem& rs)
{
    require_irreducible(rs, "minuscule_weights");
    // <omega_i, beta^vee> is largest at the highest coroot, i.e. the highest root of
    // the dual system; omega_i is minuscule iff its coefficient there is 1.
    RootSystem dual = dual_root_system(rs);
    const IVec& top = dual.positive_roots().back();
    std::vector<IVec> out{IVec(rs.rank(), 0)};
    for (int i = 0; i < rs.rank(); ++i)
        if (top[i] == 1) {
            IVec w(rs.rank(), 0);
            w[i] = 1;
            out.push_back(std::move(w));
        }
    return out;
}

std::vector<Integer> weight_lattice_quotient(const RootSystem& rs)
{
    std::vector<Integer> out;
    for (auto& x : smith_diagonal(rs.cartan().matrix()))
        if (x != 1)
            out.push_back(x);
    return out;
}

Integer cartan_determinant(const RootSystem& rs)
{
    Rational d = determinant(to_qmatrix(rs.cartan().matrix()));
    return d.get_num();
}

RootSystem dual_root_system(const RootSystem& rs)
{
    return RootSystem::build(rs.cartan().transpose());
}

Rational pairing(const RootSystem& rs, const LatticeVector& x, const LatticeVector& y)
{
    return rs.pairing(x, y);
}

} // namespace liekit
