#include "liekit/liealg.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "liekit/error.hpp"

namespace liekit {

QVec dense(const SparseVec& v, std::size_t n)
{
    QVec out(n, Rational(0));
    for (const auto& [i, c] : v)
        out[i] = c;
    return out;
}

SparseVec sparse(const QVec& v)
{
    SparseVec out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            out.emplace_back(i, v[i]);
    return out;
}

namespace {

using Accum = std::map<std::size_t, Rational>;

void accumulate(Accum& acc, const SparseVec& v, const Rational& scale)
{
    if (scale == 0)
        return;
    for (const auto& [i, c] : v) {
        auto [it, fresh] = acc.try_emplace(i, c * scale);
        if (!fresh) {
            it->second += c * scale;
            if (it->second == 0)
                acc.erase(it);
        }
    }
}

SparseVec to_sparse(const Accum& acc)
{
    SparseVec out;
    for (const auto& [i, c] : acc)
        if (c != 0)
            out.emplace_back(i, c);
    return out;
}

SparseVec normalized(SparseVec v)
{
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Accum acc;
    accumulate(acc, v, 1);
    return to_sparse(acc);
}

SparseVec negated(const SparseVec& v)
{
    SparseVec out = v;
    for (auto& e : out)
        e.second = -e.second;
    return out;
}

} // namespace

LieAlgebra::LieAlgebra(std::vector<std::string> labels, const std::vector<Bracket>& brackets,
                       std::vector<std::size_t> cartan)
    : labels_(std::move(labels)), cartan_(std::move(cartan))
{
    const std::size_t n = labels_.size();
    table_.assign(n * n, {});
    std::vector<bool> given(n * n, false);
    for (const auto& b : brackets) {
        if (b.i >= n || b.j >= n)
            throw IndexOutOfRange("bracket index outside the basis");
        SparseVec v = normalized(b.value);
        for (const auto& [k, c] : v)
            if (k >= n)
                throw IndexOutOfRange("bracket value index outside the basis");
        if (b.i == b.j) {
            if (!v.empty())
                throw JacobiFailure("[" + labels_[b.i] + "," + labels_[b.i] + "] must vanish");
            continue;
        }
        if (given[b.i * n + b.j])
            throw JacobiFailure("bracket [" + labels_[b.i] + "," + labels_[b.j] + "] given twice");
        given[b.i * n + b.j] = given[b.j * n + b.i] = true;
        table_[b.j * n + b.i] = negated(v);
        table_[b.i * n + b.j] = std::move(v);
    }
    for (auto h : cartan_)
        if (h >= n)
            throw IndexOutOfRange("Cartan marker outside the basis");

    // [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] = 0
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Accum acc;
                for (const auto& [m, c] : bracket(j, k))
                    accumulate(acc, bracket(i, m), c);
                for (const auto& [m, c] : bracket(k, i))
                    accumulate(acc, bracket(j, m), c);
                for (const auto& [m, c] : bracket(i, j))
                    accumulate(acc, bracket(k, m), c);
                if (!acc.empty())
                    throw JacobiFailure("Jacobi identity fails for (" + labels_[i] + ", " + labels_[j] + ", " +
                                        labels_[k] + ")");
            }

    by_target_.assign(n, {});
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t w = u + 1; w < n; ++w)
            for (const auto& [m, c] : bracket(u, w))
                by_target_[m].push_back({{u, w}, c});
}

QVec LieAlgebra::bracket(const QVec& x, const QVec& y) const
{
    const std::size_t n = dim();
    if (x.size() != n || y.size() != n)
        throw DimensionMismatch("vector length differs from dim g");
    QVec out(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j] == 0)
                continue;
            Rational s = x[i] * y[j];
            for (const auto& [k, c] : bracket(i, j))
                out[k] += s * c;
        }
    }
    return out;
}

QMatrix LieAlgebra::ad(std::size_t i) const
{
    const std::size_t n = dim();
    QMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& [k, c] : bracket(i, j))
            m(k, j) = c;
    return m;
}

// ---------------------------------------------------------------- constructors

namespace {

struct Entry {
    std::size_t r, c;
    Rational v;
};
using SparseMatrix = std::vector<Entry>;

SparseMatrix to_entries(const QMatrix& m)
{
    SparseMatrix out;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0)
                out.push_back({r, c, m(r, c)});
    return out;
}

bool is_diagonal_nonzero(const QMatrix& m)
{
    bool any = false;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0) {
                if (r != c)
                    return false;
                any = true;
            }
    return any;
}

QMatrix unit(std::size_t n, std::size_t r, std::size_t c)
{
    QMatrix m(n, n);
    m(r, c) = 1;
    return m;
}

} // namespace

LieAlgebra from_matrices(std::vector<std::string> labels, std::vector<QMatrix> basis)
{
    const std::size_t d = basis.size();
    if (labels.size() != d)
        throw DimensionMismatch("one label per basis matrix");
    if (d == 0)
        return LieAlgebra({}, {});
    const std::size_t n = basis[0].rows();
    for (const auto& b : basis)
        if (b.rows() != n || b.cols() != n)
            throw DimensionMismatch("basis matrices must be square of equal size");

    // Choose d matrix positions on which the basis is independent, and invert there.
    std::vector<std::size_t> pivots;
    SparseEchelon ech;
    for (std::size_t t = 0; t < n * n && pivots.size() < d; ++t) {
        std::vector<std::pair<std::size_t, Rational>> col;
        for (std::size_t i = 0; i < d; ++i)
            if (basis[i].data()[t] != 0)
                col.emplace_back(i, basis[i].data()[t]);
        if (ech.insert(col))
            pivots.push_back(t);
    }
    if (pivots.size() < d)
        throw DimensionMismatch("basis matrices are linearly dependent");
    QMatrix sub(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t i = 0; i < d; ++i)
            sub(r, i) = basis[i].data()[pivots[r]];
    QMatrix inv = inverse(sub);

    std::vector<SparseMatrix> entries;
    for (const auto& b : basis)
        entries.push_back(to_entries(b));

    std::vector<LieAlgebra::Bracket> brackets;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            std::map<std::pair<std::size_t, std::size_t>, Rational> comm;
            for (const auto& a : entries[i])
                for (const auto& b : entries[j]) {
                    if (a.c == b.r)
                        comm[{a.r, b.c}] += a.v * b.v;
                    if (b.c == a.r)
                        comm[{b.r, a.c}] -= a.v * b.v;
                }
            for (auto it = comm.begin(); it != comm.end();)
                it = it->second == 0 ? comm.erase(it) : std::next(it);
            if (comm.empty())
                continue;
            QVec coords(d, Rational(0));
            for (std::size_t r = 0; r < d; ++r) {
                std::size_t t = pivots[r];
                auto it = comm.find({t / n, t % n});
                if (it == comm.end())
                    continue;
                for (std::size_t k = 0; k < d; ++k)
                    if (inv(k, r) != 0)
                        coords[k] += inv(k, r) * it->second;
            }
            // The commutator must be exactly this combination.
            std::map<std::pair<std::size_t, std::size_t>, Rational> rebuilt;
            for (std::size_t k = 0; k < d; ++k)
                if (coords[k] != 0)
                    for (const auto& e : entries[k])
                        rebuilt[{e.r, e.c}] += coords[k] * e.v;
            for (auto it = rebuilt.begin(); it != rebuilt.end();)
                it = it->second == 0 ? rebuilt.erase(it) : std::next(it);
            if (rebuilt != comm)
                throw DimensionMismatch("span is not closed under the commutator: [" + labels[i] + "," +
                                        labels[j] + "]");
            brackets.push_back({i, j, sparse(coords)});
        }
    std::vector<std::size_t> cartan;
    for (std::size_t i = 0; i < d; ++i)
        if (is_diagonal_nonzero(basis[i]))
            cartan.push_back(i);
    LieAlgebra g(std::move(labels), brackets, std::move(cartan));
    g.set_matrices(std::move(basis));
    return g;
}

namespace {

std::string pair_label(const char* prefix, std::size_t a, std::size_t b)
{
    return std::string(prefix) + "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
}

} // namespace

LieAlgebra sl(int n)
{
    if (n < 2)
        throw DimensionMismatch("sl(n) needs n >= 2");
    const auto N = static_cast<std::size_t>(n);
    std::vector<std::string> labels;
    std::vector<QMatrix> basis;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            if (i != j) {
                labels.push_back(pair_label("E", i, j));
                basis.push_back(unit(N, i, j));
            }
    for (std::size_t i = 0; i + 1 < N; ++i) {
        labels.push_back("H" + std::to_string(i + 1));
        basis.push_back(unit(N, i, i) - unit(N, i + 1, i + 1));
    }
    if (n == 2)
        labels = {"e", "f", "h"};
    return from_matrices(std::move(labels), std::move(basis));
}

namespace {

// Basis of {X : X^T J + J X = 0} as J^{-1} S with S running over symmetric
// (J antisymmetric) or antisymmetric (J symmetric) elementary matrices.
LieAlgebra form_algebra(const QMatrix& j, bool j_symmetric, const char* prefix)
{
    const std::size_t n = j.rows();
    QMatrix jinv = inverse(j);
    std::vector<std::string> labels;
    std::vector<QMatrix> basis;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            if (j_symmetric && a == b)
                continue;
            QMatrix s = j_symmetric ? unit(n, a, b) - unit(n, b, a)
                                    : (a == b ? unit(n, a, a) : unit(n, a, b) + unit(n, b, a));
            labels.push_back(pair_label(prefix, a, b));
            basis.push_back(jinv * s);
        }
    return from_matrices(std::move(labels), std::move(basis));
}

} // namespace

LieAlgebra so(int n)
{
    if (n < 2)
        throw DimensionMismatch("so(n) needs n >= 2");
    const auto N = static_cast<std::size_t>(n);
    QMatrix j(N, N);
    for (std::size_t i = 0; i < N; ++i)
        j(i, N - 1 - i) = 1;
    return form_algebra(j, true, "X");
}

LieAlgebra sp(int two_n)
{
    if (two_n < 2 || two_n % 2)
        throw DimensionMismatch("sp(2n) needs an even size >= 2");
    const auto N = static_cast<std::size_t>(two_n), h = N / 2;
    QMatrix j(N, N);
    for (std::size_t i = 0; i < h; ++i) {
        j(i, h + i) = 1;
        j(h + i, i) = -1;
    }
    return form_algebra(j, false, "Y");
}

LieAlgebra gl(int n)
{
    if (n < 1)
        throw DimensionMismatch("gl(n) needs n >= 1");
    const auto N = static_cast<std::size_t>(n);
    std::vector<std::string> labels;
    std::vector<QMatrix> basis;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            labels.push_back(pair_label("E", i, j));
            basis.push_back(unit(N, i, j));
        }
    return from_matrices(std::move(labels), std::move(basis));
}

LieAlgebra heisenberg()
{
    return LieAlgebra({"x", "y", "c"}, {{0, 1, {{2, Rational(1)}}}});
}

namespace {

LieAlgebra triangular(int n, bool strict)
{
    if (n < 1)
        throw DimensionMismatch("triangular algebras need n >= 1");
    const auto N = static_cast<std::size_t>(n);
    std::vector<std::string> labels;
    std::vector<QMatrix> basis;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = strict ? i + 1 : i; j < N; ++j) {
            labels.push_back(pair_label("E", i, j));
            basis.push_back(unit(N, i, j));
        }
    return from_matrices(std::move(labels), std::move(basis));
}

} // namespace

LieAlgebra upper_triangular(int n) { return triangular(n, false); }
LieAlgebra strictly_upper_triangular(int n) { return triangular(n, true); }

LieAlgebra abelian(int n)
{
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        labels.push_back("a" + std::to_string(i + 1));
    return LieAlgebra(std::move(labels), {});
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b)
{
    const std::size_t off = a.dim();
    std::vector<std::string> labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    std::vector<LieAlgebra::Bracket> br;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j)
            if (!a.bracket(i, j).empty())
                br.push_back({i, j, a.bracket(i, j)});
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = i + 1; j < b.dim(); ++j)
            if (!b.bracket(i, j).empty()) {
                SparseVec v = b.bracket(i, j);
                for (auto& e : v)
                    e.first += off;
                br.push_back({i + off, j + off, v});
            }
    std::vector<std::size_t> cartan = a.cartan();
    for (auto h : b.cartan())
        cartan.push_back(h + off);
    return LieAlgebra(std::move(labels), br, std::move(cartan));
}

LieAlgebra change_basis(const LieAlgebra& g, const QMatrix& p)
{
    const std::size_t n = g.dim();
    if (p.rows() != n || p.cols() != n)
        throw DimensionMismatch("change of basis matrix must be dim x dim");
    QMatrix pinv = inverse(p);
    std::vector<QVec> cols(n);
    for (std::size_t a = 0; a < n; ++a) {
        cols[a].resize(n);
        for (std::size_t i = 0; i < n; ++i)
            cols[a][i] = p(i, a);
    }
    std::vector<LieAlgebra::Bracket> br;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            QVec v = g.bracket(cols[a], cols[b]);
            QVec w(n, Rational(0));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k)
                    if (v[k] != 0)
                        w[i] += pinv(i, k) * v[k];
            SparseVec s = sparse(w);
            if (!s.empty())
                br.push_back({a, b, std::move(s)});
        }
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a)
        labels.push_back("f" + std::to_string(a + 1));
    return LieAlgebra(std::move(labels), br);
}

// ---------------------------------------------------------------- JSON

LieAlgebra lie_algebra_from_json(const std::string& text)
{
    using nlohmann::json;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidFile(std::string("malformed JSON: ") + e.what());
    }
    try {
        const std::size_t n = j.at("dim").get<std::size_t>();
        std::vector<std::string> labels;
        if (j.contains("basis"))
            labels = j.at("basis").get<std::vector<std::string>>();
        else
            for (std::size_t i = 0; i < n; ++i)
                labels.push_back("e" + std::to_string(i + 1));
        if (labels.size() != n)
            throw InvalidFile("basis has " + std::to_string(labels.size()) + " labels, dim is " + std::to_string(n));
        std::vector<LieAlgebra::Bracket> br;
        for (const auto& b : j.value("brackets", json::array())) {
            LieAlgebra::Bracket x{b.at("i").get<std::size_t>(), b.at("j").get<std::size_t>(), {}};
            for (const auto& [k, v] : b.at("coeffs").items()) {
                std::size_t idx = std::stoul(k);
                Rational c = v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long>());
                x.value.emplace_back(idx, c);
            }
            br.push_back(std::move(x));
        }
        std::vector<std::size_t> cartan;
        if (j.contains("cartan"))
            cartan = j.at("cartan").get<std::vector<std::size_t>>();
        return LieAlgebra(std::move(labels), br, std::move(cartan));
    } catch (const JacobiFailure&) {
        throw;
    } catch (const InputError& e) {
        throw InvalidFile(e.what());
    } catch (const json::exception& e) {
        throw InvalidFile(std::string("bad structure-constant file: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InvalidFile(std::string("bad index: ") + e.what());
    }
}

LieAlgebra lie_algebra_from_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidFile("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return lie_algebra_from_json(ss.str());
}

std::string lie_algebra_to_json(const LieAlgebra& g)
{
    using nlohmann::json;
    json j;
    j["dim"] = g.dim();
    j["basis"] = g.labels();
    json br = json::array();
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t k = i + 1; k < g.dim(); ++k) {
            if (g.bracket(i, k).empty())
                continue;
            json coeffs = json::object();
            for (const auto& [m, c] : g.bracket(i, k))
                coeffs[std::to_string(m)] = to_string(c);
            br.push_back({{"i", i}, {"j", k}, {"coeffs", coeffs}});
        }
    j["brackets"] = br;
    if (g.has_cartan())
        j["cartan"] = g.cartan();
    return j.dump();
}

// ---------------------------------------------------------------- modules

void validate_module(const LieAlgebra& g, const LieModule& m)
{
    if (m.action.size() != g.dim())
        throw DimensionMismatch("module needs one matrix per basis element");
    for (const auto& a : m.action)
        if (a.rows() != m.dim || a.cols() != m.dim)
            throw DimensionMismatch("module matrices must be dim V x dim V");
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i + 1; j < g.dim(); ++j) {
            QMatrix lhs(m.dim, m.dim);
            for (const auto& [k, c] : g.bracket(i, j))
                lhs = lhs + m.action[k].scaled(c);
            QMatrix rhs = m.action[i] * m.action[j] - m.action[j] * m.action[i];
            if (!(lhs == rhs))
                throw JacobiFailure("module relation fails for (" + g.labels()[i] + ", " + g.labels()[j] + ")");
        }
}

LieModule trivial_module(const LieAlgebra& g, std::size_t dim)
{
    return {dim, std::vector<QMatrix>(g.dim(), QMatrix(dim, dim))};
}

LieModule adjoint_module(const LieAlgebra& g)
{
    LieModule m{g.dim(), {}};
    for (std::size_t i = 0; i < g.dim(); ++i)
        m.action.push_back(g.ad(i));
    return m;
}

LieModule natural_module(const LieAlgebra& g)
{
    if (g.matrices().empty())
        throw DimensionMismatch("algebra was not built from matrices");
    return {g.matrices()[0].rows(), g.matrices()};
}

LieModule sl2_irrep(const LieAlgebra& g, int n)
{
    if (g.dim() != 3 || n < 0)
        throw DimensionMismatch("sl2_irrep needs sl(2) and n >= 0");
    const auto d = static_cast<std::size_t>(n + 1);
    QMatrix e(d, d), f(d, d), h(d, d);
    // v_k with h v_k = (n - 2k) v_k, f v_k = v_{k+1}, e v_k = k (n - k + 1) v_{k-1}
    for (std::size_t k = 0; k < d; ++k) {
        h(k, k) = n - 2 * static_cast<long>(k);
        if (k + 1 < d)
            f(k + 1, k) = 1;
        if (k > 0)
            e(k - 1, k) = static_cast<long>(k) * (n - static_cast<long>(k) + 1);
    }
    LieModule m{d, {e, f, h}};
    validate_module(g, m);
    return m;
}

LieModule lie_module_from_json(const LieAlgebra& g, const std::string& text)
{
    using nlohmann::json;
    LieModule m;
    try {
        json j = json::parse(text);
        m.dim = j.at("dim").get<std::size_t>();
        for (const auto& mat : j.at("action")) {
            QMatrix a(m.dim, m.dim);
            if (mat.size() != m.dim)
                throw InvalidFile("module matrix has " + std::to_string(mat.size()) + " rows");
            for (std::size_t r = 0; r < m.dim; ++r) {
                if (mat[r].size() != m.dim)
                    throw InvalidFile("module matrix row has the wrong length");
                for (std::size_t c = 0; c < m.dim; ++c) {
                    const auto& v = mat[r][c];
                    a(r, c) = v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long>());
                }
            }
            m.action.push_back(std::move(a));
        }
    } catch (const json::exception& e) {
        throw InvalidFile(std::string("bad module file: ") + e.what());
    }
    validate_module(g, m);
    return m;
}

LieModule lie_module_from_file(const LieAlgebra& g, const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidFile("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return lie_module_from_json(g, ss.str());
}

LieAlgebra semidirect(const LieAlgebra& g, const LieModule& m)
{
    validate_module(g, m);
    const std::size_t n = g.dim();
    std::vector<std::string> labels = g.labels();
    for (std::size_t a = 0; a < m.dim; ++a)
        labels.push_back("v" + std::to_string(a + 1));
    std::vector<LieAlgebra::Bracket> br;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!g.bracket(i, j).empty())
                br.push_back({i, j, g.bracket(i, j)});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < m.dim; ++a) {
            SparseVec v;
            for (std::size_t b = 0; b < m.dim; ++b)
                if (m.action[i](b, a) != 0)
                    v.emplace_back(n + b, m.action[i](b, a));
            if (!v.empty())
                br.push_back({i, n + a, v});
        }
    return LieAlgebra(std::move(labels), br, g.cartan());
}

// ---------------------------------------------------------------- Killing form, series

QMatrix killing_form(const LieAlgebra& g)
{
    const std::size_t n = g.dim();
    QMatrix k(n, n);
    // tr(ad_i ad_j) = sum_l sum_m c_il^m c_jm^l
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Rational s = 0;
            for (std::size_t l = 0; l < n; ++l)
                for (const auto& [m, c] : g.bracket(i, l))
                    for (const auto& [t, d] : g.bracket(j, m))
                        if (t == l)
                            s += c * d;
            k(i, j) = k(j, i) = s;
        }
    return k;
}

namespace {

using Subspace = std::vector<SparseVec>;

SparseVec bracket_sparse(const LieAlgebra& g, const SparseVec& x, const SparseVec& y)
{
    Accum acc;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y)
            accumulate(acc, g.bracket(i, j), a * b);
    return to_sparse(acc);
}

Subspace span_basis(SparseEchelon& ech)
{
    Subspace out;
    for (const auto& row : ech.basis()) {
        SparseVec v;
        for (const auto& [c, z] : row)
            v.emplace_back(c, Rational(z));
        out.push_back(std::move(v));
    }
    return out;
}

Subspace whole(const LieAlgebra& g)
{
    Subspace s;
    for (std::size_t i = 0; i < g.dim(); ++i)
        s.push_back({{i, Rational(1)}});
    return s;
}

std::vector<std::pair<std::size_t, Rational>> as_row(const SparseVec& v)
{
    return {v.begin(), v.end()};
}

template <class Next>
std::vector<std::size_t> series(const LieAlgebra& g, Next next)
{
    std::vector<std::size_t> dims{g.dim()};
    Subspace cur = whole(g);
    while (!cur.empty()) {
        Subspace nxt = next(cur);
        dims.push_back(nxt.size());
        if (nxt.size() == cur.size())
            break;
        cur = std::move(nxt);
    }
    return dims;
}

} // namespace

std::vector<std::size_t> derived_series(const LieAlgebra& g)
{
    return series(g, [&](const Subspace& cur) {
        SparseEchelon ech;
        for (std::size_t a = 0; a < cur.size(); ++a)
            for (std::size_t b = a + 1; b < cur.size(); ++b)
                ech.insert(as_row(bracket_sparse(g, cur[a], cur[b])));
        return span_basis(ech);
    });
}

std::vector<std::size_t> lower_central_series(const LieAlgebra& g)
{
    const Subspace all = whole(g);
    return series(g, [&](const Subspace& cur) {
        SparseEchelon ech;
        for (const auto& x : all)
            for (const auto& y : cur)
                ech.insert(as_row(bracket_sparse(g, x, y)));
        return span_basis(ech);
    });
}

bool solvable_by_series(const LieAlgebra& g)
{
    return derived_series(g).back() == 0;
}

bool solvable_by_cartan_criterion(const LieAlgebra& g)
{
    QMatrix k = killing_form(g);
    SparseEchelon ech;
    for (std::size_t a = 0; a < g.dim(); ++a)
        for (std::size_t b = a + 1; b < g.dim(); ++b)
            ech.insert(as_row(g.bracket(a, b)));
    for (const auto& row : ech.basis())
        for (std::size_t i = 0; i < g.dim(); ++i) {
            Rational s = 0;
            for (const auto& [c, z] : row)
                s += k(i, c) * Rational(z);
            if (s != 0)
                return false;
        }
    return true;
}

bool is_solvable(const LieAlgebra& g)
{
    bool a = solvable_by_series(g), b = solvable_by_cartan_criterion(g);
    if (a != b)
        throw std::logic_error("derived series and Cartan criterion disagree on solvability");
    return a;
}

bool is_nilpotent(const LieAlgebra& g)
{
    return lower_central_series(g).back() == 0;
}

bool is_semisimple(const LieAlgebra& g)
{
    return g.dim() > 0 && determinant(killing_form(g)) != 0;
}

bool is_simple(const LieAlgebra& g)
{
    if (!is_semisimple(g))
        return false;
    // Endomorphisms M commuting with every ad e_i; unknown M(r, c) has index r*n + c.
    const std::size_t n = g.dim();
    SparseEchelon ech;
    for (std::size_t i = 0; i < n; ++i) {
        QMatrix a = g.ad(i);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                std::map<std::size_t, Rational> row;
                for (std::size_t k = 0; k < n; ++k) {
                    if (a(k, c) != 0)
                        row[r * n + k] += a(k, c);
                    if (a(r, k) != 0)
                        row[k * n + c] -= a(r, k);
                }
                std::vector<std::pair<std::size_t, Rational>> v;
                for (auto& [idx, x] : row)
                    if (x != 0)
                        v.emplace_back(idx, x);
                if (!v.empty())
                    ech.insert(v);
            }
    }
    return n * n - ech.rank() == 1;
}

// ---------------------------------------------------------------- roots

RootDecomposition root_decomposition(const LieAlgebra& g)
{
    if (!g.has_cartan())
        throw NotDiagonalizable("no Cartan marker");
    const auto& h = g.cartan();
    for (auto a : h)
        for (auto b : h)
            if (!g.bracket(a, b).empty())
                throw NotDiagonalizable("marked elements do not commute");
    RootDecomposition rd;
    std::map<QVec, std::vector<std::size_t>> spaces;
    for (std::size_t j = 0; j < g.dim(); ++j) {
        QVec f(h.size(), Rational(0));
        for (std::size_t a = 0; a < h.size(); ++a) {
            const SparseVec& v = g.bracket(h[a], j);
            if (v.empty())
                continue;
            if (v.size() != 1 || v[0].first != j)
                throw NotDiagonalizable("ad " + g.labels()[h[a]] + " is not diagonal on " + g.labels()[j]);
            f[a] = v[0].second;
        }
        if (std::all_of(f.begin(), f.end(), [](const Rational& x) { return x == 0; }))
            ++rd.cartan_dim;
        else
            spaces[f].push_back(j);
    }
    for (auto& [f, b] : spaces)
        rd.roots.push_back({f, b});
    return rd;
}

RootMatch match_root_system(const LieAlgebra& g, const RootDecomposition& rd)
{
    const std::size_t r = g.cartan().size();
    if (rd.cartan_dim != r)
        throw NotDiagonalizable("marked elements do not span the zero weight space");
    if (rd.roots.empty())
        throw NotDiagonalizable("no roots");

    // Ordering functional sum_a f_a K^a with K beyond twice every scaled coordinate.
    Integer den = 1, big = 0;
    for (const auto& rs : rd.roots)
        for (const auto& x : rs.functional)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    for (const auto& rs : rd.roots)
        for (const auto& x : rs.functional) {
            Integer v = abs(x.get_num() * (den / x.get_den()));
            if (v > big)
                big = v;
        }
    Integer K = 2 * big + 1;
    auto level = [&](const QVec& f) {
        Rational s = 0;
        Integer p = 1;
        for (const auto& x : f) {
            s += x * Rational(p);
            p *= K;
        }
        return s;
    };
    std::vector<QVec> positive;
    std::map<QVec, std::size_t> index;
    for (std::size_t i = 0; i < rd.roots.size(); ++i) {
        index[rd.roots[i].functional] = i;
        if (level(rd.roots[i].functional) > 0)
            positive.push_back(rd.roots[i].functional);
    }
    auto sub = [](const QVec& a, const QVec& b) {
        QVec c = a;
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] -= b[i];
        return c;
    };
    std::vector<QVec> simple;
    for (const auto& a : positive) {
        bool decomposable = false;
        for (const auto& b : positive) {
            QVec c = sub(a, b);
            if (index.count(c) && level(c) > 0) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable)
            simple.push_back(a);
    }
    if (simple.size() != r)
        throw NotDiagonalizable("found " + std::to_string(simple.size()) + " simple roots for a rank " +
                                std::to_string(r) + " Cartan");

    // Coroots h_i = 2 [e_a, e_-a] / a([e_a, e_-a]) in the marked coordinates.
    std::vector<QVec> coroot(r);
    for (std::size_t i = 0; i < r; ++i) {
        QVec neg = simple[i];
        for (auto& x : neg)
            x = -x;
        if (!index.count(neg))
            throw NotDiagonalizable("negative of a simple root is missing");
        const auto& up = rd.roots[index[simple[i]]].basis;
        const auto& down = rd.roots[index[neg]].basis;
        if (up.size() != 1 || down.size() != 1)
            throw NotDiagonalizable("simple root space is not one-dimensional");
        const SparseVec& hv = g.bracket(up[0], down[0]);
        QVec c(r, Rational(0));
        for (const auto& [k, v] : hv) {
            auto pos = std::find(g.cartan().begin(), g.cartan().end(), k);
            if (pos == g.cartan().end())
                throw NotDiagonalizable("[e_a, e_-a] leaves the marked Cartan span");
            c[static_cast<std::size_t>(pos - g.cartan().begin())] = v;
        }
        Rational val = 0;
        for (std::size_t a = 0; a < r; ++a)
            val += c[a] * simple[i][a];
        if (val == 0)
            throw NotDiagonalizable("degenerate coroot");
        for (auto& x : c)
            x = 2 * x / val;
        coroot[i] = c;
    }
    IMatrix a(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Rational v = 0;
            for (std::size_t k = 0; k < r; ++k)
                v += coroot[i][k] * simple[j][k];
            if (!is_integer(v))
                throw NotDiagonalizable("non-integral Cartan entry");
            a(i, j) = to_int64(v.get_num());
        }

    RootMatch out;
    out.cartan = CartanMatrix(a);
    out.types = validate_cartan(a);
    CartanMatrix builtin = cartan_matrix(out.types);
    auto perm = cartan_isomorphism(out.cartan, builtin);
    if (!perm)
        throw std::logic_error("recovered Cartan matrix is not isomorphic to its own type");
    out.vertex_map = *perm;

    // Root coordinates: functional = sum n_i simple_i.
    QMatrix m(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k)
            m(k, i) = simple[i][k];
    RootSystem rs = RootSystem::build(builtin);
    RootSet seen;
    bool ok = true;
    for (const auto& space : rd.roots) {
        auto n = solve(m, space.functional);
        IVec coords(r, 0);
        if (!n) {
            ok = false;
            continue;
        }
        for (std::size_t i = 0; i < r; ++i) {
            if (!is_integer((*n)[i])) {
                ok = false;
                break;
            }
            coords[out.vertex_map[i]] = to_int64((*n)[i].get_num());
        }
        ok = ok && rs.is_root(coords) && seen.insert(coords).second && space.basis.size() == 1;
        out.root_coords.push_back(coords);
    }
    out.bijective = ok && seen.size() == rs.num_roots();
    return out;
}

// ---------------------------------------------------------------- cohomology

namespace {

using Mask = std::uint32_t;

int pos_in(Mask s, std::size_t bit)
{
    return std::popcount(s & ((Mask{1} << bit) - 1));
}

std::vector<std::vector<Mask>> masks_by_degree(std::size_t n)
{
    std::vector<std::vector<Mask>> out(n + 2); // C^{n+1} = 0 keeps d^n well defined
    for (Mask s = 0; s < (Mask{1} << n); ++s)
        out[static_cast<std::size_t>(std::popcount(s))].push_back(s);
    return out;
}

void check_size(const LieAlgebra& g, std::size_t max_dim)
{
    if (g.dim() > max_dim)
        throw TooLarge("dim g = " + std::to_string(g.dim()) + " exceeds the cohomology cap " +
                       std::to_string(max_dim));
    if (g.dim() > 30)
        throw TooLarge("exterior algebra index layout supports dim g <= 30");
}

// Weights of basis vectors under the marked Cartan, if everything is diagonal.
std::optional<std::vector<QVec>> basis_weights(const LieAlgebra& g)
{
    if (!g.has_cartan())
        return std::nullopt;
    try {
        std::vector<QVec> w(g.dim(), QVec(g.cartan().size(), Rational(0)));
        for (std::size_t j = 0; j < g.dim(); ++j)
            for (std::size_t a = 0; a < g.cartan().size(); ++a) {
                const SparseVec& v = g.bracket(g.cartan()[a], j);
                if (v.empty())
                    continue;
                if (v.size() != 1 || v[0].first != j)
                    return std::nullopt;
                w[j][a] = v[0].second;
            }
        return w;
    } catch (...) {
        return std::nullopt;
    }
}

std::optional<std::vector<QVec>> module_weights(const LieAlgebra& g, const LieModule& m)
{
    std::vector<QVec> w(m.dim, QVec(g.cartan().size(), Rational(0)));
    for (std::size_t a = 0; a < g.cartan().size(); ++a) {
        const QMatrix& h = m.action[g.cartan()[a]];
        for (std::size_t r = 0; r < m.dim; ++r)
            for (std::size_t c = 0; c < m.dim; ++c)
                if (r != c && h(r, c) != 0)
                    return std::nullopt;
        for (std::size_t r = 0; r < m.dim; ++r)
            w[r][a] = h(r, r);
    }
    return w;
}

class CeComplex {
public:
    CeComplex(const LieAlgebra& g, const LieModule& m) : g_(g), m_(m), masks_(masks_by_degree(g.dim()))
    {
        rank_of_.assign(std::size_t{1} << g.dim(), 0);
        for (std::size_t k = 0; k < masks_.size(); ++k)
            for (std::size_t i = 0; i < masks_[k].size(); ++i)
                rank_of_[masks_[k][i]] = static_cast<std::uint32_t>(i);
        action_.resize(g.dim());
        for (std::size_t t = 0; t < g.dim(); ++t) {
            action_[t].resize(m.dim);
            for (std::size_t a = 0; a < m.dim; ++a)
                for (std::size_t b = 0; b < m.dim; ++b)
                    if (m.action[t](b, a) != 0)
                        action_[t][a].emplace_back(b, m.action[t](b, a));
        }
    }

    std::size_t size(std::size_t k) const { return masks_[k].size() * m_.dim; }
    std::size_t index(Mask s, std::size_t a) const { return rank_of_[s] * m_.dim + a; }
    const std::vector<Mask>& masks(std::size_t k) const { return masks_[k]; }

    // d(e^S (x) v_a), indices into C^{k+1}.
    Accum apply(Mask s, std::size_t a) const
    {
        Accum out;
        const std::size_t n = g_.dim();
        for (std::size_t t = 0; t < n; ++t) {
            if (s >> t & 1)
                continue;
            Mask T = s | (Mask{1} << t);
            int i = pos_in(T, t);
            for (const auto& [b, c] : action_[t][a])
                add(out, index(T, b), i % 2 ? Rational(-c) : c);
        }
        for (std::size_t m = 0; m < n; ++m) {
            if (!(s >> m & 1))
                continue;
            int p = pos_in(s, m);
            Mask rest = s & ~(Mask{1} << m);
            for (const auto& [uw, c] : g_.by_target()[m]) {
                auto [u, w] = uw;
                if ((rest >> u & 1) || (rest >> w & 1))
                    continue;
                Mask T = rest | (Mask{1} << u) | (Mask{1} << w);
                int i = pos_in(T, u), j = pos_in(T, w);
                add(out, index(T, a), (i + j + p) % 2 ? Rational(-c) : c);
            }
        }
        return out;
    }

    Mask mask_at(std::size_t k, std::size_t idx) const { return masks_[k][idx / m_.dim]; }

private:
    static void add(Accum& acc, std::size_t i, const Rational& c)
    {
        auto [it, fresh] = acc.try_emplace(i, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0)
                acc.erase(it);
        }
    }

    const LieAlgebra& g_;
    const LieModule& m_;
    std::vector<std::vector<Mask>> masks_;
    std::vector<std::uint32_t> rank_of_;
    std::vector<std::vector<std::vector<std::pair<std::size_t, Rational>>>> action_;
};

} // namespace

std::vector<std::size_t> ce_cohomology(const LieAlgebra& g, const LieModule& m, std::size_t max_dim)
{
    check_size(g, max_dim);
    validate_module(g, m);
    const std::size_t n = g.dim();
    CeComplex cx(g, m);

    // Split each C^k by total weight when the marked Cartan acts diagonally on both
    // g and V; d preserves weight, so ranks add up over the blocks.
    auto gw = basis_weights(g);
    std::optional<std::vector<QVec>> vw;
    if (gw)
        vw = module_weights(g, m);
    auto weight_of = [&](Mask s, std::size_t a) {
        QVec w = vw ? (*vw)[a] : QVec{};
        if (gw && vw)
            for (std::size_t t = 0; t < n; ++t)
                if (s >> t & 1)
                    for (std::size_t x = 0; x < w.size(); ++x)
                        w[x] -= (*gw)[t][x];
        return w;
    };

    std::vector<std::size_t> rank(n + 1, 0);
    for (std::size_t k = 0; k < n; ++k) {
        std::map<QVec, SparseEchelon> blocks;
        for (Mask s : cx.masks(k))
            for (std::size_t a = 0; a < m.dim; ++a) {
                Accum img = cx.apply(s, a);
                // d^2 = 0
                Accum twice;
                for (const auto& [idx, c] : img) {
                    Accum next = cx.apply(cx.mask_at(k + 1, idx), idx % m.dim);
                    for (const auto& [j, v] : next) {
                        auto [it, fresh] = twice.try_emplace(j, c * v);
                        if (!fresh) {
                            it->second += c * v;
                            if (it->second == 0)
                                twice.erase(it);
                        }
                    }
                }
                if (!twice.empty())
                    throw std::logic_error("d^2 != 0 in the Chevalley-Eilenberg complex");
                if (img.empty())
                    continue;
                blocks[weight_of(s, a)].insert({img.begin(), img.end()});
            }
        for (auto& [w, ech] : blocks)
            rank[k] += ech.rank();
    }
    std::vector<std::size_t> betti(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        betti[k] = cx.size(k) - rank[k] - (k > 0 ? rank[k - 1] : 0);
    return betti;
}

std::vector<std::size_t> ce_cohomology(const LieAlgebra& g, std::size_t max_dim)
{
    return ce_cohomology(g, trivial_module(g), max_dim);
}

IntPoly poincare_polynomial(const std::vector<std::size_t>& betti)
{
    std::vector<Integer> c;
    for (auto b : betti)
        c.emplace_back(static_cast<unsigned long>(b));
    return IntPoly(std::move(c));
}

std::vector<QMatrix> two_cocycles(const LieAlgebra& g)
{
    check_size(g, kDefaultCohomologyMaxDim);
    LieModule triv = trivial_module(g);
    CeComplex cx(g, triv);
    const auto& masks = cx.masks(2);
    QMatrix d(cx.size(3), masks.size());
    for (std::size_t c = 0; c < masks.size(); ++c)
        for (const auto& [idx, v] : cx.apply(masks[c], 0))
            d(idx, c) = v;
    std::vector<QMatrix> out;
    for (const auto& z : nullspace(d)) {
        QMatrix w(g.dim(), g.dim());
        for (std::size_t c = 0; c < masks.size(); ++c) {
            if (z[c] == 0)
                continue;
            auto i = static_cast<std::size_t>(std::countr_zero(masks[c]));
            auto j = static_cast<std::size_t>(31 - std::countl_zero(masks[c]));
            w(i, j) = z[c];
            w(j, i) = -z[c];
        }
        out.push_back(std::move(w));
    }
    return out;
}

LieAlgebra central_extension(const LieAlgebra& g, const QMatrix& omega)
{
    const std::size_t n = g.dim();
    if (omega.rows() != n || omega.cols() != n)
        throw DimensionMismatch("cocycle must be dim x dim");
    std::vector<std::string> labels = g.labels();
    labels.push_back("c");
    std::vector<LieAlgebra::Bracket> br;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            SparseVec v = g.bracket(i, j);
            if (omega(i, j) != 0)
                v.emplace_back(n, omega(i, j));
            if (!v.empty())
                br.push_back({i, j, v});
        }
    return LieAlgebra(std::move(labels), br, g.cartan());
}

std::size_t invariant_forms_dim(const LieAlgebra& g, int degree, std::size_t max_dim)
{
    check_size(g, max_dim);
    const std::size_t n = g.dim();
    if (degree < 0 || static_cast<std::size_t>(degree) > n)
        return 0;
    auto gw = basis_weights(g);
    // Candidates: all k-forms, or only weight-zero ones when weights are available
    // (an invariant form is killed by the Cartan, so it has weight zero).
    std::vector<Mask> cols;
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
        if (std::popcount(s) != degree)
            continue;
        if (gw) {
            QVec w((*gw)[0].size(), Rational(0));
            for (std::size_t t = 0; t < n; ++t)
                if (s >> t & 1)
                    for (std::size_t x = 0; x < w.size(); ++x)
                        w[x] += (*gw)[t][x];
            if (std::any_of(w.begin(), w.end(), [](const Rational& x) { return x != 0; }))
                continue;
        }
        cols.push_back(s);
    }
    std::map<Mask, std::size_t> slot;
    SparseEchelon ech;
    for (Mask s : cols) {
        // e_i . e^S = - sum_p sum_t c_{i t}^{s_p} e^{S with s_p replaced by t}
        Accum img;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t t = 0; t < n; ++t)
                for (const auto& [sp, c] : g.bracket(i, t)) {
                    if (!(s >> sp & 1))
                        continue;
                    Mask rest = s & ~(Mask{1} << sp);
                    if (rest >> t & 1)
                        continue;
                    Mask T = rest | (Mask{1} << t);
                    int p = pos_in(s, sp), q = pos_in(T, t);
                    auto it = slot.try_emplace(T, slot.size()).first;
                    std::size_t key = i * (std::size_t{1} << n) + it->second;
                    Rational v = (p + q) % 2 ? Rational(c) : Rational(-c);
                    auto [jt, fresh] = img.try_emplace(key, v);
                    if (!fresh) {
                        jt->second += v;
                        if (jt->second == 0)
                            img.erase(jt);
                    }
                }
        if (!img.empty())
            ech.insert({img.begin(), img.end()});
    }
    return cols.size() - ech.rank();
}

IntPoly invariant_forms_poincare(const LieAlgebra& g, std::size_t max_dim)
{
    check_size(g, max_dim);
    std::vector<Integer> c;
    for (std::size_t k = 0; k <= g.dim(); ++k)
        c.emplace_back(static_cast<unsigned long>(invariant_forms_dim(g, static_cast<int>(k), max_dim)));
    return IntPoly(std::move(c));
}

TripleProduct triple_product_invariant(const LieAlgebra& g, std::size_t max_dim)
{
    return {invariant_forms_dim(g, 3, max_dim), is_simple(g)};
}

} // namespace liekit
