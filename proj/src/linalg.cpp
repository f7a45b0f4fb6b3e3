#include "liekit/linalg.hpp"

#include <algorithm>
#include <utility>

#include "liekit/error.hpp"

namespace liekit {

QMatrix to_qmatrix(const IMatrix& m)
{
    QMatrix q(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            q(r, c) = Rational(static_cast<long>(m(r, c)));
    return q;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col) == 0)
            ++sel;
        if (sel == m.rows())
            continue;
        if (sel != row)
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m(sel, c), m(row, c));
        Rational inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c)
            m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0)
                continue;
            Rational f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

Rational determinant(QMatrix m)
{
    if (m.rows() != m.cols())
        throw DimensionMismatch("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m(sel, col) == 0)
            ++sel;
        if (sel == n)
            return 0;
        if (sel != col) {
            for (std::size_t c = 0; c < n; ++c)
                std::swap(m(sel, c), m(col, c));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col) == 0)
                continue;
            Rational f = m(r, col) / m(col, col);
            for (std::size_t c = col; c < n; ++c)
                m(r, c) -= f * m(col, c);
        }
    }
    return det;
}

std::size_t rank(const QMatrix& m)
{
    SparseEchelon ech;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::vector<std::pair<std::size_t, Rational>> row;
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0)
                row.emplace_back(c, m(r, c));
        ech.insert(row);
    }
    return ech.rank();
}

QMatrix inverse(const QMatrix& m)
{
    if (m.rows() != m.cols())
        throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    QMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1)
        throw DimensionMismatch("matrix is singular");
    QMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = aug(r, n + c);
    return inv;
}

std::vector<QVec> nullspace(const QMatrix& m)
{
    QMatrix a = m;
    auto piv = rref(a);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : piv)
        is_pivot[p] = true;
    std::vector<QVec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        QVec v(m.cols(), Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i)
            v[piv[i]] = -a(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVec> solve(const QMatrix& m, const QVec& b)
{
    if (b.size() != m.rows())
        throw DimensionMismatch("right-hand side length");
    QMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == m.cols())
        return std::nullopt;
    QVec x(m.cols(), Rational(0));
    for (std::size_t i = 0; i < piv.size(); ++i)
        x[piv[i]] = aug(i, m.cols());
    return x;
}

bool is_positive_definite(const QMatrix& s)
{
    // Leading minors via Gaussian elimination without pivoting: all pivots must be
    // positive, which is equivalent to all leading principal minors being positive.
    QMatrix m = s;
    const std::size_t n = m.rows();
    for (std::size_t k = 0; k < n; ++k) {
        if (m(k, k) <= 0)
            return false;
        for (std::size_t r = k + 1; r < n; ++r) {
            if (m(r, k) == 0)
                continue;
            Rational f = m(r, k) / m(k, k);
            for (std::size_t c = k; c < n; ++c)
                m(r, c) -= f * m(k, c);
        }
    }
    return true;
}

std::vector<Integer> smith_diagonal(const IMatrix& input)
{
    const std::size_t rows = input.rows(), cols = input.cols();
    Matrix<Integer> m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = Integer(static_cast<long>(input(r, c)));

    const std::size_t n = std::min(rows, cols);
    for (std::size_t t = 0; t < n; ++t) {
        // Move the smallest nonzero entry of the trailing block to (t, t), clear its
        // row and column, repeat until the pivot divides the whole block.
        for (;;) {
            std::size_t br = rows, bc = cols;
            for (std::size_t r = t; r < rows; ++r)
                for (std::size_t c = t; c < cols; ++c)
                    if (m(r, c) != 0 && (br == rows || abs(m(r, c)) < abs(m(br, bc)))) {
                        br = r;
                        bc = c;
                    }
            if (br == rows)
                goto done;
            for (std::size_t c = 0; c < cols; ++c)
                std::swap(m(t, c), m(br, c));
            for (std::size_t r = 0; r < rows; ++r)
                std::swap(m(r, t), m(r, bc));

            bool clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                Integer q = m(r, t) / m(t, t);
                if (q != 0)
                    for (std::size_t c = t; c < cols; ++c)
                        m(r, c) -= q * m(t, c);
                if (m(r, t) != 0)
                    clean = false;
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                Integer q = m(t, c) / m(t, t);
                if (q != 0)
                    for (std::size_t r = t; r < rows; ++r)
                        m(r, c) -= q * m(r, t);
                if (m(t, c) != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            bool divides = true;
            for (std::size_t r = t + 1; r < rows && divides; ++r)
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (m(r, c) % m(t, t) != 0) {
                        for (std::size_t cc = t; cc < cols; ++cc)
                            m(t, cc) += m(r, cc);
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
    }
done:
    std::vector<Integer> diag;
    for (std::size_t t = 0; t < n; ++t)
        diag.push_back(abs(m(t, t)));
    return diag;
}

SparseRow to_integer_row(const std::vector<std::pair<std::size_t, Rational>>& row)
{
    Integer lcm = 1;
    for (const auto& [c, v] : row)
        if (v != 0)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    SparseRow out;
    for (const auto& [c, v] : row)
        if (v != 0)
            out.emplace_back(c, Integer(v.get_num() * (lcm / v.get_den())));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    // merge duplicate columns
    SparseRow merged;
    for (auto& e : out) {
        if (!merged.empty() && merged.back().first == e.first)
            merged.back().second += e.second;
        else
            merged.push_back(std::move(e));
        if (merged.back().second == 0)
            merged.pop_back();
    }
    return merged;
}

namespace {

void make_primitive(SparseRow& row)
{
    if (row.empty())
        return;
    Integer g = 0;
    for (const auto& e : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
        if (g == 1)
            break;
    }
    if (row.front().second < 0)
        g = -g;
    if (g != 1)
        for (auto& e : row)
            mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
}

// a*x - b*y, both sorted.
SparseRow combine(const Integer& a, const SparseRow& x, const Integer& b, const SparseRow& y)
{
    SparseRow out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.emplace_back(x[i].first, a * x[i].second);
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, -b * y[j].second);
            ++j;
        } else {
            Integer v = a * x[i].second - b * y[j].second;
            if (v != 0)
                out.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

SparseRow SparseEchelon::reduce(SparseRow row) const
{
    make_primitive(row);
    while (!row.empty()) {
        auto it = pivots_.find(row.front().first);
        if (it == pivots_.end())
            break;
        const SparseRow& p = it->second;
        Integer g;
        mpz_gcd(g.get_mpz_t(), p.front().second.get_mpz_t(), row.front().second.get_mpz_t());
        Integer a = p.front().second / g;
        Integer b = row.front().second / g;
        row = combine(a, row, b, p);
        make_primitive(row);
    }
    return row;
}

bool SparseEchelon::insert_integer(SparseRow row)
{
    row = reduce(std::move(row));
    if (row.empty())
        return false;
    pivots_.emplace(row.front().first, std::move(row));
    return true;
}

bool SparseEchelon::insert(const std::vector<std::pair<std::size_t, Rational>>& row)
{
    return insert_integer(to_integer_row(row));
}

bool SparseEchelon::contains(const std::vector<std::pair<std::size_t, Rational>>& row) const
{
    return reduce(to_integer_row(row)).empty();
}

std::vector<SparseRow> SparseEchelon::basis() const
{
    std::vector<SparseRow> out;
    out.reserve(pivots_.size());
    for (const auto& [c, r] : pivots_)
        out.push_back(r);
    return out;
}

} // namespace liekit
