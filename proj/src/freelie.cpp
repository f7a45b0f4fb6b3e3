#include "liekit/freelie.hpp"

#include <algorithm>
#include <sstream>

#include "liekit/error.hpp"

namespace liekit {

std::string word_string(const Word& w, int alphabet)
{
    if (w.empty())
        return "1";
    std::string s;
    for (Letter a : w)
        s += static_cast<char>(alphabet <= 3 ? 'x' + a : 'a' + a);
    return s;
}

Word parse_word(const std::string& s, int alphabet)
{
    Word w;
    if (s == "1")
        return w;
    for (char c : s) {
        int a = alphabet <= 3 ? c - 'x' : c - 'a';
        if (a < 0 || a >= alphabet)
            throw ParseError("letter '" + std::string(1, c) + "' outside the alphabet");
        w.push_back(static_cast<Letter>(a));
    }
    return w;
}

FreeSeries::FreeSeries(int alphabet, int order) : n_(alphabet), order_(order)
{
    if (alphabet < 1 || alphabet > 26)
        throw DimensionMismatch("alphabet size must be between 1 and 26");
    if (order < 0)
        throw DimensionMismatch("negative truncation order");
}

FreeSeries FreeSeries::one(int alphabet, int order)
{
    return word(alphabet, order, {});
}

FreeSeries FreeSeries::letter(int alphabet, int order, Letter a, const Rational& c)
{
    return word(alphabet, order, {a}, c);
}

FreeSeries FreeSeries::word(int alphabet, int order, const Word& w, const Rational& c)
{
    FreeSeries s(alphabet, order);
    s.add(w, c);
    return s;
}

Rational FreeSeries::coeff(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void FreeSeries::add(const Word& w, const Rational& c)
{
    if (static_cast<int>(w.size()) > order_ || c == 0)
        return;
    for (Letter a : w)
        if (a >= n_)
            throw IndexOutOfRange("letter outside the alphabet");
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

FreeSeries FreeSeries::homogeneous(int degree) const
{
    FreeSeries out(n_, order_);
    for (const auto& [w, c] : terms_)
        if (static_cast<int>(w.size()) == degree)
            out.terms_.emplace(w, c);
    return out;
}

FreeSeries FreeSeries::truncated(int order) const
{
    FreeSeries out(n_, std::min(order, order_));
    for (const auto& [w, c] : terms_)
        if (static_cast<int>(w.size()) <= out.order_)
            out.terms_.emplace(w, c);
    return out;
}

FreeSeries FreeSeries::scaled(const Rational& c) const
{
    FreeSeries out(n_, order_);
    if (c == 0)
        return out;
    for (const auto& [w, v] : terms_)
        out.terms_.emplace(w, v * c);
    return out;
}

namespace {

void check_compatible(const FreeSeries& a, const FreeSeries& b)
{
    if (a.alphabet() != b.alphabet())
        throw DimensionMismatch("series over different alphabets");
}

} // namespace

FreeSeries operator+(const FreeSeries& a, const FreeSeries& b)
{
    check_compatible(a, b);
    FreeSeries out = a.truncated(std::min(a.order(), b.order()));
    for (const auto& [w, c] : b.terms())
        out.add(w, c);
    return out;
}

FreeSeries operator-(const FreeSeries& a, const FreeSeries& b)
{
    check_compatible(a, b);
    FreeSeries out = a.truncated(std::min(a.order(), b.order()));
    for (const auto& [w, c] : b.terms())
        out.add(w, -c);
    return out;
}

FreeSeries operator*(const FreeSeries& a, const FreeSeries& b)
{
    check_compatible(a, b);
    FreeSeries out(a.alphabet(), std::min(a.order(), b.order()));
    const auto limit = static_cast<std::size_t>(out.order());
    for (const auto& [u, c] : a.terms())
        for (const auto& [v, d] : b.terms()) {
            if (u.size() + v.size() > limit)
                continue;
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            out.add(w, c * d);
        }
    return out;
}

std::string FreeSeries::to_string() const
{
    if (terms_.empty())
        return "0";
    std::vector<std::pair<Word, Rational>> sorted(terms_.begin(), terms_.end());
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& x, const auto& y) { return x.first.size() < y.first.size(); });
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : sorted) {
        if (!first)
            os << " + ";
        first = false;
        os << liekit::to_string(c) << "*" << word_string(w, n_);
    }
    return os.str();
}

FreeSeries commutator(const FreeSeries& a, const FreeSeries& b)
{
    return a * b - b * a;
}

FreeSeries exp(const FreeSeries& a)
{
    if (a.constant_term() != 0)
        throw BadConstantTerm("exp needs a zero constant term");
    FreeSeries sum = FreeSeries::one(a.alphabet(), a.order());
    FreeSeries power = sum;
    for (int k = 1; k <= a.order(); ++k) {
        power = (power * a).scaled(Rational(1, k));
        if (power.is_zero())
            break;
        sum = sum + power;
    }
    return sum;
}

FreeSeries log(const FreeSeries& a)
{
    if (a.constant_term() != 1)
        throw BadConstantTerm("log needs constant term 1");
    FreeSeries b = a - FreeSeries::one(a.alphabet(), a.order());
    FreeSeries sum(a.alphabet(), a.order());
    FreeSeries power = FreeSeries::one(a.alphabet(), a.order());
    for (int k = 1; k <= a.order(); ++k) {
        power = power * b;
        if (power.is_zero())
            break;
        sum = sum + power.scaled(Rational(k % 2 ? 1 : -1, k));
    }
    return sum;
}

std::optional<PrimitivityWitness> primitivity_defect(const FreeSeries& s)
{
    // Delta(w) = sum over position subsets S of w|_S (x) w|_{not S}; the two
    // trivial subsets give s(x)1 + 1(x)s, so only proper nonempty subsets remain.
    std::map<std::pair<std::size_t, std::pair<Word, Word>>, Rational> defect;
    if (s.constant_term() != 0)
        return PrimitivityWitness{{}, {}, s.constant_term()};
    for (const auto& [w, c] : s.terms()) {
        const std::size_t m = w.size();
        if (m >= 63)
            throw TooDeep("word too long for the coproduct");
        const std::uint64_t full = (std::uint64_t{1} << m) - 1;
        for (std::uint64_t mask = 1; mask < full; ++mask) {
            Word l, r;
            for (std::size_t i = 0; i < m; ++i)
                ((mask >> i) & 1 ? l : r).push_back(w[i]);
            defect[{m, {std::move(l), std::move(r)}}] += c;
        }
    }
    for (const auto& [key, c] : defect)
        if (c != 0)
            return PrimitivityWitness{key.second.first, key.second.second, c};
    return std::nullopt;
}

std::vector<Word> lyndon_words(int alphabet, int length)
{
    std::vector<Word> out;
    if (alphabet < 1 || length < 1)
        return out;
    std::vector<int> w{-1};
    while (!w.empty()) {
        ++w.back();
        if (static_cast<int>(w.size()) == length)
            out.emplace_back(w.begin(), w.end());
        const std::size_t k = w.size();
        while (static_cast<int>(w.size()) < length)
            w.push_back(w[w.size() - k]);
        while (!w.empty() && w.back() == alphabet - 1)
            w.pop_back();
    }
    return out;
}

bool is_lyndon(const Word& w)
{
    if (w.empty())
        return false;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + i, w.end()))
            return false;
    return true;
}

std::pair<Word, Word> standard_factorization(const Word& w)
{
    for (std::size_t i = 1; i < w.size(); ++i) {
        Word v(w.begin() + i, w.end());
        if (is_lyndon(v))
            return {Word(w.begin(), w.begin() + i), v};
    }
    throw std::logic_error("standard factorization of a word of length < 2");
}

std::string bracket_string(const Word& lyndon, int alphabet)
{
    if (lyndon.size() == 1)
        return word_string(lyndon, alphabet);
    auto [u, v] = standard_factorization(lyndon);
    return "[" + bracket_string(u, alphabet) + "," + bracket_string(v, alphabet) + "]";
}

FreeSeries expand_bracket(const Word& lyndon, int alphabet, int order)
{
    if (lyndon.size() == 1)
        return FreeSeries::word(alphabet, order, lyndon);
    auto [u, v] = standard_factorization(lyndon);
    return commutator(expand_bracket(u, alphabet, order), expand_bracket(v, alphabet, order));
}

FreeSeries LieElement::expand(int order) const
{
    FreeSeries out(alphabet, order);
    for (const auto& [w, c] : coeffs)
        out = out + expand_bracket(w, alphabet, order).scaled(c);
    return out;
}

LieElement LieElement::homogeneous(int degree) const
{
    LieElement out{alphabet, {}};
    for (const auto& [w, c] : coeffs)
        if (static_cast<int>(w.size()) == degree)
            out.coeffs.emplace(w, c);
    return out;
}

std::string LieElement::to_string() const
{
    if (coeffs.empty())
        return "0";
    std::vector<std::pair<Word, Rational>> sorted(coeffs.begin(), coeffs.end());
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& x, const auto& y) { return x.first.size() < y.first.size(); });
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : sorted) {
        if (!first)
            os << " + ";
        first = false;
        os << liekit::to_string(c) << "*" << bracket_string(w, alphabet);
    }
    return os.str();
}

LieElement lie_decompose(const FreeSeries& s)
{
    if (s.constant_term() != 0)
        throw NotPrimitive("nonzero constant term");
    LieElement out{s.alphabet(), {}};
    std::map<Word, Rational> rest = s.terms();
    while (!rest.empty()) {
        // std::map orders shorter words first, then lexicographically.
        auto [w, c] = *rest.begin();
        if (!is_lyndon(w))
            throw NotPrimitive("residual leads with the non-Lyndon word " + word_string(w, s.alphabet()));
        FreeSeries p = expand_bracket(w, s.alphabet(), static_cast<int>(w.size()));
        for (const auto& [v, d] : p.terms()) {
            auto [it, fresh] = rest.try_emplace(v, -c * d);
            if (!fresh) {
                it->second -= c * d;
                if (it->second == 0)
                    rest.erase(it);
            }
        }
        out.coeffs.emplace(w, c);
    }
    return out;
}

std::vector<Integer> witt_dimensions(int alphabet, int up_to)
{
    // Solve degree by degree: with F = prod_{k<m} (1-q^k)^{d_k}, the factor
    // (1-q^m)^{d_m} = 1 - d_m q^m + O(q^{2m}) fixes d_m = [q^m]F - [q^m](1 - n q).
    std::vector<Integer> f(up_to + 1, Integer(0));
    f[0] = 1;
    std::vector<Integer> d;
    for (int m = 1; m <= up_to; ++m) {
        Integer target = m == 1 ? Integer(-alphabet) : Integer(0);
        Integer dm = f[m] - target;
        d.push_back(dm);
        // multiply f by (1 - q^m)^{dm} = sum_j binom(dm, j) (-1)^j q^{mj}
        if (dm < 0)
            throw std::logic_error("negative Witt dimension");
        std::vector<Integer> g(up_to + 1, Integer(0));
        Integer binom = 1;
        for (int j = 0; m * j <= up_to; ++j) {
            if (j > 0) {
                binom *= dm - (j - 1);
                binom /= j;
            }
            if (binom == 0)
                break;
            Integer sgn_binom = j % 2 ? Integer(-binom) : binom;
            for (int k = 0; k + m * j <= up_to; ++k)
                g[k + m * j] += sgn_binom * f[k];
        }
        f = std::move(g);
    }
    return d;
}

std::size_t lie_degree_rank(int alphabet, int degree)
{
    std::map<Word, std::size_t> index;
    SparseEchelon ech;
    for (const auto& w : lyndon_words(alphabet, degree)) {
        std::vector<std::pair<std::size_t, Rational>> row;
        FreeSeries e = expand_bracket(w, alphabet, degree);
        for (const auto& [v, c] : e.terms()) {
            auto it = index.try_emplace(v, index.size()).first;
            row.emplace_back(it->second, c);
        }
        ech.insert(row);
    }
    return ech.rank();
}

BchResult bch(int order, int max_order)
{
    if (order < 1)
        throw DimensionMismatch("order must be at least 1");
    if (order > max_order)
        throw TooDeep("order " + std::to_string(order) + " exceeds the cap " + std::to_string(max_order));
    FreeSeries x = FreeSeries::letter(2, order, 0), y = FreeSeries::letter(2, order, 1);
    FreeSeries z = log(exp(x) * exp(y));
    return {z, lie_decompose(z)};
}

QMatrix evaluate(const FreeSeries& s, const std::vector<QMatrix>& letters)
{
    if (static_cast<int>(letters.size()) != s.alphabet())
        throw DimensionMismatch("need one matrix per letter");
    const std::size_t n = letters.empty() ? 0 : letters[0].rows();
    for (const auto& m : letters)
        if (m.rows() != n || m.cols() != n)
            throw DimensionMismatch("letter matrices must be square of equal size");
    QMatrix sum(n, n);
    for (const auto& [w, c] : s.terms()) {
        QMatrix p = QMatrix::identity(n);
        for (Letter a : w)
            p = p * letters[a];
        sum = sum + p.scaled(c);
    }
    return sum;
}

QMatrix nilpotent_exp(const QMatrix& m)
{
    const std::size_t n = m.rows();
    QMatrix sum = QMatrix::identity(n), power = sum;
    for (std::size_t k = 1; k <= n; ++k) {
        power = (power * m).scaled(Rational(1, static_cast<long>(k)));
        if (power.is_zero())
            break;
        sum = sum + power;
    }
    if (!(power * m).is_zero() && n > 0)
        throw NotDiagonalizable("matrix is not nilpotent");
    return sum;
}

QMatrix unipotent_log(const QMatrix& m)
{
    const std::size_t n = m.rows();
    QMatrix b = m - QMatrix::identity(n);
    QMatrix sum(n, n), power = QMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        power = power * b;
        if (power.is_zero())
            break;
        sum = sum + power.scaled(Rational(k % 2 ? 1 : -1, static_cast<long>(k)));
    }
    if (!(power * b).is_zero() && n > 0)
        throw NotDiagonalizable("matrix is not unipotent");
    return sum;
}

} // namespace liekit
