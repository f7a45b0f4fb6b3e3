#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liekit/linalg.hpp"
#include "liekit/rational.hpp"

namespace liekit {

using Letter = std::uint8_t;
using Word = std::vector<Letter>;

// Letters print as x, y, z for alphabets of size <= 3 and a, b, c, ... otherwise.
std::string word_string(const Word& w, int alphabet);
Word parse_word(const std::string& s, int alphabet);

// Element of the free associative algebra on `alphabet` letters, truncated above
// total degree `order`.
class FreeSeries {
public:
    FreeSeries(int alphabet, int order);

    static FreeSeries one(int alphabet, int order);
    static FreeSeries letter(int alphabet, int order, Letter a, const Rational& c = 1);
    static FreeSeries word(int alphabet, int order, const Word& w, const Rational& c = 1);

    int alphabet() const { return n_; }
    int order() const { return order_; }
    const std::map<Word, Rational>& terms() const { return terms_; }
    Rational coeff(const Word& w) const;
    Rational constant_term() const { return coeff({}); }
    bool is_zero() const { return terms_.empty(); }

    void add(const Word& w, const Rational& c);
    FreeSeries homogeneous(int degree) const;
    FreeSeries truncated(int order) const;
    FreeSeries scaled(const Rational& c) const;

    friend FreeSeries operator+(const FreeSeries& a, const FreeSeries& b);
    friend FreeSeries operator-(const FreeSeries& a, const FreeSeries& b);
    friend FreeSeries operator*(const FreeSeries& a, const FreeSeries& b);
    friend bool operator==(const FreeSeries& a, const FreeSeries& b) { return a.terms_ == b.terms_; }

    std::string to_string() const;

private:
    int n_, order_;
    std::map<Word, Rational> terms_;
};

FreeSeries commutator(const FreeSeries& a, const FreeSeries& b);
// Throws BadConstantTerm unless the constant term is 0 (exp) or 1 (log).
FreeSeries exp(const FreeSeries& a);
FreeSeries log(const FreeSeries& a);

// Delta(s) - s(x)1 - 1(x)s, its first nonzero term if any.
struct PrimitivityWitness {
    Word left, right;
    Rational coeff;
};
std::optional<PrimitivityWitness> primitivity_defect(const FreeSeries& s);
inline bool is_primitive(const FreeSeries& s) { return !primitivity_defect(s).has_value(); }

// Lyndon words of the given length, in lexicographic order (Duval).
std::vector<Word> lyndon_words(int alphabet, int length);
bool is_lyndon(const Word& w);
// w = uv with v the longest proper Lyndon suffix.
std::pair<Word, Word> standard_factorization(const Word& w);
std::string bracket_string(const Word& lyndon, int alphabet);
// Expansion of the standard bracketing into words.
FreeSeries expand_bracket(const Word& lyndon, int alphabet, int order);

// Coordinates over Lyndon brackets.
struct LieElement {
    int alphabet = 2;
    std::map<Word, Rational> coeffs; // keys are Lyndon words

    FreeSeries expand(int order) const;
    LieElement homogeneous(int degree) const;
    std::string to_string() const;
};

// Triangular rewriting: the lexicographically smallest word of P_w is w itself.
// Throws NotPrimitive when the input is not a Lie element.
LieElement lie_decompose(const FreeSeries& s);

// Dimensions d_1..d_N solving prod_m (1 - q^m)^{d_m} = 1 - n q.
std::vector<Integer> witt_dimensions(int alphabet, int up_to);
// Rank of the span of expanded Lyndon brackets of one degree.
std::size_t lie_degree_rank(int alphabet, int degree);

constexpr int kDefaultBchMaxOrder = 10;

struct BchResult {
    FreeSeries series; // log(exp x exp y)
    LieElement lie;
};
// Throws TooDeep if order exceeds max_order.
BchResult bch(int order, int max_order = kDefaultBchMaxOrder);

// Substitute matrices for the letters; all matrices square of equal size.
QMatrix evaluate(const FreeSeries& s, const std::vector<QMatrix>& letters);
// exp and log of a nilpotent matrix by finite sums.
QMatrix nilpotent_exp(const QMatrix& m);
QMatrix unipotent_log(const QMatrix& m);

} // namespace liekit
