#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "liekit/rational.hpp"

namespace liekit {

// Dense univariate polynomial; coeffs()[k] is the coefficient of q^k. No trailing zeros.
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<T> c) : c_(c) { trim(); }
    explicit Polynomial(std::vector<T> c) : c_(std::move(c)) { trim(); }

    static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
    static Polynomial monomial(std::size_t degree, const T& v = T(1))
    {
        std::vector<T> c(degree + 1, T(0));
        c[degree] = v;
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<T>& coeffs() const { return c_; }
    T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }

    T eval(const T& x) const
    {
        T acc(0);
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * x + c_[i];
        return acc;
    }

    T value_at_one() const
    {
        T s(0);
        for (const auto& x : c_)
            s += x;
        return s;
    }

    bool is_palindromic() const
    {
        for (std::size_t i = 0, j = c_.size(); i < j; ++i, --j)
            if (c_[i] != c_[j - 1])
                return false;
        return true;
    }

    bool has_nonnegative_coeffs() const
    {
        for (const auto& x : c_)
            if (x < 0)
                return false;
        return true;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b)
    {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i)
            c[i] += b.c_[i];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b)
    {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i)
            c[i] -= b.c_[i];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(c));
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const T& s) const
    {
        std::vector<T> c = c_;
        for (auto& x : c)
            x *= s;
        return Polynomial(std::move(c));
    }

    // Quotient and remainder; requires the divisor's leading coefficient to divide
    // exactly at every step when T is an integer type.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b)
    {
        if (b.is_zero())
            throw std::domain_error("polynomial division by zero");
        std::vector<T> rem = a.c_;
        if (rem.size() < b.c_.size())
            return {Polynomial(), a};
        std::vector<T> quot(rem.size() - b.c_.size() + 1, T(0));
        const T& lead = b.c_.back();
        for (std::size_t k = quot.size(); k-- > 0;) {
            T q = rem[k + b.c_.size() - 1] / lead;
            if (q * lead != rem[k + b.c_.size() - 1])
                throw std::domain_error("inexact polynomial division");
            quot[k] = q;
            if (q == 0)
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                rem[k + j] -= q * b.c_[j];
        }
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }

    // Throws if b does not divide exactly.
    friend Polynomial exact_div(const Polynomial& a, const Polynomial& b)
    {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero())
            throw std::domain_error("polynomial division has a remainder");
        return q;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string to_string(const std::string& var = "q") const
    {
        if (c_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0)
                continue;
            T v = c_[k];
            bool neg = v < 0;
            if (neg)
                v = -v;
            if (!first)
                os << (neg ? " - " : " + ");
            else if (neg)
                os << "-";
            first = false;
            bool unit = (v == 1);
            if (k == 0 || !unit)
                os << liekit::to_string(v);
            if (k > 0) {
                if (!unit)
                    os << "*";
                os << var;
                if (k > 1)
                    os << "^" << k;
            }
        }
        return os.str();
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<T> c_;
};

using IntPoly = Polynomial<Integer>;
using RatPoly = Polynomial<Rational>;

// 1 + q + ... + q^(n-1)
IntPoly q_integer(std::size_t n);

} // namespace liekit
