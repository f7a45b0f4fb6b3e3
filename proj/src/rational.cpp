#include "liekit/rational.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "liekit/error.hpp"

namespace liekit {

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text)
{
    auto valid_int = [](std::string_view s) {
        if (s.empty())
            return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                return false;
        return true;
    };
    auto strip_plus = [](std::string_view s) {
        return (!s.empty() && s[0] == '+') ? std::string(s.substr(1)) : std::string(s);
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-')
        throw ParseError("not a rational: '" + std::string(text) + "'");
    Integer n(strip_plus(num)), d(strip_plus(den));
    if (d == 0)
        throw ParseError("zero denominator: '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

int64_t to_int64(const Integer& z)
{
    if (!z.fits_slong_p())
        throw std::overflow_error("integer does not fit in 64 bits: " + z.get_str());
    return z.get_si();
}

QVec to_qvec(const IVec& v)
{
    QVec out;
    out.reserve(v.size());
    for (auto x : v)
        out.emplace_back(static_cast<long>(x));
    return out;
}

std::string format_vec(const IVec& v, char sep)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            os << sep;
        os << v[i];
    }
    return os.str();
}

IVec parse_ivec(std::string_view text)
{
    IVec out;
    if (text.empty())
        return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        auto piece = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        int64_t value = 0;
        const char* first = piece.data();
        const char* last = piece.data() + piece.size();
        if (!piece.empty() && *first == '+')
            ++first;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (piece.empty() || ec != std::errc() || ptr != last)
            throw ParseError("not an integer list: '" + std::string(text) + "'");
        out.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

} // namespace liekit
