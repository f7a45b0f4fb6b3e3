#include "liekit/json_io.hpp"

#include <fstream>
#include <sstream>

#include "liekit/error.hpp"

namespace liekit {

Json json_document(const std::string& kind)
{
    Json j;
    j["schema"] = kSchema;
    j["kind"] = kind;
    return j;
}

Json json_rational(const Rational& q) { return to_string(q); }
Json json_integer(const Integer& z) { return z.get_str(); }

Json json_vec(const IVec& v)
{
    Json a = Json::array();
    for (auto x : v)
        a.push_back(x);
    return a;
}

Json json_qvec(const QVec& v)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(to_string(x));
    return a;
}

namespace {

template <class T>
Json univariate(const Polynomial<T>& p)
{
    Json a = Json::array();
    for (std::size_t k = 0; k < p.coeffs().size(); ++k)
        if (p.coeffs()[k] != 0)
            a.push_back({{"exponents", {k}}, {"coeff", to_string(p.coeffs()[k])}});
    return a;
}

} // namespace

Json json_poly(const IntPoly& p) { return univariate(p); }
Json json_poly(const RatPoly& p) { return univariate(p); }

Json json_poly(const SparsePoly& p)
{
    Json a = Json::array();
    for (const auto& [e, c] : p.terms)
        a.push_back({{"exponents", json_vec(e)}, {"coeff", c.get_str()}});
    return a;
}

Partition parse_partition(const std::string& text)
{
    std::string t = text;
    if (!t.empty() && (t.front() == '(' || t.front() == '['))
        t = t.substr(1);
    if (!t.empty() && (t.back() == ')' || t.back() == ']'))
        t.pop_back();
    if (t.empty())
        return {};
    IVec v = parse_ivec(t);
    std::vector<int> parts;
    for (auto x : v) {
        if (x < 0 || x > 1'000'000)
            throw ParseError("partition part out of range: " + std::to_string(x));
        parts.push_back(static_cast<int>(x));
    }
    return make_partition(parts);
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidFile("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidFile(std::string("not JSON: ") + e.what());
    }
}

CartanMatrix cartan_from_json(const std::string& text)
{
    Json j = parse_json(text);
    try {
        const auto& rows = j.at("entries");
        const std::size_t r = rows.size();
        if (j.contains("rank") && j.at("rank").get<std::size_t>() != r)
            throw InvalidFile("rank does not match the number of rows");
        IMatrix m(r, r);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != r)
                throw NotCartan(NotCartan::Reason::NotSquare, "row " + std::to_string(i + 1));
            for (std::size_t k = 0; k < r; ++k)
                m(i, k) = rows[i][k].get<int64_t>();
        }
        return CartanMatrix(m);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidFile(std::string("bad Cartan matrix file: ") + e.what());
    }
}

} // namespace liekit
