#include "liekit/voganforms.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include <json.hpp>

#include "liekit/error.hpp"

namespace liekit {

bool VoganDiagram::inner() const
{
    for (std::size_t i = 0; i < sigma.size(); ++i)
        if (sigma[i] != static_cast<int>(i))
            return false;
    return true;
}

VoganDiagram inner_diagram(CartanType type, const std::vector<int>& black)
{
    VoganDiagram vd{type, {}, std::vector<bool>(static_cast<std::size_t>(type.rank), false)};
    for (int i = 0; i < type.rank; ++i)
        vd.sigma.push_back(i);
    for (int b : black) {
        if (b < 0 || b >= type.rank)
            throw IndexOutOfRange("vertex outside the diagram");
        vd.black[static_cast<std::size_t>(b)] = true;
    }
    return vd;
}

std::optional<std::vector<int>> diagram_involution(CartanType type)
{
    const int r = type.rank;
    std::vector<int> s(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i)
        s[static_cast<std::size_t>(i)] = i;
    switch (type.family) {
    case Family::A:
        if (r < 2)
            return std::nullopt;
        for (int i = 0; i < r; ++i)
            s[static_cast<std::size_t>(i)] = r - 1 - i;
        return s;
    case Family::D:
        std::swap(s[static_cast<std::size_t>(r - 2)], s[static_cast<std::size_t>(r - 1)]);
        return s;
    case Family::E:
        if (r != 6)
            return std::nullopt;
        // legs 1-3 and 6-5 around the node 4; vertex 2 is the short leg
        return std::vector<int>{5, 1, 4, 3, 2, 0};
    default:
        return std::nullopt;
    }
}

namespace {

std::vector<int> fixed_vertices(const VoganDiagram& vd)
{
    std::vector<int> f;
    for (std::size_t i = 0; i < vd.sigma.size(); ++i)
        if (vd.sigma[i] == static_cast<int>(i))
            f.push_back(static_cast<int>(i));
    return f;
}

} // namespace

void validate(const VoganDiagram& vd)
{
    const int r = vd.type.rank;
    CartanMatrix a = cartan_matrix(vd.type);
    if (static_cast<int>(vd.sigma.size()) != r)
        throw BadInvolution("involution must permute all " + std::to_string(r) + " vertices");
    for (int i = 0; i < r; ++i) {
        int s = vd.sigma[static_cast<std::size_t>(i)];
        if (s < 0 || s >= r)
            throw BadInvolution("involution maps outside the diagram");
        if (vd.sigma[static_cast<std::size_t>(s)] != i)
            throw BadInvolution("sigma^2 != id");
    }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (a(vd.sigma[static_cast<std::size_t>(i)], vd.sigma[static_cast<std::size_t>(j)]) != a(i, j))
                throw BadInvolution("sigma is not an automorphism of the " + vd.type.name() + " diagram");
    if (static_cast<int>(vd.black.size()) != r)
        throw BadColoring("need one color slot per vertex");
    for (int i = 0; i < r; ++i)
        if (vd.black[static_cast<std::size_t>(i)] && vd.sigma[static_cast<std::size_t>(i)] != i)
            throw BadColoring("vertex " + std::to_string(i + 1) + " is swapped by sigma and cannot be colored");
}

VoganDiagram flip(const VoganDiagram& vd, int j)
{
    validate(vd);
    if (j < 0 || j >= vd.type.rank)
        throw IndexOutOfRange("vertex outside the diagram");
    if (!vd.black[static_cast<std::size_t>(j)])
        throw NotBlack("vertex " + std::to_string(j + 1) + " is white");
    CartanMatrix a = cartan_matrix(vd.type);
    VoganDiagram out = vd;
    for (int i = 0; i < vd.type.rank; ++i)
        if (i != j && vd.sigma[static_cast<std::size_t>(i)] == i && a(j, i) % 2 != 0)
            out.black[static_cast<std::size_t>(i)] = !out.black[static_cast<std::size_t>(i)];
    return out;
}

namespace {

// Breadth-first over flips; parent pointers give shortest paths.
struct Bfs {
    std::vector<VoganDiagram> order;
    std::map<std::vector<bool>, std::pair<std::vector<bool>, int>> parent;
};

Bfs explore(const VoganDiagram& start)
{
    validate(start);
    Bfs b;
    std::deque<VoganDiagram> queue{start};
    b.parent.emplace(start.black, std::make_pair(start.black, -1));
    while (!queue.empty()) {
        VoganDiagram cur = queue.front();
        queue.pop_front();
        b.order.push_back(cur);
        for (int j = 0; j < cur.type.rank; ++j) {
            if (!cur.black[static_cast<std::size_t>(j)])
                continue;
            VoganDiagram nxt = flip(cur, j);
            if (b.parent.emplace(nxt.black, std::make_pair(cur.black, j)).second)
                queue.push_back(std::move(nxt));
        }
    }
    return b;
}

} // namespace

std::vector<VoganDiagram> flip_orbit(const VoganDiagram& vd)
{
    return explore(vd).order;
}

CanonicalForm canonical_form(const VoganDiagram& vd)
{
    auto orbit = flip_orbit(vd);
    auto best = std::min_element(orbit.begin(), orbit.end(),
                                 [](const VoganDiagram& x, const VoganDiagram& y) { return x.black < y.black; });
    return {*best, orbit.size()};
}

std::optional<std::vector<int>> flip_path(const VoganDiagram& a, const VoganDiagram& b)
{
    validate(b);
    if (a.type != b.type || a.sigma != b.sigma)
        return std::nullopt;
    Bfs bfs = explore(a);
    auto it = bfs.parent.find(b.black);
    if (it == bfs.parent.end())
        return std::nullopt;
    std::vector<int> path;
    std::vector<bool> cur = b.black;
    while (true) {
        const auto& [prev, j] = bfs.parent.at(cur);
        if (j < 0)
            break;
        path.push_back(j);
        cur = prev;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

namespace {

std::size_t so_dim(long n) { return static_cast<std::size_t>(n * (n - 1) / 2); }
std::size_t sp_dim(long two_n) { return static_cast<std::size_t>(two_n / 2 * (two_n + 1)); }

std::string so_name(long p, long q) { return "so(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

bool is_standard_involution(const VoganDiagram& vd)
{
    auto s = diagram_involution(vd.type);
    return s && *s == vd.sigma;
}

// D_r: a representative with at most one black vertex fixes so(2a+1, 2b+1).
int d_outer_parameter(const VoganDiagram& vd)
{
    for (const auto& d : flip_orbit(vd)) {
        auto blacks = std::count(d.black.begin(), d.black.end(), true);
        if (blacks == 0)
            return 0;
        if (blacks == 1)
            return static_cast<int>(std::find(d.black.begin(), d.black.end(), true) - d.black.begin()) + 1;
    }
    throw OuterNotTabulated("no representative with at most one black vertex");
}

struct OuterEntry {
    std::string name, k;
    std::size_t dim_k, rank_k;
};

OuterEntry outer_entry(const VoganDiagram& vd)
{
    if (!is_standard_involution(vd))
        throw OuterNotTabulated("outer class of " + vd.type.name() + " with this involution is not tabulated");
    const long r = vd.type.rank;
    switch (vd.type.family) {
    case Family::A: {
        const long n = r + 1;
        bool middle_black = n % 2 == 0 && vd.black[static_cast<std::size_t>(r / 2)];
        if (n % 2 == 0 && !middle_black)
            return {"sl(" + std::to_string(n / 2) + ",H)", "sp" + std::to_string(n), sp_dim(n),
                    static_cast<std::size_t>(n / 2)};
        return {"sl(" + std::to_string(n) + ",R)", "so" + std::to_string(n), so_dim(n), static_cast<std::size_t>(n / 2)};
    }
    case Family::D: {
        long a = d_outer_parameter(vd), b = r - 1 - a;
        long p = 2 * std::max(a, b) + 1, q = 2 * std::min(a, b) + 1;
        std::string k = "so" + std::to_string(p) + (q > 1 ? "+so" + std::to_string(q) : "");
        return {so_name(p, q), k, so_dim(p) + so_dim(q), static_cast<std::size_t>(r - 1)};
    }
    case Family::E: {
        // fixed vertices 2 and 4 (1-based)
        if (!vd.black[1] && !vd.black[3])
            return {"E6^1", "f4", 52, 4};
        return {"E6^spl", "sp8", 36, 4};
    }
    default:
        throw OuterNotTabulated(vd.type.name() + " has no outer class");
    }
}

std::size_t group_dim(const RootSystem& rs) { return static_cast<std::size_t>(rs.rank()) + rs.num_roots(); }

} // namespace

FixedDims fixed_subalgebra_dims(const VoganDiagram& vd)
{
    validate(vd);
    RootSystem rs = RootSystem::build(vd.type);
    const std::size_t dim = group_dim(rs);
    if (!vd.inner()) {
        OuterEntry e = outer_entry(vd);
        return {e.dim_k, dim - e.dim_k, e.rank_k};
    }
    std::size_t plus = 0;
    for (const auto& alpha : rs.positive_roots()) {
        int64_t s = 0;
        for (std::size_t i = 0; i < alpha.size(); ++i)
            if (vd.black[i])
                s += alpha[i];
        if (s % 2 == 0)
            ++plus;
    }
    FixedDims f;
    f.dim_k = static_cast<std::size_t>(rs.rank()) + 2 * plus;
    f.dim_p = dim - f.dim_k;
    f.rank_k = static_cast<std::size_t>(rs.rank());
    return f;
}

namespace {

// theta on the vector representation is diagonal with entries eps_i on e_i; the
// colors fix the ratios eps_i / eps_{i+1}. Returns (#plus, #minus) among e_1..e_r.
std::pair<long, long> sign_count(const std::vector<int>& eps)
{
    long p = std::count(eps.begin(), eps.end(), 1);
    return {p, static_cast<long>(eps.size()) - p};
}

std::vector<int> chain_signs(const std::vector<bool>& black, std::size_t n)
{
    std::vector<int> eps(n, 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
        eps[i + 1] = black[i] ? -eps[i] : eps[i];
    return eps;
}

RealFormDescriptor describe_inner_classical(const VoganDiagram& vd)
{
    const long r = vd.type.rank;
    RealFormDescriptor d;
    switch (vd.type.family) {
    case Family::A: {
        auto [p, q] = sign_count(chain_signs(vd.black, static_cast<std::size_t>(r + 1)));
        long hi = std::max(p, q), lo = std::min(p, q);
        d.name = lo == 0 ? "su(" + std::to_string(hi) + ")" : "su(" + std::to_string(hi) + "," + std::to_string(lo) + ")";
        d.k = lo == 0 ? "su" + std::to_string(hi)
                      : (hi > 1 ? "su" + std::to_string(hi) + "+" : std::string()) +
                            (lo > 1 ? "su" + std::to_string(lo) + "+" : std::string()) + "u1";
        break;
    }
    case Family::B: {
        // alpha_r = e_r, so eps_r is the sign of the last vertex.
        std::vector<int> eps(static_cast<std::size_t>(r));
        eps.back() = vd.black.back() ? -1 : 1;
        for (long i = r - 1; i-- > 0;)
            eps[static_cast<std::size_t>(i)] =
                vd.black[static_cast<std::size_t>(i)] ? -eps[static_cast<std::size_t>(i + 1)] : eps[static_cast<std::size_t>(i + 1)];
        auto [p, q] = sign_count(eps);
        d.name = q == 0 ? "so(" + std::to_string(2 * r + 1) + ")" : so_name(2 * p + 1, 2 * q);
        d.k = p == 0 ? "so" + std::to_string(2 * q)
                     : "so" + std::to_string(2 * p + 1) + (q > 0 ? "+so" + std::to_string(2 * q) : "");
        break;
    }
    case Family::C: {
        if (vd.black.back()) {
            // eps_r^2 = -1: theta squares to -1 on the vector representation
            d.name = "sp(" + std::to_string(2 * r) + ",R)";
            d.k = "gl" + std::to_string(r);
            break;
        }
        auto [p, q] = sign_count(chain_signs(vd.black, static_cast<std::size_t>(r)));
        long hi = std::max(p, q), lo = std::min(p, q);
        d.name = lo == 0 ? "u(" + std::to_string(hi) + ",H)" : "u(" + std::to_string(hi) + "," + std::to_string(lo) + ",H)";
        d.k = "sp" + std::to_string(2 * hi) + (lo ? "+sp" + std::to_string(2 * lo) : "");
        break;
    }
    case Family::D: {
        if (vd.black[static_cast<std::size_t>(r - 2)] != vd.black[static_cast<std::size_t>(r - 1)]) {
            d.name = "so*(" + std::to_string(2 * r) + ")";
            d.k = "gl" + std::to_string(r);
            break;
        }
        std::vector<bool> chain(vd.black.begin(), vd.black.end() - 1);
        auto [p, q] = sign_count(chain_signs(chain, static_cast<std::size_t>(r)));
        long hi = std::max(p, q), lo = std::min(p, q);
        d.name = lo == 0 ? "so(" + std::to_string(2 * r) + ")" : so_name(2 * hi, 2 * lo);
        d.k = "so" + std::to_string(2 * hi) + (lo ? "+so" + std::to_string(2 * lo) : "");
        break;
    }
    default:
        throw Unclassified(vd.type.name() + " is not classical");
    }
    return d;
}

struct ExceptionalEntry {
    const char* type;
    bool inner;
    std::size_t dim_k;
    const char* label;
    const char* k;
};

// Real forms identified by dim k within each inner class.
constexpr ExceptionalEntry kExceptional[] = {
    {"G2", true, 14, "G2^c", "g2"},        {"G2", true, 6, "G2^spl", "sl2+sl2"},
    {"F4", true, 52, "F4^c", "f4"},        {"F4", true, 36, "F4^1", "so9"},
    {"F4", true, 24, "F4^spl", "sp6+sl2"}, {"E6", true, 78, "E6^c", "e6"},
    {"E6", true, 46, "E6^2", "so10+so2"},  {"E6", true, 38, "E6^3", "sl6+sl2"},
    {"E6", false, 52, "E6^1", "f4"},       {"E6", false, 36, "E6^spl", "sp8"},
    {"E7", true, 133, "E7^c", "e7"},       {"E7", true, 79, "E7^1", "e6+so2"},
    {"E7", true, 69, "E7^2", "so12+sl2"},  {"E7", true, 63, "E7^spl", "sl8"},
    {"E8", true, 248, "E8^c", "e8"},       {"E8", true, 136, "E8^1", "e7+sl2"},
    {"E8", true, 120, "E8^spl", "so16"},
};

} // namespace

RealFormDescriptor classify_classical(const VoganDiagram& vd)
{
    validate(vd);
    const Family f = vd.type.family;
    if (f != Family::A && f != Family::B && f != Family::C && f != Family::D)
        throw Unclassified(vd.type.name() + " is not classical");
    RealFormDescriptor d;
    if (vd.inner()) {
        d = describe_inner_classical(vd);
    } else {
        OuterEntry e = outer_entry(vd);
        d.name = e.name;
        d.k = e.k;
    }
    FixedDims fd = fixed_subalgebra_dims(vd);
    d.dim_k = fd.dim_k;
    d.dim_p = fd.dim_p;
    d.rank_k = fd.rank_k;
    d.inner = vd.inner();
    auto c = canonical_form(vd);
    d.rep = c.rep;
    d.class_size = c.orbit_size;
    return d;
}

RealFormDescriptor classify(const VoganDiagram& vd)
{
    const Family f = vd.type.family;
    if (f == Family::A || f == Family::B || f == Family::C || f == Family::D)
        return classify_classical(vd);
    validate(vd);
    FixedDims fd = fixed_subalgebra_dims(vd);
    const std::string t = vd.type.name();
    for (const auto& e : kExceptional)
        if (t == e.type && e.inner == vd.inner() && e.dim_k == fd.dim_k) {
            RealFormDescriptor d;
            d.name = e.label;
            d.k = e.k;
            d.dim_k = fd.dim_k;
            d.dim_p = fd.dim_p;
            d.rank_k = fd.rank_k;
            d.inner = vd.inner();
            auto c = canonical_form(vd);
            d.rep = c.rep;
            d.class_size = c.orbit_size;
            return d;
        }
    throw Unclassified("no tabulated real form of " + t + " with dim k = " + std::to_string(fd.dim_k));
}

std::vector<std::vector<int>> diagram_automorphisms(CartanType type)
{
    CartanMatrix a = cartan_matrix(type);
    const int r = type.rank;
    std::vector<std::vector<int>> out;
    std::vector<int> perm;
    std::vector<bool> used(static_cast<std::size_t>(r), false);
    auto extend = [&](auto&& self) -> void {
        const int i = static_cast<int>(perm.size());
        if (i == r) {
            out.push_back(perm);
            return;
        }
        for (int t = 0; t < r; ++t) {
            if (used[static_cast<std::size_t>(t)] || a(t, t) != a(i, i))
                continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                ok = a(t, perm[static_cast<std::size_t>(j)]) == a(i, j) && a(perm[static_cast<std::size_t>(j)], t) == a(j, i);
            if (!ok)
                continue;
            used[static_cast<std::size_t>(t)] = true;
            perm.push_back(t);
            self(self);
            perm.pop_back();
            used[static_cast<std::size_t>(t)] = false;
        }
    };
    extend(extend);
    return out;
}

std::vector<RealFormDescriptor> enumerate_real_forms(CartanType type)
{
    const auto autos = diagram_automorphisms(type);
    std::vector<std::vector<int>> sigmas;
    VoganDiagram base = inner_diagram(type);
    sigmas.push_back(base.sigma);
    if (auto s = diagram_involution(type))
        sigmas.push_back(*s);
    std::vector<RealFormDescriptor> out;
    for (const auto& sigma : sigmas) {
        VoganDiagram proto{type, sigma, std::vector<bool>(static_cast<std::size_t>(type.rank), false)};
        std::vector<int> fixed = fixed_vertices(proto);
        std::set<std::vector<bool>> seen;
        for (unsigned mask = 0; mask < (1u << fixed.size()); ++mask) {
            VoganDiagram vd = proto;
            for (std::size_t t = 0; t < fixed.size(); ++t)
                vd.black[static_cast<std::size_t>(fixed[t])] = mask >> t & 1;
            if (seen.count(vd.black))
                continue;
            // Diagrams related by an automorphism commuting with sigma give the same form.
            for (const auto& d : flip_orbit(vd))
                for (const auto& g : autos) {
                    bool commutes = true;
                    for (std::size_t i = 0; i < g.size() && commutes; ++i)
                        commutes = g[static_cast<std::size_t>(sigma[i])] == sigma[static_cast<std::size_t>(g[i])];
                    if (!commutes)
                        continue;
                    std::vector<bool> img(d.black.size());
                    for (std::size_t i = 0; i < g.size(); ++i)
                        img[static_cast<std::size_t>(g[i])] = d.black[i];
                    seen.insert(img);
                }
            out.push_back(classify(vd));
        }
    }
    return out;
}

// ---------------------------------------------------------------- JSON

VoganDiagram vogan_from_json(const std::string& text)
{
    using nlohmann::json;
    try {
        json j = json::parse(text);
        auto types = parse_cartan_types(j.at("type").get<std::string>());
        if (types.size() != 1)
            throw InvalidFile("Vogan diagrams need a simple type");
        VoganDiagram vd{types[0], {}, std::vector<bool>(static_cast<std::size_t>(types[0].rank), false)};
        if (j.contains("involution")) {
            for (int v : j.at("involution").get<std::vector<int>>())
                vd.sigma.push_back(v - 1);
        } else {
            vd.sigma = inner_diagram(types[0]).sigma;
        }
        if (j.contains("colors"))
            for (const auto& [k, v] : j.at("colors").items()) {
                int idx = std::stoi(k) - 1;
                if (idx < 0 || idx >= types[0].rank)
                    throw BadColoring("colored vertex " + k + " outside the diagram");
                std::string c = v.get<std::string>();
                if (c != "black" && c != "white")
                    throw BadColoring("colors are black or white, got " + c);
                vd.black[static_cast<std::size_t>(idx)] = c == "black";
            }
        validate(vd);
        return vd;
    } catch (const json::exception& e) {
        throw InvalidFile(std::string("bad Vogan diagram JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InvalidFile(std::string("bad vertex label: ") + e.what());
    }
}

std::string vogan_to_json(const VoganDiagram& vd)
{
    nlohmann::json j;
    j["type"] = vd.type.name();
    std::vector<int> inv;
    for (int s : vd.sigma)
        inv.push_back(s + 1);
    j["involution"] = inv;
    nlohmann::json colors = nlohmann::json::object();
    for (std::size_t i = 0; i < vd.black.size(); ++i)
        if (vd.black[i])
            colors[std::to_string(i + 1)] = "black";
    j["colors"] = colors;
    return j.dump();
}

std::string coloring_string(const VoganDiagram& vd)
{
    std::string s;
    for (std::size_t i = 0; i < vd.black.size(); ++i)
        s += vd.sigma[i] != static_cast<int>(i) ? '-' : (vd.black[i] ? '*' : 'o');
    return s;
}

} // namespace liekit
