// liekit: command-line front end. Every subcommand prints either plain text or a
// JSON document tagged with "schema": "liekit/1".

#include <cstdlib>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "liekit/chars.hpp"
#include "liekit/error.hpp"
#include "liekit/freelie.hpp"
#include "liekit/json_io.hpp"
#include "liekit/liealg.hpp"
#include "liekit/rootsys.hpp"
#include "liekit/selftest.hpp"
#include "liekit/symfun.hpp"
#include "liekit/voganforms.hpp"
#include "liekit/weyl.hpp"

using namespace liekit;

namespace {

struct Globals {
    std::string format = "text";
    std::uint64_t seed = 20240601;
    std::optional<std::size_t> max_dim;
    int max_order = kDefaultBchMaxOrder;

    bool json() const { return format == "json"; }
    std::size_t cap(std::size_t fallback) const { return max_dim.value_or(fallback); }
};

Globals G;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string join(const IVec& v, const char* sep = ",")
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? sep : "") << v[i];
    return os.str();
}

// A root system from a type string or a Cartan matrix file.
struct SystemArg {
    std::string type;
    std::string cartan_file;

    void add(CLI::App* cmd)
    {
        cmd->add_option("type", type, "Dynkin type, e.g. E8 or B3xG2");
        cmd->add_option("--cartan", cartan_file, "Cartan matrix JSON {\"rank\", \"entries\"}");
    }
    RootSystem build() const
    {
        if (!cartan_file.empty())
            return RootSystem::build(cartan_from_json(read_text_file(cartan_file)));
        if (type.empty())
            throw ParseError("a Dynkin type or --cartan FILE is required");
        return RootSystem::build(type);
    }
};

IVec weight_arg(const RootSystem& rs, const std::string& text)
{
    IVec w = parse_ivec(text);
    if (static_cast<int>(w.size()) != rs.rank())
        throw DimensionMismatch("weight '" + text + "' has " + std::to_string(w.size()) + " coordinates, rank is " +
                                std::to_string(rs.rank()));
    return w;
}

Json json_decomposition(const Decomposition& d)
{
    Json a = Json::array();
    for (const auto& [w, m] : d)
        a.push_back({{"weight", json_vec(w)}, {"mult", json_integer(m)}});
    return a;
}

void print_decomposition(const Decomposition& d)
{
    for (const auto& [w, m] : d)
        std::cout << "(" << join(w) << ") " << m << "\n";
}

std::string data_dir()
{
    if (const char* env = std::getenv("LIEKIT_DATA_DIR"))
        return env;
    return LIEKIT_DATA_DIR;
}

// sl3, so5, sp4, gl2, upper3, strict4, abelian2, heisenberg, g2.
LieAlgebra named_algebra(const std::string& name)
{
    std::smatch m;
    static const std::regex re("(sl|so|sp|gl|upper|strict|abelian)([0-9]+)");
    if (name == "heisenberg")
        return heisenberg();
    if (name == "g2")
        return lie_algebra_from_file(data_dir() + "/g2.json");
    if (!std::regex_match(name, m, re))
        throw ParseError("unknown algebra '" + name + "'");
    const int n = std::stoi(m[2]);
    if (n < 1 || n > 12)
        throw TooLarge("matrix size " + std::to_string(n) + " out of range 1..12");
    const std::string kind = m[1];
    if (kind == "sl")
        return sl(n);
    if (kind == "so")
        return so(n);
    if (kind == "sp") {
        if (n % 2)
            throw ParseError("sp needs an even size");
        return sp(n);
    }
    if (kind == "gl")
        return gl(n);
    if (kind == "upper")
        return upper_triangular(n);
    if (kind == "strict")
        return strictly_upper_triangular(n);
    return abelian(n);
}

struct AlgebraArg {
    std::string name;
    std::string file;

    void add(CLI::App* cmd)
    {
        cmd->add_option("algebra", name, "sl3, so5, sp4, gl2, upper3, strict4, abelian2, heisenberg, g2");
        cmd->add_option("--file", file, "structure-constant JSON");
    }
    LieAlgebra build() const
    {
        if (!file.empty())
            return lie_algebra_from_file(file);
        if (name.empty())
            throw ParseError("an algebra name or --file is required");
        return named_algebra(name);
    }
};

std::string group_string(const std::vector<Integer>& divisors)
{
    if (divisors.empty())
        return "trivial";
    std::string s;
    for (std::size_t i = 0; i < divisors.size(); ++i)
        s += (i ? " x Z/" : "Z/") + divisors[i].get_str();
    return s;
}

Json json_descriptor(const RealFormDescriptor& d)
{
    return {{"name", d.name},           {"k", d.k},
            {"dim_k", d.dim_k},         {"dim_p", d.dim_p},
            {"rank_k", d.rank_k},       {"inner", d.inner},
            {"diagram", parse_json(vogan_to_json(d.rep))},
            {"coloring", coloring_string(d.rep)},
            {"class_size", d.class_size}};
}

void print_descriptor(const RealFormDescriptor& d)
{
    std::cout << d.name << "  k=" << d.k << "  dim_k=" << d.dim_k << "  dim_p=" << d.dim_p << "  "
              << (d.inner ? "inner" : "outer") << "  " << coloring_string(d.rep) << "  class_size=" << d.class_size
              << "\n";
}

void print_poly(const char* kind, const IntPoly& p)
{
    if (G.json()) {
        Json j = json_document(kind);
        j["polynomial"] = json_poly(p);
        j["text"] = p.to_string();
        emit(j);
    } else {
        std::cout << p.to_string() << "\n";
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"liekit: exact computations with root systems, characters, Lie algebras and real forms"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", G.format, "json or text; bch also takes lyndon or words")
        ->check(CLI::IsMember({"json", "text", "lyndon", "words"}));
    app.add_option("--seed", G.seed, "seed for selftest");
    app.add_option("--max-dim", G.max_dim, "size cap for characters, orbits and cohomology");
    app.add_option("--max-order", G.max_order, "largest BCH order allowed");

    auto on = [&](CLI::App* cmd, std::function<void()> fn) { cmd->callback(std::move(fn)); };

    // roots
    {
        auto* cmd = app.add_subcommand("roots", "positive roots in simple-root coordinates");
        static SystemArg sys;
        static bool count = false, all = false;
        sys.add(cmd);
        cmd->add_flag("--count", count, "only the number of roots");
        cmd->add_flag("--all", all, "list negative roots too");
        on(cmd, [] {
            auto rs = sys.build();
            auto list = all ? rs.roots() : rs.positive_roots();
            if (G.json()) {
                Json j = json_document("roots");
                j["type"] = rs.type_name();
                j["count"] = rs.num_roots();
                j["positive"] = rs.positive_roots().size();
                if (!count) {
                    j["roots"] = Json::array();
                    for (const auto& a : list)
                        j["roots"].push_back(json_vec(a));
                }
                emit(j);
            } else if (count) {
                std::cout << rs.num_roots() << "\n";
            } else {
                for (const auto& a : list)
                    std::cout << join(a) << "\n";
            }
        });
    }
    // exponents
    {
        auto* cmd = app.add_subcommand("exponents", "exponents m_1 <= ... <= m_r");
        static SystemArg sys;
        sys.add(cmd);
        on(cmd, [] {
            auto rs = sys.build();
            auto ex = exponents(rs);
            IVec v(ex.begin(), ex.end());
            if (G.json()) {
                Json j = json_document("exponents");
                j["type"] = rs.type_name();
                j["exponents"] = json_vec(v);
                j["height_census"] = height_census(rs);
                emit(j);
            } else {
                std::cout << join(v, " ") << "\n";
            }
        });
    }
    // coxeter
    {
        auto* cmd = app.add_subcommand("coxeter", "Coxeter and dual Coxeter numbers, highest root");
        static SystemArg sys;
        sys.add(cmd);
        on(cmd, [] {
            auto rs = sys.build();
            auto [h, hv] = coxeter_numbers(rs);
            auto theta = highest_root(rs);
            if (G.json()) {
                Json j = json_document("coxeter");
                j["type"] = rs.type_name();
                j["h"] = h;
                j["h_dual"] = hv;
                j["highest_root"] = json_vec(theta.coords);
                j["height"] = theta.height;
                emit(j);
            } else {
                std::cout << "h=" << h << " h_dual=" << hv << " theta=(" << join(theta.coords) << ")\n";
            }
        });
    }
    // minuscule
    {
        auto* cmd = app.add_subcommand("minuscule", "minuscule weights (including 0) with dimensions");
        static SystemArg sys;
        sys.add(cmd);
        on(cmd, [] {
            auto rs = sys.build();
            auto ws = minuscule_weights(rs);
            if (G.json()) {
                Json j = json_document("minuscule");
                j["type"] = rs.type_name();
                j["weights"] = Json::array();
                for (const auto& w : ws)
                    j["weights"].push_back({{"weight", json_vec(w)}, {"dim", json_integer(dimension(rs, w))}});
                emit(j);
            } else {
                for (const auto& w : ws)
                    std::cout << "(" << join(w) << ") dim=" << dimension(rs, w) << "\n";
            }
        });
    }
    // pq
    {
        auto* cmd = app.add_subcommand("pq", "the group P/Q from the Smith form of the Cartan matrix");
        static SystemArg sys;
        sys.add(cmd);
        on(cmd, [] {
            auto rs = sys.build();
            auto d = weight_lattice_quotient(rs);
            if (G.json()) {
                Json j = json_document("pq");
                j["type"] = rs.type_name();
                j["divisors"] = Json::array();
                for (const auto& n : d)
                    j["divisors"].push_back(json_integer(n));
                j["order"] = json_integer(cartan_determinant(rs));
                emit(j);
            } else {
                std::cout << group_string(d) << "\n";
            }
        });
    }
    // weyl-order
    {
        auto* cmd = app.add_subcommand("weyl-order", "order of the Weyl group");
        static SystemArg sys;
        static bool poincare = false;
        sys.add(cmd);
        cmd->add_flag("--poincare", poincare, "also print sum over w of q^l(w)");
        on(cmd, [] {
            auto rs = sys.build();
            auto cap = G.cap(kDefaultOrbitCap);
            if (G.json()) {
                Json j = json_document("weyl-order");
                j["type"] = rs.type_name();
                j["order"] = json_integer(group_order(rs, cap));
                if (poincare)
                    j["length_generating_function"] = json_poly(length_generating_function(rs, cap));
                emit(j);
            } else {
                std::cout << group_order(rs, cap) << "\n";
                if (poincare)
                    std::cout << length_generating_function(rs, cap).to_string() << "\n";
            }
        });
    }
    // orbit
    {
        auto* cmd = app.add_subcommand("orbit", "Weyl orbit of a weight");
        static SystemArg sys;
        static std::string weight;
        static bool count = false;
        sys.add(cmd);
        cmd->add_option("weight", weight, "fundamental coordinates, e.g. 1,0")->required();
        cmd->add_flag("--count", count, "only the orbit size");
        on(cmd, [] {
            auto rs = sys.build();
            auto w = weight_arg(rs, weight);
            auto orb = orbit(rs, w, G.cap(kDefaultOrbitCap));
            if (G.json()) {
                Json j = json_document("orbit");
                j["size"] = orb.size();
                if (!count) {
                    j["weights"] = Json::array();
                    for (const auto& x : orb)
                        j["weights"].push_back(json_vec(x));
                }
                emit(j);
            } else if (count) {
                std::cout << orb.size() << "\n";
            } else {
                for (const auto& x : orb)
                    std::cout << join(x) << "\n";
            }
        });
    }
    // char
    {
        auto* cmd = app.add_subcommand("char", "all weights of L_lambda with multiplicities");
        static SystemArg sys;
        static std::string weight;
        static bool dominant = false;
        sys.add(cmd);
        cmd->add_option("weight", weight, "highest weight")->required();
        cmd->add_flag("--dominant", dominant, "only the dominant weights");
        on(cmd, [] {
            auto rs = sys.build();
            auto w = weight_arg(rs, weight);
            std::map<IVec, Integer> terms;
            if (dominant) {
                terms = dominant_multiplicities(rs, w);
            } else {
                terms = character(rs, w, G.cap(kDefaultMaxDim)).terms;
            }
            if (G.json()) {
                Json j = json_document("character");
                j["highest_weight"] = json_vec(w);
                j["dim"] = json_integer(dimension(rs, w));
                j["character"] = Json::array();
                for (const auto& [x, m] : terms)
                    j["character"].push_back({{"weight", json_vec(x)}, {"mult", json_integer(m)}});
                emit(j);
            } else {
                for (const auto& [x, m] : terms)
                    std::cout << "(" << join(x) << ") " << m << "\n";
            }
        });
    }
    // dim
    {
        auto* cmd = app.add_subcommand("dim", "Weyl dimension formula");
        static SystemArg sys;
        static std::string weight;
        sys.add(cmd);
        cmd->add_option("weight", weight, "highest weight")->required();
        on(cmd, [] {
            auto rs = sys.build();
            auto w = weight_arg(rs, weight);
            require_dominant(rs, w);
            Integer d = dimension(rs, w);
            if (G.json()) {
                Json j = json_document("dim");
                j["highest_weight"] = json_vec(w);
                j["dim"] = json_integer(d);
                j["casimir"] = json_rational(casimir_eigenvalue(rs, w));
                emit(j);
            } else {
                std::cout << d << "\n";
            }
        });
    }
    // qdim
    {
        auto* cmd = app.add_subcommand("qdim", "principal specialization of the character");
        static SystemArg sys;
        static std::string weight;
        sys.add(cmd);
        cmd->add_option("weight", weight, "highest weight")->required();
        on(cmd, [] {
            auto rs = sys.build();
            print_poly("qdim", q_dimension(rs, weight_arg(rs, weight)));
        });
    }
    // tensor
    {
        auto* cmd = app.add_subcommand("tensor", "decompose L_lambda (x) L_mu");
        static SystemArg sys;
        static std::string lambda, mu, method = "peel";
        sys.add(cmd);
        cmd->add_option("lambda", lambda)->required();
        cmd->add_option("mu", mu)->required();
        cmd->add_option("--method", method, "peel, brauer or minuscule (lambda minuscule)")
            ->check(CLI::IsMember({"peel", "brauer", "minuscule"}));
        on(cmd, [] {
            auto rs = sys.build();
            auto l = weight_arg(rs, lambda), m = weight_arg(rs, mu);
            auto cap = G.cap(kDefaultMaxProductDim);
            Decomposition d = method == "peel"     ? tensor_decompose(rs, l, m, cap)
                              : method == "brauer" ? tensor_decompose_brauer(rs, l, m, cap)
                                                   : tensor_minuscule(rs, l, m);
            if (G.json()) {
                Json j = json_document("tensor");
                j["lambda"] = json_vec(l);
                j["mu"] = json_vec(m);
                j["components"] = json_decomposition(d);
                j["dim"] = json_integer(decomposition_dimension(rs, d));
                emit(j);
            } else {
                print_decomposition(d);
            }
        });
    }
    // fstype
    {
        auto* cmd = app.add_subcommand("fstype", "complex, real or quaternionic");
        static SystemArg sys;
        static std::string weight;
        sys.add(cmd);
        cmd->add_option("weight", weight)->required();
        on(cmd, [] {
            auto rs = sys.build();
            auto w = weight_arg(rs, weight);
            auto t = frobenius_schur_type(rs, w);
            if (G.json()) {
                Json j = json_document("fstype");
                j["highest_weight"] = json_vec(w);
                j["dual"] = json_vec(dual_highest_weight(rs, w));
                j["type"] = to_string(t);
                emit(j);
            } else {
                std::cout << to_string(t) << "\n";
            }
        });
    }
    // kostant
    {
        auto* cmd = app.add_subcommand("kostant", "Kostant partition function p(beta)");
        static SystemArg sys;
        static std::string beta;
        sys.add(cmd);
        cmd->add_option("beta", beta, "simple-root coordinates")->required();
        on(cmd, [] {
            auto rs = sys.build();
            auto b = weight_arg(rs, beta);
            Integer p = kostant_p(rs, b);
            if (G.json()) {
                Json j = json_document("kostant");
                j["beta"] = json_vec(b);
                j["value"] = json_integer(p);
                emit(j);
            } else {
                std::cout << p << "\n";
            }
        });
    }
    // bch
    {
        auto* cmd = app.add_subcommand("bch", "log(exp x exp y) up to the given order");
        static int order = 3;
        cmd->add_option("--order", order, "truncation degree")->check(CLI::PositiveNumber);
        on(cmd, [] {
            auto b = bch(order, G.max_order);
            if (G.json()) {
                Json j = json_document("bch");
                j["order"] = order;
                j["terms"] = Json::array();
                for (int d = 1; d <= order; ++d)
                    for (const auto& [w, c] : b.lie.homogeneous(d).coeffs)
                        j["terms"].push_back(
                            {{"degree", d}, {"bracket", bracket_string(w, 2)}, {"coeff", json_rational(c)}});
                emit(j);
            } else if (G.format == "words") {
                for (const auto& [w, c] : b.series.terms())
                    std::cout << w.size() << " " << word_string(w, 2) << " " << to_string(c) << "\n";
            } else {
                for (int d = 1; d <= order; ++d)
                    for (const auto& [w, c] : b.lie.homogeneous(d).coeffs)
                        std::cout << d << " " << bracket_string(w, 2) << " " << to_string(c) << "\n";
            }
        });
    }
    // witt
    {
        auto* cmd = app.add_subcommand("witt", "dimensions of the graded pieces of the free Lie algebra");
        static int alphabet = 2, up_to = 6, list = 0;
        cmd->add_option("--alphabet,-n", alphabet, "number of generators")->check(CLI::Range(1, 26));
        cmd->add_option("--up-to,-N", up_to, "largest degree")->check(CLI::Range(1, 30));
        cmd->add_option("--list", list, "print the Lyndon brackets of this degree");
        on(cmd, [] {
            auto d = witt_dimensions(alphabet, up_to);
            if (list > 0) {
                auto words = lyndon_words(alphabet, list);
                if (G.json()) {
                    Json j = json_document("lyndon");
                    j["alphabet"] = alphabet;
                    j["degree"] = list;
                    j["brackets"] = Json::array();
                    for (const auto& w : words)
                        j["brackets"].push_back(bracket_string(w, alphabet));
                    emit(j);
                } else {
                    for (const auto& w : words)
                        std::cout << bracket_string(w, alphabet) << "\n";
                }
                return;
            }
            if (G.json()) {
                Json j = json_document("witt");
                j["alphabet"] = alphabet;
                j["dimensions"] = Json::array();
                for (const auto& x : d)
                    j["dimensions"].push_back(json_integer(x));
                emit(j);
            } else {
                for (std::size_t m = 0; m < d.size(); ++m)
                    std::cout << (m ? " " : "") << d[m];
                std::cout << "\n";
            }
        });
    }
    // lie-check
    {
        auto* cmd = app.add_subcommand("lie-check", "solvable, nilpotent, semisimple, simple");
        static AlgebraArg alg;
        alg.add(cmd);
        on(cmd, [] {
            auto g = alg.build();
            bool sol = is_solvable(g), nil = is_nilpotent(g), ss = is_semisimple(g);
            bool simple = ss && is_simple(g);
            auto der = derived_series(g), lcs = lower_central_series(g);
            if (G.json()) {
                Json j = json_document("lie-check");
                j["dim"] = g.dim();
                j["solvable"] = sol;
                j["nilpotent"] = nil;
                j["semisimple"] = ss;
                j["simple"] = simple;
                j["derived_series"] = der;
                j["lower_central_series"] = lcs;
                emit(j);
            } else {
                auto yn = [](bool b) { return b ? "yes" : "no"; };
                std::cout << "dim " << g.dim() << "\nsolvable " << yn(sol) << "\nnilpotent " << yn(nil)
                          << "\nsemisimple " << yn(ss) << "\nsimple " << yn(simple) << "\n";
                std::cout << "derived";
                for (auto x : der)
                    std::cout << " " << x;
                std::cout << "\nlower_central";
                for (auto x : lcs)
                    std::cout << " " << x;
                std::cout << "\n";
            }
        });
    }
    // cohomology
    {
        auto* cmd = app.add_subcommand("cohomology", "Chevalley-Eilenberg cohomology");
        static AlgebraArg alg;
        static std::string module_file;
        static int irrep = -1;
        static bool invariants = false;
        alg.add(cmd);
        cmd->add_option("--module", module_file, "module JSON {\"dim\", \"action\"}");
        cmd->add_option("--irrep", irrep, "coefficients in V_n (sl2 only)");
        cmd->add_flag("--invariants", invariants, "invariant forms instead of cohomology");
        on(cmd, [] {
            auto g = alg.build();
            auto cap = G.cap(kDefaultCohomologyMaxDim);
            if (invariants) {
                print_poly("invariant-forms", invariant_forms_poincare(g, cap));
                return;
            }
            std::vector<std::size_t> betti;
            if (!module_file.empty())
                betti = ce_cohomology(g, lie_module_from_file(g, module_file), cap);
            else if (irrep >= 0)
                betti = ce_cohomology(g, sl2_irrep(g, irrep), cap);
            else
                betti = ce_cohomology(g, cap);
            if (G.json()) {
                Json j = json_document("cohomology");
                j["dim"] = g.dim();
                j["betti"] = betti;
                j["poincare"] = json_poly(poincare_polynomial(betti));
                emit(j);
            } else {
                for (std::size_t k = 0; k < betti.size(); ++k)
                    std::cout << (k ? " " : "") << betti[k];
                std::cout << "\n" << poincare_polynomial(betti).to_string() << "\n";
            }
        });
    }
    // schur
    {
        auto* cmd = app.add_subcommand("schur", "Schur polynomial and dimension of S^lambda");
        static std::string lambda;
        static std::size_t vars = 0;
        static int n = 0;
        cmd->add_option("lambda", lambda, "partition, e.g. 2,1")->required();
        cmd->add_option("--vars", vars, "number of variables (default: number of parts)");
        cmd->add_option("--dim", n, "evaluate dim S^lambda C^N at this N");
        on(cmd, [] {
            auto p = parse_partition(lambda);
            std::size_t nv = vars ? vars : std::max<std::size_t>(p.size(), 1);
            if (nv > 8)
                throw TooLarge("at most 8 variables");
            auto s = schur_poly(p, nv);
            auto dp = schur_dim_poly(p);
            if (G.json()) {
                Json j = json_document("schur");
                j["partition"] = p;
                j["vars"] = nv;
                j["polynomial"] = json_poly(s);
                j["dim_polynomial"] = json_poly(dp);
                if (n > 0)
                    j["dim"] = json_integer(schur_dim(p, n));
                emit(j);
            } else {
                std::cout << s.to_string() << "\n" << dp.to_string("N") << "\n";
                if (n > 0)
                    std::cout << schur_dim(p, n) << "\n";
            }
        });
    }
    // frobenius
    {
        auto* cmd = app.add_subcommand("frobenius", "symmetric group character chi_lambda(mu)");
        static std::string lambda, mu;
        static int table = 0;
        cmd->add_option("lambda", lambda, "partition");
        cmd->add_option("mu", mu, "cycle type as a partition");
        cmd->add_option("--table", table, "full character table of S_n")->check(CLI::Range(1, 9));
        on(cmd, [] {
            if (table > 0) {
                auto ps = partitions(table);
                Json rows = Json::array();
                for (const auto& l : ps) {
                    Json row = Json::array();
                    for (const auto& m : ps)
                        row.push_back(json_integer(frobenius_character(l, cycle_type(m))));
                    rows.push_back(row);
                    if (!G.json()) {
                        std::cout << partition_string(l);
                        for (const auto& v : row)
                            std::cout << " " << v.get<std::string>();
                        std::cout << "\n";
                    }
                }
                if (G.json()) {
                    Json j = json_document("character-table");
                    j["n"] = table;
                    j["classes"] = Json::array();
                    for (const auto& m : ps)
                        j["classes"].push_back(m);
                    j["rows"] = rows;
                    emit(j);
                }
                return;
            }
            if (lambda.empty())
                throw ParseError("lambda is required without --table");
            auto l = parse_partition(lambda);
            auto m = mu.empty() ? Partition(size(l), 1) : parse_partition(mu);
            Integer v = frobenius_character(l, cycle_type(m));
            if (G.json()) {
                Json j = json_document("frobenius");
                j["lambda"] = l;
                j["mu"] = m;
                j["value"] = json_integer(v);
                emit(j);
            } else {
                std::cout << v << "\n";
            }
        });
    }
    // qbinom
    {
        auto* cmd = app.add_subcommand("qbinom", "Gaussian binomial: partitions in an m x n box");
        static int m = 0, n = 0;
        cmd->add_option("m", m)->required()->check(CLI::Range(0, 200));
        cmd->add_option("n", n)->required()->check(CLI::Range(0, 200));
        on(cmd, [] { print_poly("qbinom", gaussian_binomial(m, n)); });
    }
    // betti
    {
        auto* cmd = app.add_subcommand("betti", "Betti numbers of Grassmannians and flag varieties");
        static std::string grass, partial;
        static int flag = 0, projective = -1;
        cmd->add_option("--grassmannian", grass, "m,n for Gr(m, C^{m+n})");
        cmd->add_option("--flag", flag, "full flags in C^n")->check(CLI::Range(1, 12));
        cmd->add_option("--partial", partial, "block sizes n_1,...,n_k");
        cmd->add_option("--projective", projective, "CP^n")->check(CLI::Range(0, 200));
        on(cmd, [] {
            IntPoly p;
            if (!grass.empty()) {
                auto v = parse_ivec(grass);
                if (v.size() != 2 || v[0] < 0 || v[1] < 0 || v[0] + v[1] > 200)
                    throw ParseError("--grassmannian takes m,n");
                p = grassmannian_poincare(static_cast<int>(v[0]), static_cast<int>(v[1]));
            } else if (flag > 0) {
                p = flag_poincare(flag);
            } else if (!partial.empty()) {
                std::vector<int> dims;
                for (auto x : parse_ivec(partial))
                    dims.push_back(static_cast<int>(x));
                p = partial_flag_poincare(dims);
            } else if (projective >= 0) {
                p = grassmannian_poincare(1, projective);
            } else {
                throw ParseError("one of --grassmannian, --flag, --partial, --projective is required");
            }
            auto b = betti_from_poincare(p);
            if (G.json()) {
                Json j = json_document("betti");
                j["betti"] = Json::array();
                for (const auto& x : b)
                    j["betti"].push_back(json_integer(x));
                j["poincare_q"] = json_poly(p);
                emit(j);
            } else {
                for (std::size_t k = 0; k < b.size(); ++k)
                    std::cout << (k ? " " : "") << b[k];
                std::cout << "\n";
            }
        });
    }
    // realforms
    {
        auto* cmd = app.add_subcommand("realforms", "real forms from Vogan diagrams");
        static std::string type, file;
        static bool list = false, count = false;
        static std::vector<int> flips;
        cmd->add_option("--type", type, "simple Dynkin type");
        cmd->add_flag("--list", list, "all real forms of the type");
        cmd->add_flag("--count", count, "numbers of inner and outer forms");
        cmd->add_option("--file", file, "Vogan diagram JSON to classify");
        cmd->add_option("--flip", flips, "flip these black vertices (1-based) in order");
        on(cmd, [] {
            if (!file.empty()) {
                auto vd = vogan_from_json(read_text_file(file));
                for (int j : flips)
                    vd = flip(vd, j - 1);
                auto d = classify(vd);
                auto canon = canonical_form(vd);
                d.rep = canon.rep;
                d.class_size = canon.orbit_size;
                if (G.json()) {
                    Json j = json_document("realform");
                    j["input"] = coloring_string(vd);
                    j["form"] = json_descriptor(d);
                    emit(j);
                } else {
                    std::cout << coloring_string(vd) << "\n";
                    print_descriptor(d);
                }
                return;
            }
            if (type.empty())
                throw ParseError("--type or --file is required");
            auto types = parse_cartan_types(type);
            if (types.size() != 1)
                throw Reducible("real forms are enumerated for simple types only");
            auto forms = enumerate_real_forms(types[0]);
            std::size_t inner = 0;
            for (const auto& f : forms)
                inner += f.inner;
            if (G.json()) {
                Json j = json_document("realforms");
                j["type"] = types[0].name();
                j["inner"] = inner;
                j["outer"] = forms.size() - inner;
                if (!count) {
                    j["forms"] = Json::array();
                    for (const auto& f : forms)
                        j["forms"].push_back(json_descriptor(f));
                }
                emit(j);
            } else if (count) {
                std::cout << "inner " << inner << " outer " << forms.size() - inner << " total " << forms.size()
                          << "\n";
            } else {
                for (const auto& f : forms)
                    print_descriptor(f);
            }
        });
    }
    // selftest
    int selftest_status = 0;
    {
        auto* cmd = app.add_subcommand("selftest", "randomized property suites");
        static std::vector<std::string> suites;
        static bool list = false;
        cmd->add_option("--suite", suites, "run only these suites");
        cmd->add_flag("--list", list, "list the suites");
        on(cmd, [&selftest_status] {
            if (list) {
                for (const auto& s : selftest_suites())
                    std::cout << s << "\n";
                return;
            }
            for (const auto& s : suites) {
                auto all = selftest_suites();
                if (std::find(all.begin(), all.end(), s) == all.end())
                    throw ParseError("unknown suite '" + s + "'");
            }
            auto results = run_selftest(G.seed, suites);
            Json j = json_document("selftest");
            j["seed"] = G.seed;
            j["suites"] = Json::array();
            for (const auto& r : results) {
                if (!r.passed)
                    selftest_status = 1;
                if (G.json())
                    j["suites"].push_back(
                        {{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
                else
                    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)"
                              << (r.passed ? "" : ": " + r.detail) << "\n";
            }
            if (G.json())
                emit(j);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const InputError& e) {
        std::cerr << "liekit: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "liekit: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "liekit: internal error: " << e.what() << "\n";
        return 1;
    }
    return selftest_status;
}
