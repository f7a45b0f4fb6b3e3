#include "liekit/chars.hpp"

#include <algorithm>
#include <map>

#include "liekit/error.hpp"

namespace liekit {

// ---------------------------------------------------------------- Kostant

void KostantTable::rebuild(const IVec& bound)
{
    const auto& pos = rs_->positive_roots();
    const std::size_t r = bound.size();
    std::vector<std::size_t> stride(r, 1);
    std::size_t total = 1;
    for (std::size_t i = r; i-- > 0;) {
        stride[i] = total;
        total *= static_cast<std::size_t>(bound[i] + 1);
        if (total > 50'000'000)
            throw TooLarge("Kostant table box is too large");
    }
    std::vector<Integer> t(total, Integer(0));
    t[0] = 1;
    IVec x(r, 0);
    for (const auto& a : pos) {
        bool fits = true;
        std::size_t off = 0;
        for (std::size_t i = 0; i < r; ++i) {
            if (a[i] > bound[i])
                fits = false;
            off += static_cast<std::size_t>(a[i]) * stride[i];
        }
        if (!fits)
            continue;
        std::fill(x.begin(), x.end(), 0);
        for (std::size_t idx = 0; idx < total; ++idx) {
            bool ok = true;
            for (std::size_t i = 0; i < r && ok; ++i)
                ok = x[i] >= a[i];
            if (ok)
                t[idx] += t[idx - off];
            for (std::size_t i = r; i-- > 0;) {
                if (++x[i] <= bound[i])
                    break;
                x[i] = 0;
            }
        }
    }
    box_ = bound;
    table_ = std::move(t);
}

void KostantTable::reserve(const IVec& bound)
{
    if (box_.size() == bound.size()) {
        bool inside = true;
        for (std::size_t i = 0; i < bound.size(); ++i)
            inside = inside && bound[i] <= box_[i];
        if (inside)
            return;
    }
    IVec nb = bound;
    if (box_.size() == bound.size())
        for (std::size_t i = 0; i < nb.size(); ++i)
            nb[i] = std::max(nb[i], box_[i]);
    for (auto& v : nb)
        v = std::max<int64_t>(v, 0);
    rebuild(nb);
}

Integer KostantTable::operator()(const IVec& beta)
{
    if (static_cast<int>(beta.size()) != rs_->rank())
        throw DimensionMismatch("beta length");
    for (auto v : beta)
        if (v < 0)
            return 0;
    reserve(beta);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < beta.size(); ++i)
        idx = idx * static_cast<std::size_t>(box_[i] + 1) + static_cast<std::size_t>(beta[i]);
    return table_[idx];
}

Integer kostant_p(const RootSystem& rs, const IVec& beta)
{
    KostantTable t(rs);
    return t(beta);
}

// ---------------------------------------------------------------- characters

Integer FormalCharacter::dimension() const
{
    Integer s = 0;
    for (const auto& [w, m] : terms)
        s += m;
    return s;
}

Integer FormalCharacter::multiplicity(const IVec& weight) const
{
    auto it = terms.find(weight);
    return it == terms.end() ? Integer(0) : it->second;
}

FormalCharacter multiply(const FormalCharacter& a, const FormalCharacter& b)
{
    FormalCharacter out;
    for (const auto& [x, m] : a.terms)
        for (const auto& [y, n] : b.terms) {
            IVec z = x;
            for (std::size_t i = 0; i < z.size(); ++i)
                z[i] += y[i];
            out.terms[z] += m * n;
        }
    for (auto it = out.terms.begin(); it != out.terms.end();)
        it = it->second == 0 ? out.terms.erase(it) : std::next(it);
    return out;
}

bool is_dominant(const IVec& weight)
{
    return std::all_of(weight.begin(), weight.end(), [](int64_t x) { return x >= 0; });
}

void require_dominant(const RootSystem& rs, const IVec& weight)
{
    if (static_cast<int>(weight.size()) != rs.rank())
        throw DimensionMismatch("weight has " + std::to_string(weight.size()) + " coordinates, rank is " +
                                std::to_string(rs.rank()));
    if (!is_dominant(weight))
        throw NotDominant("weight (" + format_vec(weight) + ") is not dominant");
}

namespace {

// Simple-root coordinates of a weight, floored.
IVec floor_root_coords(const RootSystem& rs, const IVec& w)
{
    QVec n = rs.weight_to_root(to_qvec(w));
    IVec out(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) {
        Integer f;
        mpz_fdiv_q(f.get_mpz_t(), n[i].get_num_mpz_t(), n[i].get_den_mpz_t());
        out[i] = to_int64(f);
    }
    return out;
}

// Exact simple-root coordinates of lambda - mu, or nullopt if not in Q.
std::optional<IVec> root_difference(const RootSystem& rs, const IVec& lambda, const IVec& mu)
{
    QVec diff(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i)
        diff[i] = Rational(static_cast<long>(lambda[i] - mu[i]));
    QVec n = rs.weight_to_root(diff);
    IVec out(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (!is_integer(n[i]))
            return std::nullopt;
        out[i] = to_int64(n[i].get_num());
    }
    return out;
}

struct KostantTerm {
    IVec k; // lambda + rho - w(lambda + rho) in simple-root coordinates
    int sign;
};

// The w with lambda + rho - w(lambda + rho) <= bound. Walking the orbit downward, a
// weight that leaves the box never comes back, so the walk can be pruned there.
std::vector<KostantTerm> kostant_terms(const RootSystem& rs, const IVec& lambda, const IVec& bound)
{
    IVec top = lambda;
    for (auto& x : top)
        x += 1;
    std::vector<KostantTerm> out;
    std::map<IVec, IVec> cur{{top, IVec(rs.rank(), 0)}};
    for (int depth = 0; !cur.empty(); ++depth) {
        std::map<IVec, IVec> next;
        for (const auto& [nu, k] : cur) {
            out.push_back({k, depth % 2 ? -1 : 1});
            for (int i = 0; i < rs.rank(); ++i) {
                if (nu[i] <= 0)
                    continue;
                IVec k2 = k;
                k2[i] += nu[i];
                if (k2[i] > bound[i])
                    continue;
                next.emplace(rs.reflect_weight(i, nu), std::move(k2));
            }
        }
        cur = std::move(next);
    }
    return out;
}

} // namespace

std::vector<IVec> dominant_weights_below(const RootSystem& rs, const IVec& lambda)
{
    require_dominant(rs, lambda);
    IVec box = floor_root_coords(rs, lambda);
    const int r = rs.rank();
    std::vector<std::pair<int64_t, IVec>> found;
    IVec n(r, 0);
    for (;;) {
        IVec mu = lambda;
        IVec an = rs.root_to_weight(n);
        for (int i = 0; i < r; ++i)
            mu[i] -= an[i];
        if (is_dominant(mu))
            found.emplace_back(RootSystem::height(n), std::move(mu));
        int i = r - 1;
        while (i >= 0 && ++n[i] > box[i])
            n[i--] = 0;
        if (i < 0)
            break;
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first < b.first : a.second > b.second;
    });
    std::vector<IVec> out;
    for (auto& f : found)
        out.push_back(std::move(f.second));
    return out;
}

std::map<IVec, Integer> dominant_multiplicities(const RootSystem& rs, const IVec& lambda)
{
    require_dominant(rs, lambda);
    IVec box = floor_root_coords(rs, lambda);
    auto terms = kostant_terms(rs, lambda, box);
    KostantTable p(rs);
    p.reserve(box);
    std::map<IVec, Integer> out;
    for (const auto& mu : dominant_weights_below(rs, lambda)) {
        IVec b = *root_difference(rs, lambda, mu);
        Integer m = 0;
        for (const auto& t : terms) {
            IVec beta = b;
            bool ok = true;
            for (std::size_t i = 0; i < beta.size() && ok; ++i)
                ok = (beta[i] -= t.k[i]) >= 0;
            if (ok)
                m += t.sign * p(beta);
        }
        if (m < 0)
            throw std::logic_error("negative Kostant multiplicity");
        if (m != 0)
            out.emplace(mu, m);
    }
    return out;
}

Integer weight_multiplicity(const RootSystem& rs, const IVec& lambda, const IVec& gamma)
{
    require_dominant(rs, lambda);
    if (static_cast<int>(gamma.size()) != rs.rank())
        throw DimensionMismatch("gamma length");
    IVec mu = to_dominant(rs, gamma).weight;
    auto b = root_difference(rs, lambda, mu);
    if (!b || std::any_of(b->begin(), b->end(), [](int64_t x) { return x < 0; }))
        return 0;
    auto terms = kostant_terms(rs, lambda, *b);
    KostantTable p(rs);
    p.reserve(*b);
    Integer m = 0;
    for (const auto& t : terms) {
        IVec beta = *b;
        bool ok = true;
        for (std::size_t i = 0; i < beta.size() && ok; ++i)
            ok = (beta[i] -= t.k[i]) >= 0;
        if (ok)
            m += t.sign * p(beta);
    }
    return m;
}

Integer dimension(const RootSystem& rs, const IVec& lambda)
{
    require_dominant(rs, lambda);
    Rational num = 1, den = 1;
    const IVec& d = rs.symmetrizer();
    for (const auto& a : rs.positive_roots()) {
        int64_t x = 0, y = 0;
        for (int j = 0; j < rs.rank(); ++j) {
            x += a[j] * d[j] * (lambda[j] + 1);
            y += a[j] * d[j];
        }
        num *= static_cast<long>(x);
        den *= static_cast<long>(y);
    }
    Rational q = num / den;
    if (!is_integer(q))
        throw std::logic_error("Weyl dimension formula gave a fraction");
    return q.get_num();
}

FormalCharacter character(const RootSystem& rs, const IVec& lambda, std::size_t max_dim)
{
    Integer dim = dimension(rs, lambda);
    if (dim > Integer(static_cast<unsigned long>(max_dim)))
        throw TooLarge("dim L(" + format_vec(lambda) + ") = " + dim.get_str() + " exceeds the cap " +
                       std::to_string(max_dim));
    FormalCharacter chi;
    for (const auto& [mu, m] : dominant_multiplicities(rs, lambda))
        for (auto& w : orbit(rs, mu))
            chi.terms.emplace(std::move(w), m);
    return chi;
}

IntPoly q_dimension(const RootSystem& rs, const IVec& lambda)
{
    require_dominant(rs, lambda);
    const IVec& d = rs.symmetrizer();
    IntPoly num = IntPoly::constant(1), den = IntPoly::constant(1);
    for (const auto& a : rs.positive_roots()) {
        int64_t x = 0, y = 0;
        for (int j = 0; j < rs.rank(); ++j) {
            x += a[j] * d[j] * (lambda[j] + 1);
            y += a[j] * d[j];
        }
        // (1 - q^x)/(1 - q^y) is a polynomial only when y | x; accumulate and divide once.
        num *= IntPoly::constant(1) - IntPoly::monomial(static_cast<std::size_t>(x));
        den *= IntPoly::constant(1) - IntPoly::monomial(static_cast<std::size_t>(y));
    }
    return exact_div(num, den);
}

namespace {

void check_product(const RootSystem& rs, const IVec& lambda, const IVec& mu, std::size_t cap)
{
    Integer p = dimension(rs, lambda) * dimension(rs, mu);
    if (p > Integer(static_cast<unsigned long>(cap)))
        throw TooLarge("product dimension " + p.get_str() + " exceeds the cap " + std::to_string(cap));
}

void drop_zeros(std::map<IVec, Integer>& m)
{
    for (auto it = m.begin(); it != m.end();)
        it = it->second == 0 ? m.erase(it) : std::next(it);
}

} // namespace

Decomposition tensor_decompose(const RootSystem& rs, const IVec& lambda, const IVec& mu, std::size_t cap)
{
    require_dominant(rs, lambda);
    require_dominant(rs, mu);
    check_product(rs, lambda, mu, cap);
    FormalCharacter a = character(rs, lambda, cap), b = character(rs, mu, cap);

    std::map<IVec, Integer> remaining;
    for (const auto& [x, m] : a.terms)
        for (const auto& [y, n] : b.terms) {
            IVec z = x;
            bool dom = true;
            for (std::size_t i = 0; i < z.size(); ++i)
                dom = (z[i] += y[i]) >= 0 && dom;
            if (dom)
                remaining[z] += m * n;
        }
    drop_zeros(remaining);

    IVec top = lambda;
    for (std::size_t i = 0; i < top.size(); ++i)
        top[i] += mu[i];
    auto depth = [&](const IVec& nu) {
        auto diff = root_difference(rs, top, nu);
        return RootSystem::height(*diff);
    };

    Decomposition out;
    while (!remaining.empty()) {
        auto best = remaining.begin();
        int64_t best_depth = depth(best->first);
        for (auto it = std::next(remaining.begin()); it != remaining.end(); ++it) {
            int64_t dd = depth(it->first);
            if (dd < best_depth || (dd == best_depth && it->first > best->first)) {
                best = it;
                best_depth = dd;
            }
        }
        IVec nu = best->first;
        Integer n = best->second;
        if (n < 0)
            throw std::logic_error("peeling produced a negative multiplicity");
        out[nu] = n;
        for (const auto& [kappa, m] : dominant_multiplicities(rs, nu))
            remaining[kappa] -= n * m;
        drop_zeros(remaining);
    }
    return out;
}

Decomposition tensor_decompose_brauer(const RootSystem& rs, const IVec& lambda, const IVec& mu, std::size_t cap)
{
    require_dominant(rs, lambda);
    require_dominant(rs, mu);
    check_product(rs, lambda, mu, cap);
    Decomposition out;
    for (const auto& [gamma, m] : character(rs, mu, cap).terms) {
        IVec x = lambda;
        for (std::size_t i = 0; i < x.size(); ++i)
            x[i] += gamma[i] + 1;
        // lambda + gamma + rho on any root hyperplane lands on a wall of the chamber.
        auto dom = to_dominant(rs, x);
        bool wall = false;
        for (auto& v : dom.weight) {
            wall = wall || v == 0;
            v -= 1;
        }
        if (wall)
            continue;
        out[dom.weight] += dom.sign * m;
    }
    drop_zeros(out);
    for (const auto& [nu, n] : out)
        if (n < 0)
            throw std::logic_error("Brauer sum left a negative multiplicity");
    return out;
}

Decomposition tensor_minuscule(const RootSystem& rs, const IVec& omega, const IVec& lambda)
{
    require_dominant(rs, lambda);
    if (static_cast<int>(omega.size()) != rs.rank())
        throw DimensionMismatch("omega length");
    if (!is_minuscule(rs, omega))
        throw NotMinuscule("weight (" + format_vec(omega) + ") is not minuscule");
    Decomposition out;
    for (const auto& gamma : orbit(rs, omega)) {
        IVec nu = lambda;
        bool dom = true;
        for (std::size_t i = 0; i < nu.size(); ++i) {
            nu[i] += gamma[i];
            if (nu[i] < -1)
                throw std::logic_error("minuscule shift left the cancellation range");
            dom = dom && nu[i] >= 0;
        }
        // nu + rho lies on the wall of some s_i, so its alternating sum vanishes.
        if (dom)
            out[nu] += 1;
    }
    return out;
}

Integer decomposition_dimension(const RootSystem& rs, const Decomposition& d)
{
    Integer s = 0;
    for (const auto& [nu, n] : d)
        s += n * dimension(rs, nu);
    return s;
}

IVec dual_highest_weight(const RootSystem& rs, const IVec& lambda)
{
    require_dominant(rs, lambda);
    auto sigma = longest_element(rs).diagram_automorphism;
    IVec out(lambda.size(), 0);
    for (std::size_t i = 0; i < lambda.size(); ++i)
        out[sigma[i]] = lambda[i];
    return out;
}

std::string to_string(FSType t)
{
    switch (t) {
    case FSType::Complex: return "complex";
    case FSType::Real: return "real";
    case FSType::Quaternionic: return "quaternionic";
    }
    return "?";
}

Integer two_rho_check_pairing(const RootSystem& rs, const IVec& lambda)
{
    Rational s = 0;
    QVec l = to_qvec(lambda);
    for (const auto& a : rs.positive_roots())
        s += rs.coroot_pairing(l, a);
    return s.get_num();
}

FSType frobenius_schur_type(const RootSystem& rs, const IVec& lambda)
{
    if (dual_highest_weight(rs, lambda) != lambda)
        return FSType::Complex;
    Integer p = two_rho_check_pairing(rs, lambda);
    return mpz_even_p(p.get_mpz_t()) ? FSType::Real : FSType::Quaternionic;
}

Rational casimir_eigenvalue(const RootSystem& rs, const IVec& lambda)
{
    require_dominant(rs, lambda);
    IVec shifted = lambda;
    for (auto& x : shifted)
        x += 2;
    return rs.pairing(LatticeVector::weight(lambda), LatticeVector::weight(shifted));
}

std::map<IVec, Integer> denominator_times(const RootSystem& rs, const FormalCharacter& chi)
{
    std::map<IVec, Integer> cur = chi.terms;
    for (const auto& a : rs.positive_roots()) {
        IVec aw = rs.root_to_weight(a);
        std::map<IVec, Integer> next = cur;
        for (const auto& [w, m] : cur) {
            IVec s = w;
            for (std::size_t i = 0; i < s.size(); ++i)
                s[i] -= aw[i];
            next[s] -= m;
        }
        drop_zeros(next);
        cur = std::move(next);
    }
    return cur;
}

std::map<IVec, Integer> alternating_sum(const RootSystem& rs, const IVec& lambda)
{
    require_dominant(rs, lambda);
    IVec top = lambda;
    for (auto& x : top)
        x += 1;
    std::map<IVec, Integer> out;
    // lambda + rho is regular, so every walked weight is w(lambda+rho) for a unique w
    // whose length is the layer index.
    std::vector<IVec> cur{top};
    for (int depth = 0; !cur.empty(); ++depth) {
        std::unordered_set<IVec, IVecHash> next;
        for (const auto& nu : cur) {
            IVec key = nu;
            for (auto& x : key)
                x -= 1;
            out[key] += depth % 2 ? -1 : 1;
            for (int i = 0; i < rs.rank(); ++i)
                if (nu[i] > 0)
                    next.insert(rs.reflect_weight(i, nu));
        }
        cur.assign(next.begin(), next.end());
    }
    return out;
}

} // namespace liekit
