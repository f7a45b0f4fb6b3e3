#pragma once

#include <cstdint>
#include <vector>

#include "liekit/linalg.hpp"
#include "liekit/polynomial.hpp"
#include "liekit/rootsys.hpp"

namespace liekit {

constexpr std::size_t kDefaultOrbitCap = 10'000'000;

// A word s_{a_1} s_{a_2} ... s_{a_k} in the simple reflections, letters 1-based.
// It acts right to left: s_{a_k} is applied first.
struct WeylWord {
    std::vector<int> letters;

    WeylWord inverse() const { return {std::vector<int>(letters.rbegin(), letters.rend())}; }
    friend WeylWord operator*(const WeylWord& u, const WeylWord& v)
    {
        WeylWord w = u;
        w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
        return w;
    }
    friend bool operator==(const WeylWord&, const WeylWord&) = default;
};

// Action on weights (fundamental coordinates) and roots (simple-root coordinates).
IVec act(const RootSystem& rs, const WeylWord& w, IVec weight);
QVec act(const RootSystem& rs, const WeylWord& w, QVec weight);
IVec act_on_root(const RootSystem& rs, const WeylWord& w, IVec root);

// Matrix whose column j is w(omega_j); two words are the same element iff equal.
IMatrix action_matrix(const RootSystem& rs, const WeylWord& w);
bool same_element(const RootSystem& rs, const WeylWord& u, const WeylWord& v);

// #{alpha > 0 : w(alpha) < 0}
std::size_t length(const RootSystem& rs, const WeylWord& w);
inline int sign(const RootSystem& rs, const WeylWord& w) { return length(rs, w) % 2 ? -1 : 1; }

// s_alpha for an arbitrary root, on roots: beta - <beta, alpha^vee> alpha.
IVec reflect_by_root(const RootSystem& rs, const IVec& alpha, const IVec& beta);

struct Dominant {
    IVec weight;
    WeylWord word; // act(word, input) == weight
    int sign;
};
struct DominantQ {
    QVec weight;
    WeylWord word;
    int sign;
};

// Greedy descent: while some coordinate is negative apply the first such s_i.
Dominant to_dominant(const RootSystem& rs, IVec weight);
DominantQ to_dominant(const RootSystem& rs, QVec weight);

struct LongestElement {
    WeylWord word;
    // -w0(omega_i) = omega_{sigma[i]}, 0-based.
    std::vector<int> diagram_automorphism;
};

LongestElement longest_element(const RootSystem& rs);

// Full orbit, sorted lexicographically. Throws OrbitTooLarge past the cap.
std::vector<IVec> orbit(const RootSystem& rs, const IVec& weight, std::size_t cap = kDefaultOrbitCap);
std::vector<QVec> orbit(const RootSystem& rs, const QVec& weight, std::size_t cap = kDefaultOrbitCap);
std::size_t orbit_size(const RootSystem& rs, const IVec& weight, std::size_t cap = kDefaultOrbitCap);

// Sum over w of q^{l(w)}, by walking the regular orbit layer by layer.
IntPoly length_generating_function(const RootSystem& rs, std::size_t cap = kDefaultOrbitCap);
Integer group_order(const RootSystem& rs, std::size_t cap = kDefaultOrbitCap);

// One reduced word per group element, in order of length. Small groups only.
std::vector<WeylWord> enumerate_elements(const RootSystem& rs, std::size_t cap = 100'000);

} // namespace liekit
