#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liekit/rootsys.hpp"

namespace liekit {

// Dynkin type, a diagram involution sigma (0-based vertex permutation) and the
// colors of the sigma-fixed vertices. black[i] must be false off the fixed set.
struct VoganDiagram {
    CartanType type;
    std::vector<int> sigma;
    std::vector<bool> black;

    bool inner() const;
    friend bool operator==(const VoganDiagram&, const VoganDiagram&) = default;
};

// Compact inner-class diagram with the given black vertices (0-based).
VoganDiagram inner_diagram(CartanType type, const std::vector<int>& black = {});
// The standard nontrivial involution: chain reversal for A_r (r >= 2), swap of the
// two short legs for D_r, the reflection of E6. nullopt for the other types.
std::optional<std::vector<int>> diagram_involution(CartanType type);

// Throws BadInvolution / BadColoring.
void validate(const VoganDiagram& vd);

// Toggle every fixed vertex i with a_{ji} odd, j the black vertex. Throws NotBlack.
VoganDiagram flip(const VoganDiagram& vd, int j);

struct CanonicalForm {
    VoganDiagram rep; // lexicographically smallest coloring, white < black
    std::size_t orbit_size;
};
CanonicalForm canonical_form(const VoganDiagram& vd);
std::vector<VoganDiagram> flip_orbit(const VoganDiagram& vd);
// Shortest sequence of flipped vertices from a to b, if equivalent.
std::optional<std::vector<int>> flip_path(const VoganDiagram& a, const VoganDiagram& b);

struct FixedDims {
    std::size_t dim_k = 0, dim_p = 0;
    std::size_t rank_k = 0;
};
// Inner class: dim k = rank + #{roots with (-1)^{sum n_i c_i} = 1}. Outer class:
// tabulated; throws OuterNotTabulated outside those tables.
FixedDims fixed_subalgebra_dims(const VoganDiagram& vd);

struct RealFormDescriptor {
    std::string name;   // so(5,4), su(2,1), E8^1, ...
    std::string k;      // fixed subalgebra, e.g. "e7+sl2"
    std::size_t dim_k = 0, dim_p = 0, rank_k = 0;
    bool inner = true;
    VoganDiagram rep;
    std::size_t class_size = 0;

    // Killing form signature (positive, negative) = (dim p, dim k).
    std::pair<std::size_t, std::size_t> signature() const { return {dim_p, dim_k}; }
};

// Types A-D only; throws Unclassified otherwise.
RealFormDescriptor classify_classical(const VoganDiagram& vd);
// Any diagram of a simple type.
RealFormDescriptor classify(const VoganDiagram& vd);

// All vertex permutations preserving the Cartan matrix.
std::vector<std::vector<int>> diagram_automorphisms(CartanType type);

// One descriptor per real form: flip classes, merged when a diagram automorphism
// commuting with sigma relates them; inner classes first.
std::vector<RealFormDescriptor> enumerate_real_forms(CartanType type);

// {"type":"F4","involution":[1,2,3,4],"colors":{"1":"black"}}, 1-based.
VoganDiagram vogan_from_json(const std::string& text);
std::string vogan_to_json(const VoganDiagram& vd);
std::string coloring_string(const VoganDiagram& vd); // o for white, * for black, - for swapped

} // namespace liekit
